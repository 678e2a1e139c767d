from .rational import Rational, format_rational, parse_rational

__all__ = ["Rational", "format_rational", "parse_rational"]
