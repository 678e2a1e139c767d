from .validation_service import ValidationError, ValidationResponse, ValidationService

__all__ = ["ValidationError", "ValidationResponse", "ValidationService"]
