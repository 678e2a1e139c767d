from fractions import Fraction

from ..datamodel import HardwareProfile

MICROSECONDS_PER_SECOND = Fraction(10**6)
PENALTY_RANGE = (Fraction(2), Fraction(10))


def logical_entanglement_rate(profile: HardwareProfile) -> Fraction:
    """Distilled logical Bell pairs per second."""
    return profile.raw_bell_rate_hz * profile.distillation_yield


def local_logical_cycle_us(profile: HardwareProfile) -> Fraction:
    """One local logical operation takes d physical code cycles."""
    return profile.code_distance * profile.code_cycle_us


def network_penalty(profile: HardwareProfile) -> Fraction:
    """
    Ratio of remote to local logical operation time.

    Reduces to 30/d at the default rates (1e5 Hz raw, 1/3 yield, 1 us code cycle).

    Raises:
        ValueError: if code_distance or any rate is not positive.
    """
    if profile.code_distance <= 0:
        raise ValueError(f"code_distance must be positive, got {profile.code_distance}")
    rate = logical_entanglement_rate(profile)
    if rate <= 0 or profile.code_cycle_us <= 0:
        raise ValueError("entanglement rate and code cycle time must be positive")
    remote_us = MICROSECONDS_PER_SECOND / rate
    return remote_us / local_logical_cycle_us(profile)
