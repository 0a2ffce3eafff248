"""Number formatting for reports."""

from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, places: int) -> Decimal:
    """Round half away from zero (for the non-negative scores used here)."""
    quantum = Decimal(1).scaleb(-places)
    return Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP)


def format_display(value: float) -> str:
    """One-decimal display value: 9.0949 -> "9.1"."""
    return str(round_half_up(value, 1))


def format_compact(value: float, places: int = 3) -> str:
    """Round to `places` decimals and drop trailing zeros: 0.3125 -> "0.313", 1.0 -> "1"."""
    rounded = round_half_up(value, places)
    if rounded == rounded.to_integral_value():
        return str(rounded.to_integral_value())
    return str(rounded.normalize())
