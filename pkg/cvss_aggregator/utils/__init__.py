"""
Utilities Module.
"""

from .logger import Logger
from .formatting import round_half_up, format_display, format_compact

__all__ = ["Logger", "round_half_up", "format_display", "format_compact"]
