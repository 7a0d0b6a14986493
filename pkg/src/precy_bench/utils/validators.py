"""Input validators shared by models and schemas."""

from collections.abc import Iterable

from precy_bench.utils.exceptions import ValidationError

REPORT_FORMATS: tuple[str, ...] = ("text", "json")
ULTRA_MODES: tuple[str, ...] = ("generators", "full")


def validate_distinct_symbols(symbols: Iterable[str]) -> None:
    """Raise if a basis symbol is repeated or empty."""
    seen: set[str] = set()
    for symbol in symbols:
        if not symbol:
            raise ValidationError("Basis symbols must be non-empty")
        if symbol in seen:
            raise ValidationError(f"Duplicate basis symbol: {symbol!r}")
        seen.add(symbol)


def validate_report_format(value: str) -> str:
    """Normalize and check a report format name."""
    lowered: str = value.lower()
    if lowered not in REPORT_FORMATS:
        raise ValueError(
            f"Invalid report format: {value}. Must be one of {list(REPORT_FORMATS)}"
        )
    return lowered


def validate_ultra_mode(value: str) -> str:
    """Normalize and check a permutation mode name."""
    lowered: str = value.lower()
    if lowered not in ULTRA_MODES:
        raise ValidationError(
            f"Invalid permutation mode: {value}. Must be one of {list(ULTRA_MODES)}"
        )
    return lowered
