import re
from typing import Optional, Union

_UNITS = {
    "s": 1,
    "m": 60,
    "h": 60 * 60,
    "d": 60 * 60 * 24,
    "w": 60 * 60 * 24 * 7,
}

_TOKEN = re.compile(r"(\d+)([smhdw])")


def parse_duration(value: Union[None, int, float, str]) -> Optional[float]:
    """Convert a validity duration to seconds.

    Numbers are taken as seconds (negative means "never expires" and maps to
    None), strings are sequences of `\\d+[smhdw]` tokens such as `90s`, `2d`
    or `1h30m`."""
    if value is None:
        return None

    if isinstance(value, (int, float)):
        if value >= 0:
            return value
        return None

    value = value.strip().replace(" ", "")
    if value == "":
        return None

    if not re.fullmatch(r"(\d+[smhdw])+", value):
        raise ValueError(
            "The time delta %s does not match the regex (\\d+[smhdw])+" % value
        )

    return sum(
        int(number) * _UNITS[unit]
        for number, unit in _TOKEN.findall(value)
    )
