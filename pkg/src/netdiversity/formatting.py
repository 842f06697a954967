"""Stable text rendering shared by every serializer."""

import json
import math

SIGNIFICANT_DIGITS = 9


def fmt_float(x):
    """Fixed 9-significant-digit text; ``None`` renders as an empty field."""
    if x is None:
        return ""
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{SIGNIFICANT_DIGITS}g}"


def json_value(x):
    """Round floats to 9 significant digits; infinities become ``"inf"``."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(x, dict):
        return {k: json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [json_value(v) for v in x]
    return x


def dump_json(obj):
    return json.dumps(json_value(obj), indent=2, allow_nan=False) + "\n"


def csv_text(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(fmt_float(v) if not isinstance(v, str) else v for v in row) for row in rows)
    return "\n".join(lines) + "\n"
