import math

from pydash import camel_case


def format_dict_key_to_camel_case(key: str) -> str:
    return camel_case(key)


def format_float(value: float) -> str:
    """shortest text that parses back to the same double."""
    return repr(float(value))


def format_percentage_delta(value: float, baseline: float) -> str:
    """relative change against the baseline, negative meaning an improvement."""
    if baseline == 0:
        return "0.00%" if value == 0 else "n/a"
    delta = (value - baseline) / baseline * 100.0
    if math.isclose(delta, 0.0, abs_tol=5e-3):
        return "0.00%"
    return f"{delta:+.2f}%".replace("-", "−")
