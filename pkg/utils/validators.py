"""Input validation helpers for the command line.

Validation keeps bad input away from the engines and gives short, readable messages.

We validate:
- partitions ("2,2,0")
- partition tails ("1,0")
- bounded integers (n, indices, sweep bounds)

Each validator returns (ok, message); the parse_* helpers raise ValueError with that message.
"""

from __future__ import annotations

from typing import Tuple

from backend.lattice.partition import Partition


def validate_partition_text(text: str) -> Tuple[bool, str]:
    """Comma-separated, weakly decreasing, nonnegative parts; trailing zeros count."""

    cleaned = (text or "").strip()
    if not cleaned:
        return False, "Partition is empty; use e.g. 2,2,0."

    try:
        Partition.parse(cleaned)
    except ValueError as exc:
        return False, str(exc)

    return True, ""


def validate_int(value: int, name: str, minimum: int = 0, maximum: int | None = None) -> Tuple[bool, str]:
    if value < minimum:
        return False, f"{name} must be at least {minimum} (got {value})."

    if maximum is not None and value > maximum:
        return False, f"{name} must be at most {maximum} (got {value})."

    return True, ""


def parse_partition(text: str) -> Partition:
    ok, msg = validate_partition_text(text)
    if not ok:
        raise ValueError(msg)
    return Partition.parse(text.strip())


def parse_tail(text: str, n: int) -> Tuple[int, ...]:
    """lambda_2, ..., lambda_n for a given n."""

    ok, msg = validate_int(n, "n", minimum=2)
    if not ok:
        raise ValueError(msg)

    tail = parse_partition(text).parts
    if len(tail) != n - 1:
        raise ValueError(f"The tail for n={n} needs {n - 1} parts (got {len(tail)}).")
    return tail


def require_int(value: int, name: str, minimum: int = 0, maximum: int | None = None) -> int:
    ok, msg = validate_int(value, name, minimum, maximum)
    if not ok:
        raise ValueError(msg)
    return value
