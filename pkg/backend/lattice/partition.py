"""Integer partitions that drive the top boundary of the lattice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers (lambda_1, ..., lambda_n).

    Trailing zeros are significant: they set n, the number of lattice rows.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)

        if not parts:
            raise ValueError("A partition needs at least one part.")
        if any(p < 0 for p in parts):
            raise ValueError(f"Partition parts cannot be negative: {parts}.")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}.")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse `"2,2,0"` (most significant part first)."""

        raw = [t.strip() for t in (text or "").split(",")]
        if not raw or any(not t for t in raw):
            raise ValueError(f"Malformed partition string: {text!r}.")
        try:
            return cls(tuple(int(t) for t in raw))
        except ValueError as exc:
            if "partition" in str(exc).lower():
                raise
            raise ValueError(f"Malformed partition string: {text!r}.") from exc

    @classmethod
    def zero(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @classmethod
    def hook(cls, n: int, m: int, d: int = 0) -> "Partition":
        """(m+d, d, ..., d) with n parts."""

        return cls((m + d,) + (d,) * (n - 1))

    @classmethod
    def staircase(cls, n: int, lambda1: int, d: int = 0) -> "Partition":
        """(lambda1+d, n-2+d, ..., 1+d, d); needs lambda1 >= n-1."""

        if lambda1 < n - 1:
            raise ValueError(f"Staircase needs lambda1 >= n-1 (got lambda1={lambda1}, n={n}).")
        if n == 1:
            return cls((lambda1 + d,))
        return cls((lambda1 + d,) + tuple(n - i + d for i in range(2, n + 1)))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def lambda1(self) -> int:
        return self.parts[0]

    @property
    def lambda2(self) -> int:
        if self.n < 2:
            raise ValueError("lambda_2 needs a partition with at least two parts.")
        return self.parts[1]

    @property
    def tail(self) -> Tuple[int, ...]:
        return self.parts[1:]

    @property
    def rho(self) -> Tuple[int, ...]:
        return tuple(range(self.n, 0, -1))

    @property
    def plus_rho(self) -> Tuple[int, ...]:
        """lambda + rho: strictly decreasing column labels of the Up arrows."""

        return tuple(p + r for p, r in zip(self.parts, self.rho))

    @property
    def width(self) -> int:
        """Number of lattice columns, n + lambda_1."""

        return self.n + self.lambda1

    def shifted(self, d: int) -> "Partition":
        """lambda + d * (1, ..., 1)."""

        return Partition(tuple(p + d for p in self.parts))

    def with_lambda1(self, lambda1: int) -> "Partition":
        return Partition((lambda1,) + self.tail)

    def is_hook(self) -> bool:
        return all(p == self.parts[-1] for p in self.tail)

    def is_staircase(self) -> bool:
        """(lambda1+d, n-2+d, ..., d) with lambda1 >= n-1."""

        d = self.parts[-1]
        if self.n == 1:
            return True
        steps_ok = all(self.parts[i] == self.n - 1 - i + d for i in range(1, self.n))
        return steps_ok and self.lambda1 - d >= self.n - 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def iter_partitions(n: int, max_part: int) -> Iterator[Partition]:
    """All partitions with exactly n parts (zeros allowed) and lambda_1 <= max_part."""

    def _rec(prefix: Tuple[int, ...], bound: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for p in range(bound, -1, -1):
            yield from _rec(prefix + (p,), p)

    for parts in _rec((), max_part):
        yield Partition(parts)
