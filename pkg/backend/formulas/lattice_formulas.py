"""Closed forms for the auxiliary lattices of the decomposition."""

from __future__ import annotations

from backend.formulas.binomial import binom


def path_count(r: int, c: int) -> int:
    """S(r, c) = T(r, c) = C(r+c-2, c-1)."""

    if r < 1 or c < 1:
        raise ValueError(f"path_count needs r, c >= 1 (got {r}, {c}).")
    return binom(r + c - 2, c - 1)


def l_count(m: int, j: int) -> int:
    """L(m, j) = C(m+j-1, m)."""

    if m < 0 or j < 1:
        raise ValueError(f"l_count needs m >= 0 and j >= 1 (got m={m}, j={j}).")
    return binom(m + j - 1, m)
