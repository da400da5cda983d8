"""Exact polynomial and rational-function algebra (sympy over QQ)."""
