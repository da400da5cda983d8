"""Exact closed-form counting formulas over integers and rationals."""
