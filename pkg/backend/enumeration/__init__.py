"""Exact state counting: backtracking search and row-transfer dynamic programming.

- backtrack: depth-first search, state stream, parallel split
- row_dp: bitmask transfer over horizontal cuts
- enumeration_service: engine selection and partition-model counts
"""
