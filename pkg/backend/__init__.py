"""Backend package.

We keep all non-CLI logic here:
- lattice types and boundary conditions
- enumeration engines
- closed formulas and exact algebra
- verification sweeps and run reports

Command pages live in ui/.
"""
