"""Six-vertex lattices: partitions, boundary specifications, states, ASM conversion."""
