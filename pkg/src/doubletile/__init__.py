"""Double lattice tiles of polyominoes: generation, reduction and certification."""

__version__ = "0.1.0"
