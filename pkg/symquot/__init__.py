"""symquot – exact computations for linear symplectic torus quotients."""

__version__ = "1.0.0"
