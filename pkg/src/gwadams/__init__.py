"""Exact symbolic computation for lambda-operations on graded Witt-style
coefficient rings, universal lambda-ring polynomials, and bilinear form
constructions, with machine-verification suites."""

__version__ = "0.1.0"
