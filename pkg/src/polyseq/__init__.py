"""Exact computation and identity checking for poly-Bernoulli polynomials,
poly-Euler numbers, weighted Stirling polynomials and r-Eulerian polynomials."""

from fractions import Fraction

from polyseq.exact import X, Poly, binom, pochhammer, poly_eval

__all__ = ["Fraction", "Poly", "X", "binom", "pochhammer", "poly_eval"]
__version__ = "0.1.0"
