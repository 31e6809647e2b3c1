"""Triply graded link homology of braid closures.

Computes reduced HOMFLY homology and its sl(N) specializations for closures
of braid words, wall-crossing maps between the homologies of words differing
in one crossing, and the iterated-cone homology of singular braid words
(categorified Vassiliev derivatives).  A Hecke-algebra trace oracle provides
independent Euler-characteristic checks.

Everything is exact: coefficients are rationals, gradings are integers, and
all homology is computed degree by degree with fraction-free linear algebra.
"""

__version__ = "0.1.0"
