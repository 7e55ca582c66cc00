"""Shared random generators for the test suite.

Coefficients stay small (numerators in a narrow band, denominators from
{1, 2, 3}) so exact arithmetic never blows up mid-suite.
"""

from fractions import Fraction

from liepencil.exact import RatMatrix

DENOMINATORS = (1, 1, 2, 3)


def rand_rat(rng, lo=-6, hi=6):
    return Fraction(rng.randint(lo, hi), rng.choice(DENOMINATORS))


def rand_vector(rng, n, lo=-6, hi=6):
    return [rand_rat(rng, lo, hi) for _ in range(n)]


def rand_matrix(rng, n, lo=-6, hi=6):
    return RatMatrix([[rand_rat(rng, lo, hi) for _ in range(n)]
                      for _ in range(n)])
