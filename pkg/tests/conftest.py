import random
from fractions import Fraction

import pytest

from harmonic2v import Polynomial, parse_poly
from harmonic2v.operators import mul_inner_ux, mul_normsq_u, mul_normsq_x


@pytest.fixture
def rng():
    return random.Random(20240817)


def poly(text: str, m: int) -> Polynomial:
    return parse_poly(text, m)


def one(m: int) -> Polynomial:
    return Polynomial.constant(m, 1)


def normsq_x(m: int) -> Polynomial:
    return mul_normsq_x(one(m))


def normsq_u(m: int) -> Polynomial:
    return mul_normsq_u(one(m))


def inner_ux(m: int) -> Polynomial:
    return mul_inner_ux(one(m))


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)
