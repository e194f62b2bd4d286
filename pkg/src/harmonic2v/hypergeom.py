"""Exact evaluation of terminating generalized hypergeometric sums, and machine
verification of the contiguous, Whipple and vanishing-sum identities that
certify the cell-projection weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import GammaPole, IndexOutOfRange, LowerParameterPole, NonTerminating
from .rationals import rising


@dataclass(frozen=True)
class PFQSpec:
    """A terminating pFq(upper; lower; z) with rational parameters."""

    upper: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...]
    argument: Fraction = Fraction(1)

    @staticmethod
    def of(upper: Sequence, lower: Sequence, argument=1) -> "PFQSpec":
        return PFQSpec(
            tuple(Fraction(a) for a in upper),
            tuple(Fraction(b) for b in lower),
            Fraction(argument),
        )

    def termination_index(self) -> int:
        """Smallest N with some upper parameter equal to -N."""
        candidates = [-a for a in self.upper if a <= 0 and a.denominator == 1]
        if not candidates:
            raise NonTerminating(f"no non-positive integer among upper parameters {self.upper}")
        return int(min(candidates))

    def balance(self) -> Fraction:
        """k such that the series is k-balanced: sum(lower) - sum(upper)."""
        return sum(self.lower, Fraction(0)) - sum(self.upper, Fraction(0))


def eval_pfq(spec: PFQSpec) -> Fraction:
    """Exact value of a terminating pFq as a finite sum of factorial ratios."""
    n = spec.termination_index()
    for b in spec.lower:
        if b <= 0 and b.denominator == 1 and -b < n:
            raise LowerParameterPole(f"lower parameter {b} hits zero before termination at {n}")
    total = Fraction(0)
    term = Fraction(1)
    for j in range(n + 1):
        total += term
        if j == n:
            break
        ratio = spec.argument / (j + 1)
        for a in spec.upper:
            ratio *= a + j
        for b in spec.lower:
            ratio /= b + j
        term *= ratio
    return total


def f43(upper, lower, z=1) -> Fraction:
    return eval_pfq(PFQSpec.of(upper, lower, z))


def verify_contiguous(a, b, c, d, e, f, g) -> bool:
    """Three-term relation shifting one lower parameter of a terminating 4F3(1).

    A vanishing upper-parameter product zeroes the shifted series' coefficient,
    so that (possibly non-terminating) series is never evaluated.
    """
    a, b, c, d, e, f, g = map(Fraction, (a, b, c, d, e, f, g))
    lhs = f43((a, b, c, d), (e - 1, f, g))
    rhs = f43((a, b, c, d), (e, f, g))
    coeff = (a * b * c * d) / ((e - 1) * e * f * g)
    if coeff:
        rhs += coeff * f43((a + 1, b + 1, c + 1, d + 1), (e + 1, f + 1, g + 1))
    return lhs == rhs


def verify_whipple(a, b, z, n, u, v, w) -> bool:
    """Whipple's transformation of a 1-balanced terminating 4F3(1).

    Requires n a non-negative integer; the Gamma-ratio prefactor reduces to a
    quotient of upper factorials since its arguments differ by n.
    """
    a, b, z, u, v, w = map(Fraction, (a, b, z, u, v, w))
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    balance = (u + v + w) - (a + b - z - n)
    if balance != 1:
        raise ValueError(f"series is {balance}-balanced; Whipple needs 1-balanced")
    den_v = rising(v, n)
    den_w = rising(w, n)
    if not den_v or not den_w:
        raise GammaPole("prefactor denominator hits a non-positive integer")
    prefactor = rising(v + z, n) * rising(w + z, n) / (den_v * den_w)
    lhs = f43((a, b, -z, -n), (u, v, w))
    rhs = prefactor * f43(
        (u - a, u - b, -z, -n), (u, 1 - v - z - n, 1 - w - z - n)
    )
    return lhs == rhs


def verify_product_transformation(a, b, c, n, z) -> bool:
    """Product/difference identity linking 3F2 and 4F3 values at argument z.

    The n = 1 case makes the right-hand 4F3 non-terminating behind a zero
    coefficient; the zero short-circuits so the series is never evaluated.
    """
    a, b, c, z = map(Fraction, (a, b, c, z))
    if int(n) != n or n < 1:
        raise ValueError("n must be a positive integer")
    n = int(n)
    first = eval_pfq(PFQSpec.of((-1, a + c, b - c), (a + n, b + n), z))
    second = (
        Fraction(1)
        if n == 1
        else f43((-n + 1, a + b + n + 1, a + c, b - c), (a + 1, b + 1, a + b + 1), z)
    )
    third = f43((-n, a + b + n, a + c, b - c), (a + 1, b + 1, a + b + 1), z)
    lhs = first * second - third
    coeff = (
        z
        * (z - 1)
        * (1 - n)
        * (a + b + n + 1)
        * (a + c)
        * (b - c)
        / ((a + 1) * (b + 1) * (a + n) * (b + n))
    )
    if not coeff:
        rhs = Fraction(0)
    else:
        rhs = coeff * f43(
            (-n + 2, a + b + n + 2, a + c + 1, b - c + 1), (a + 2, b + 2, a + b + 1), z
        )
    return lhs == rhs


def verify_unit_argument_product(a, b, c, n) -> bool:
    """The z = 1 specialization: the shifted 4F3 absorbs a two-term 3F2 factor."""
    a, b, c = map(Fraction, (a, b, c))
    if int(n) != n or n < 1:
        raise ValueError("n must be a positive integer")
    n = int(n)
    lhs = f43((-n, a + b + n, a + c, b - c), (a + 1, b + 1, a + b + 1))
    factor = 1 - (a + c) * (b - c) / ((a + n) * (b + n))
    second = (
        Fraction(1)
        if n == 1
        else f43((-n + 1, a + b + n + 1, a + c, b - c), (a + 1, b + 1, a + b + 1))
    )
    closed_form_ok = factor == eval_pfq(PFQSpec.of((-1, a + c, b - c), (a + n, b + n), 1))
    return closed_form_ok and lhs == factor * second


# -- the vanishing sum certifying the master projection -----------------------------


def g_sum(k: int, l: int, i: int, j: int, m: int) -> Fraction:
    """Total weight the cell projection assigns to the ladder cell (i, j).

    Summand (a, b): cell-chain constant of A^a S_x^b at the cell's harmonic
    label, times the projection weight at the ambient bidegree, times the
    re-embedding factor (K-i-1)^(b) / (K-a-1)^(b) from commuting S_u^b past
    C^{i-a}.  Equals 1 at (i, j) = (0, 0) and 0 on every other cell.
    """
    from .decomp import ladder_alpha, projection_weight

    if not k >= l >= 0:
        raise IndexOutOfRange(f"need k >= l >= 0, got ({k}, {l})")
    if i < 0 or j < 0 or i + j > l:
        raise IndexOutOfRange(f"cell ({i},{j}) outside the ladder of bidegree ({k},{l})")
    tk, tl = k - i + j, l - i - j
    big_k = Fraction(k) + Fraction(m, 2)
    total = Fraction(0)
    for a in range(i + 1):
        for b in range(j + 1):
            alpha = ladder_alpha(i, j, a, b, tk, tl, m)
            if not alpha:
                continue
            beta = projection_weight(a, b, k, l, m)
            rho = rising(big_k - i - 1, b) / rising(big_k - a - 1, b)
            total += alpha * beta * rho
    return total


def verify_g_vanishes(k: int, l: int, i: int, j: int, m: int) -> bool:
    """True iff the projection kills the (i, j) cell: the double sum is zero."""
    if i + j < 1:
        raise IndexOutOfRange("the vanishing claim concerns cells with i + j >= 1")
    return g_sum(k, l, i, j, m) == 0
