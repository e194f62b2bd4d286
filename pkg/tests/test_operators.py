from fractions import Fraction

import pytest

from harmonic2v import (
    ATOM_SHIFT,
    AtomKind,
    EulerRational,
    LinearOperator,
    Polynomial,
    ZeroDenominator,
    apply_atom,
    commutator_check,
)
from harmonic2v.operators import laplacian_x
from harmonic2v.sampling import random_bihomogeneous, random_polynomial, seeded
from harmonic2v.transvector import GeneratorTag, apply_generator, extremal_projection_s

from conftest import inner_ux, normsq_x, one, poly


def test_cross_dd_on_inner_ux():
    m = 5
    assert apply_atom(AtomKind.CROSS_DD, inner_ux(m)) == Polynomial.constant(m, m)


def test_laplacian_on_square():
    assert apply_atom(AtomKind.LAPLACIAN_X, poly("x1^2", 5)) == Polynomial.constant(5, 2)


def test_scaled_term_uses_image_bidegree():
    # Hand application: CROSS_DD sends x1*u1 to 1, NORMSQ_X lifts it to |x|^2
    # sitting at bidegree (2, 0), so the scale 1/(2 E_x + m - 4) evaluates to
    # 1/(2*2 + 6 - 4) = 1/6 there.
    m = 6
    scale = EulerRational.constant(1) / (
        EulerRational.constant(2) * EulerRational.euler_x() + EulerRational.constant(m - 4)
    )
    op = LinearOperator.from_terms(m, [(scale, (AtomKind.NORMSQ_X, AtomKind.CROSS_DD))])
    got = op.apply(poly("x1*u1", m))
    assert got == normsq_x(m).scaled(Fraction(1, 6))


def test_image_bidegree_convention_preserves_double_harmonics():
    # The skew generator S_x built with this convention must keep its image in
    # ker(Delta_x); evaluating the scale at the source bidegree would not.
    rng = seeded(5)
    for _ in range(5):
        h = extremal_projection_s(random_bihomogeneous(6, 3, 2, rng))
        image = apply_generator(GeneratorTag.S_X, h)
        assert laplacian_x(image).is_zero()


def test_atom_bidegree_signatures(rng):
    for m in (5, 6):
        for _ in range(5):
            k, l = rng.randint(0, 3), rng.randint(0, 3)
            p = random_bihomogeneous(m, k, l, rng)
            for kind, (dk, dl) in ATOM_SHIFT.items():
                image = apply_atom(kind, p)
                if not image.is_zero():
                    assert image.bidegree() == (k + dk, l + dl)


def test_apply_is_linear(rng):
    m = 5
    op = LinearOperator.from_terms(
        m,
        [
            (EulerRational.euler_x() + 1, (AtomKind.SKEW_XU,)),
            (Fraction(1, 3), (AtomKind.NORMSQ_X, AtomKind.CROSS_DD)),
        ],
    )
    p = random_polynomial(m, 3, 3, rng)
    q = random_polynomial(m, 3, 3, rng)
    alpha, beta = Fraction(2, 3), Fraction(-5, 7)
    assert op.apply(p.scaled(alpha) + q.scaled(beta)) == op.apply(p).scaled(alpha) + op.apply(
        q
    ).scaled(beta)


def test_compose_euler_with_normsq():
    m = 5
    op = LinearOperator.atom(m, AtomKind.EULER_X).compose(LinearOperator.atom(m, AtomKind.NORMSQ_X))
    assert op.apply(one(m)) == normsq_x(m).scaled(2)


def test_compose_with_identity(rng):
    m = 5
    op = LinearOperator.from_terms(
        m, [(EulerRational.euler_u(), (AtomKind.SKEW_UX, AtomKind.NORMSQ_X))]
    )
    ident = LinearOperator.identity(m)
    for _ in range(5):
        p = random_polynomial(m, 3, 3, rng)
        assert ident.compose(op).apply(p) == op.apply(p)
        assert op.compose(ident).apply(p) == op.apply(p)


def test_compose_matches_sequential_application(rng):
    m = 5
    a = LinearOperator.from_terms(
        m, [(EulerRational.euler_x() + 2, (AtomKind.LAPLACIAN_X, AtomKind.NORMSQ_U))]
    )
    b = LinearOperator.from_terms(
        m,
        [
            (Fraction(1, 2), (AtomKind.SKEW_XU,)),
            (EulerRational.constant(1) / (EulerRational.euler_u() + 1), (AtomKind.INNER_UX,)),
        ],
    )
    for _ in range(6):
        p = random_polynomial(m, 3, 3, rng)
        assert a.compose(b).apply(p) == a.apply(b.apply(p))


def test_laplacian_normsq_commutator(rng):
    # [Delta_x, |x|^2] = 4 E_x + 2m
    m = 5
    lap = LinearOperator.atom(m, AtomKind.LAPLACIAN_X)
    norm = LinearOperator.atom(m, AtomKind.NORMSQ_X)
    rhs = LinearOperator.from_terms(
        m, [(EulerRational.euler_x() * 4 + EulerRational.constant(2 * m), ())]
    )
    samples = [random_polynomial(m, 3, 3, rng) for _ in range(20)]
    assert commutator_check(lap, norm, rhs, samples)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_basic_skew_commutators(rng, a):
    # [<d_u,d_x>, |x|^{2a}] = 2a |x|^{2(a-1)} <x,d_u>, and its three companions
    m = 5
    cross = LinearOperator.atom(m, AtomKind.CROSS_DD)
    normx_a = LinearOperator.identity(m)
    for _ in range(a):
        normx_a = normx_a.compose(LinearOperator.atom(m, AtomKind.NORMSQ_X))
    rhs_atoms = (AtomKind.NORMSQ_X,) * (a - 1) + (AtomKind.SKEW_XU,)
    rhs = LinearOperator.from_terms(m, [(Fraction(2 * a), rhs_atoms)])
    samples = [random_polynomial(m, 3, 3, rng) for _ in range(20)]
    assert commutator_check(cross, normx_a, rhs, samples)

    normu_a = LinearOperator.identity(m)
    for _ in range(a):
        normu_a = normu_a.compose(LinearOperator.atom(m, AtomKind.NORMSQ_U))
    rhs_u = LinearOperator.from_terms(
        m, [(Fraction(2 * a), (AtomKind.NORMSQ_U,) * (a - 1) + (AtomKind.SKEW_UX,))]
    )
    assert commutator_check(cross, normu_a, rhs_u, samples)

    skew = LinearOperator.atom(m, AtomKind.SKEW_XU)
    lap_a = LinearOperator.identity(m)
    for _ in range(a):
        lap_a = lap_a.compose(LinearOperator.atom(m, AtomKind.LAPLACIAN_X))
    rhs2 = LinearOperator.from_terms(
        m, [(Fraction(-2 * a), (AtomKind.LAPLACIAN_X,) * (a - 1) + (AtomKind.CROSS_DD,))]
    )
    assert commutator_check(skew, lap_a, rhs2, samples)

    skew_u = LinearOperator.atom(m, AtomKind.SKEW_UX)
    lap_u_a = LinearOperator.identity(m)
    for _ in range(a):
        lap_u_a = lap_u_a.compose(LinearOperator.atom(m, AtomKind.LAPLACIAN_U))
    rhs3 = LinearOperator.from_terms(
        m, [(Fraction(-2 * a), (AtomKind.LAPLACIAN_U,) * (a - 1) + (AtomKind.CROSS_DD,))]
    )
    assert commutator_check(skew_u, lap_u_a, rhs3, samples)


def test_laplacians_commute(rng):
    m = 5
    lx = LinearOperator.atom(m, AtomKind.LAPLACIAN_X)
    lu = LinearOperator.atom(m, AtomKind.LAPLACIAN_U)
    zero = LinearOperator.from_terms(m, [])
    samples = [random_polynomial(m, 4, 4, rng) for _ in range(20)]
    assert commutator_check(lx, lu, zero, samples)


def test_zero_denominator_reports_bidegree():
    m = 5
    scale = EulerRational.constant(1) / (EulerRational.euler_x() - 2)
    op = LinearOperator.from_terms(m, [(scale, ())])
    with pytest.raises(ZeroDenominator) as err:
        op.apply(poly("x1^2", m))
    assert err.value.bidegree == (2, 0)
