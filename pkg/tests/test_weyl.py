"""Engine invariants: normal forms, products, localization, adjoints."""

import random
from fractions import Fraction

import pytest

from spinlrl import oracle, weyl
from spinlrl.coeff import G_I, GaussianRational, P_ALPHA, P_E, P_I, P_ONE, ParamPoly
from spinlrl.weyl import (
    DimensionMismatch,
    OperatorExpr,
    adjoint,
    anticommutator,
    commutator,
    divide_xpoly_by_r2,
    linear_combine,
    multiply,
    normalize,
)

I = GaussianRational(0, 1)


def atoms(d):
    out = []
    for i in range(1, d + 1):
        out += [weyl.x(d, i), weyl.p(d, i), weyl.gamma(d, i)]
    out.append(weyl.rinv2(d))
    return out


def rand_operator(d, rng, factors=4, summands=2):
    pool = atoms(d)
    parts = []
    for _ in range(rng.randint(1, summands)):
        e = weyl.one(d)
        for _ in range(rng.randint(1, factors)):
            e = multiply(e, rng.choice(pool))
        coeff = ParamPoly({(rng.randint(0, 1), rng.randint(0, 1)): GaussianRational(rng.randint(-3, 3), rng.randint(-1, 1))})
        parts.append((coeff if coeff else P_ONE, e))
    return linear_combine(parts, d=d)


# -- normalization examples ---------------------------------------------------


def test_momentum_position_reorder():
    d = 2
    assert multiply(weyl.p(d, 1), weyl.x(d, 1)) == multiply(weyl.x(d, 1), weyl.p(d, 1)) - weyl.scalar(d, I)


def test_momentum_past_denominator():
    d = 2
    got = multiply(weyl.p(d, 1), weyl.rinv2(d))
    # left fraction r^-4 (r^2 p1 + 2i x1)
    assert got.denom_pow == 2
    rebuilt = multiply(multiply(weyl.rinv2(d), weyl.rinv2(d)), weyl.r_squared(d) * weyl.p(d, 1) + (2 * P_I) * weyl.x(d, 1))
    assert got == rebuilt
    # independent evidence: action on random functions agrees with composition
    for t in range(20):
        f = oracle.random_function(d, t)
        assert oracle.apply(got, f) == oracle.apply(weyl.p(d, 1), oracle.apply(weyl.rinv2(d), f))


def test_denominator_cancels_r2():
    d = 2
    assert multiply(weyl.rinv2(d), weyl.r_squared(d)) == weyl.one(d)


def test_gamma_dot_x_squares_to_r2():
    for d in (2, 3, 4):
        gx = linear_combine([(1, multiply(weyl.x(d, i), weyl.gamma(d, i))) for i in range(1, d + 1)])
        assert multiply(gx, gx) == weyl.r_squared(d)


def test_scaling_product_against_oracle():
    d = 3
    xp = linear_combine([(1, multiply(weyl.x(d, i), weyl.p(d, i))) for i in range(1, d + 1)])
    squared = multiply(xp, xp)
    for t in range(20):
        f = oracle.random_function(d, 1000 + t)
        assert oracle.apply(squared, f) == oracle.apply(xp, oracle.apply(xp, f))


# -- linear_combine ------------------------------------------------------------


def test_linear_combine_cancellation():
    d = 2
    a = rand_operator(d, random.Random(5))
    assert linear_combine([(1, a), (-1, a)]).is_zero()


def test_linear_combine_empty_needs_dimension():
    assert linear_combine([], d=3).is_zero()
    with pytest.raises(ValueError):
        linear_combine([])


# -- commutators and anticommutators --------------------------------------------


def test_canonical_commutators():
    d = 2
    assert commutator(weyl.x(d, 1), weyl.p(d, 1)) == weyl.scalar(d, I)
    assert commutator(weyl.x(d, 1), weyl.p(d, 2)).is_zero()


def test_clifford_anticommutators():
    d = 2
    assert anticommutator(weyl.gamma(d, 1), weyl.gamma(d, 2)).is_zero()
    assert anticommutator(weyl.gamma(d, 1), weyl.gamma(d, 1)) == weyl.scalar(d, 2)


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        multiply(weyl.x(2, 1), weyl.x(3, 1))


# -- zero test -------------------------------------------------------------------


def test_is_zero():
    d = 2
    assert weyl.zero(d).is_zero()
    assert not commutator(weyl.x(d, 1), weyl.p(d, 1)).is_zero()


# -- division and minimality ------------------------------------------------------


def test_xpoly_division_cases():
    d = 3
    r2 = {(2, 0, 0): P_ONE, (0, 2, 0): P_ONE, (0, 0, 2): P_ONE}
    quotient, remainder = divide_xpoly_by_r2(r2, d)
    assert quotient == {(0, 0, 0): P_ONE} and not remainder

    # x1^2 is not divisible: division writes it as 1*r^2 - x2^2
    only_x1 = {(2, 0): P_ONE}
    quotient, remainder = divide_xpoly_by_r2(only_x1, 2)
    assert remainder == {(0, 2): -P_ONE}
    assert quotient == {(0, 0): P_ONE}


def test_reduce_denominator_cases():
    d = 3
    z = (0,) * d
    # numerator sum x_i^2 at m=1 collapses to the identity
    r2_terms = {(tuple(2 if k == i else 0 for k in range(d)), z, ()): P_ONE for i in range(d)}
    assert weyl.reduce_denominator(d, r2_terms, 1) == weyl.one(d)
    # x1^2 alone is not divisible, so m stays
    stuck = weyl.reduce_denominator(2, {((2, 0), (0, 0), ()): P_ONE}, 1)
    assert stuck.denom_pow == 1
    # r^2 p1 at m=2 reduces exactly once
    r2p1 = {(tuple(2 if k == i else 0 for k in range(d)), tuple(1 if k == 0 else 0 for k in range(d)), ()): P_ONE for i in range(d)}
    reduced = weyl.reduce_denominator(d, r2p1, 2)
    assert reduced == multiply(weyl.rinv2(d), weyl.p(d, 1))
    assert reduced.denom_pow == 1
    with pytest.raises(ValueError):
        weyl.reduce_denominator(2, {}, -1)


def test_exact_factor_reduces_once():
    d = 2
    # r^-4 (r^2 p1) == r^-2 p1
    lhs = multiply(multiply(weyl.rinv2(d), weyl.rinv2(d)), weyl.r_squared(d) * weyl.p(d, 1))
    rhs = multiply(weyl.rinv2(d), weyl.p(d, 1))
    assert lhs == rhs
    assert lhs.denom_pow == 1


def test_minimality_invariant_random():
    rng = random.Random(42)
    for _ in range(150):
        d = rng.choice((2, 3))
        a = rand_operator(d, rng)
        b = rand_operator(d, rng)
        for result in (multiply(a, b), a + b, commutator(a, b)):
            if result.denom_pow > 0:
                assert weyl._try_divide_numerator(result.terms, d) is None, result


# -- confluence and associativity ---------------------------------------------------


def random_association(factors, rng, d):
    exprs = list(factors)
    while len(exprs) > 1:
        i = rng.randrange(len(exprs) - 1)
        merged = multiply(exprs[i], exprs[i + 1])
        exprs[i : i + 2] = [merged]
    return exprs[0]


@pytest.mark.parametrize("d", (2, 3, 4))
def test_confluence_random_associations(d):
    # >= 500 randomized cases per dimension
    rng = random.Random(800 + d)
    pool = atoms(d)
    for _ in range(500):
        stream = [rng.choice(pool) for _ in range(rng.randint(2, 6))]
        canonical = normalize(d, stream)
        assert random_association(stream, rng, d) == canonical


def test_confluence_sum_reordering():
    rng = random.Random(31)
    d = 2
    for _ in range(200):
        parts = [(1, rand_operator(d, rng)) for _ in range(rng.randint(2, 4))]
        shuffled = parts[:]
        rng.shuffle(shuffled)
        assert linear_combine(parts) == linear_combine(shuffled)


def test_multiply_associative_random():
    rng = random.Random(12)
    for _ in range(200):
        d = rng.choice((2, 3))
        a, b, c = (rand_operator(d, rng, factors=3) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


# -- adjoint -------------------------------------------------------------------------


def test_adjoint_reorders_scaling_term():
    d = 2
    xp = multiply(weyl.x(d, 1), weyl.p(d, 1))
    # (x1 p1)+ = p1 x1 = x1 p1 - i
    assert adjoint(xp) == xp - weyl.scalar(d, I)


def test_adjoint_fixes_rotation_generator():
    d = 3
    from spinlrl import ops

    j12 = ops.so_j(d, 1, 2)
    assert adjoint(j12) == j12


def test_adjoint_involution_and_antiautomorphism():
    rng = random.Random(77)
    for _ in range(120):
        d = rng.choice((2, 3))
        a = rand_operator(d, rng)
        b = rand_operator(d, rng)
        assert adjoint(adjoint(a)) == a
        assert adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a))


def test_adjoint_conjugates_coefficients():
    d = 2
    a = P_I * weyl.one(d)
    assert adjoint(a) == -P_I * weyl.one(d)


# -- substitution and immutability -----------------------------------------------------


def test_substitution_renormalizes():
    d = 2
    e = (P_ONE - 2 * P_E) * weyl.x(d, 1)
    assert e.substitute(e_value=GaussianRational(Fraction(1, 2))).is_zero()


def test_operator_expr_not_mutable():
    e = weyl.x(2, 1)
    with pytest.raises(AttributeError):
        e.d = 3


# -- rendering order --------------------------------------------------------------------


def test_render_sorted_by_degrees():
    d = 2
    e = weyl.x(d, 1) + multiply(weyl.x(d, 1), weyl.p(d, 1)) + weyl.one(d)
    assert weyl.render(e) == "x1 p1 + x1 + 1"


def test_render_denominator_prefix():
    d = 2
    e = multiply(weyl.rinv2(d), weyl.gamma(d, 1) * weyl.x(d, 1))
    assert weyl.render(e) == "rinv2 (x1 g1)"
