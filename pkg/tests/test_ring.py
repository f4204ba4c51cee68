"""Rings, orderings and polynomial arithmetic."""

import random

import pytest

from germkit import (
    RingContext,
    VectorElement,
    jacobian_minors,
    order_of,
    parse_poly,
    parse_ring,
    render_polynomial,
    weighted_degree_homogeneous,
)
from germkit.errors import (
    DuplicateVariable,
    RingMismatch,
    UnknownOrderingToken,
    ZeroPolynomial,
)

SEED = 1105


def _ring(tok, char=0, names="x,y,z"):
    return parse_ring("ring %d (%s) %s" % (char, names, tok))


# ---------------------------------------------------------------------------
# orderings


@pytest.mark.parametrize(
    "tok", ["dp", "Dp", "lp", "ds", "ls", "wp(1,2,3)", "ws(2,1,1)", "dp(2),ds(1)"]
)
def test_ordering_axioms(tok):
    ring = _ring(tok)
    rng = random.Random(SEED)
    for _ in range(2000):
        a = tuple(rng.randint(0, 8) for _ in range(3))
        b = tuple(rng.randint(0, 8) for _ in range(3))
        c = tuple(rng.randint(0, 4) for _ in range(3))
        s = ring.compare(a, b)
        assert (s == 0) == (a == b)
        assert s == -ring.compare(b, a)
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert ring.compare(ac, bc) == s


def test_global_versus_local_units():
    glob = _ring("dp")
    loc = _ring("ds")
    one = (0, 0, 0)
    x = (1, 0, 0)
    assert glob.compare(x, one) > 0
    assert loc.compare(x, one) < 0
    assert glob.is_global and not glob.is_local
    assert loc.is_local and not loc.is_global


def test_degrevlex_versus_deglex_tiebreak():
    dp = _ring("dp")
    Dp = _ring("Dp")
    # same degree: x*z^2 vs y^3 ... dp compares last exponent reversed
    a, b = (1, 0, 2), (0, 3, 0)
    assert dp.compare(a, b) < 0  # revlex: larger last exponent loses
    assert Dp.compare(a, b) > 0  # lex tie-break: x wins


def test_lex_ignores_degree():
    lp = _ring("lp")
    assert lp.compare((1, 0, 0), (0, 9, 9)) > 0


def test_weighted_orderings():
    wp = _ring("wp(2,3,5)")
    assert wp.compare((0, 0, 1), (1, 0, 0)) > 0  # weight 5 beats weight 2
    s = wp.compare((1, 1, 0), (0, 0, 1))  # weights tie at 5: tie-break decides
    assert s != 0 and s == -wp.compare((0, 0, 1), (1, 1, 0))
    ws = _ring("ws(2,1,1)")
    assert ws.compare((0, 0, 0), (1, 0, 0)) > 0  # local: 1 on top


def test_mixed_block_ordering():
    ring = _ring("dp(2),ds(1)")
    # the global block dominates; within it x > 1
    assert ring.compare((1, 0, 0), (0, 0, 0)) > 0
    # pure z monomials fall to the local block: 1 > z
    assert ring.compare((0, 0, 1), (0, 0, 0)) < 0
    assert not ring.is_global and not ring.is_local


def test_bad_ring_declarations():
    with pytest.raises(UnknownOrderingToken):
        parse_ring("ring 0 (x,y) zz")
    with pytest.raises(DuplicateVariable):
        parse_ring("ring 0 (x,x) dp")


# ---------------------------------------------------------------------------
# polynomial arithmetic


def test_arithmetic_identities():
    ring = _ring("dp")
    rng = random.Random(SEED)

    def rand():
        p = ring.zero()
        for _ in range(rng.randint(0, 6)):
            exps = tuple(rng.randint(0, 4) for _ in range(3))
            p = p + ring.monomial(exps, rng.randint(-5, 5))
        return p

    for _ in range(150):
        a, b, c = rand(), rand(), rand()
        assert (a + b) - b == a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + ring.zero() == a
        if a:
            assert a * ring.constant(1) == a


def test_lead_term_respects_ordering():
    ring = _ring("ds")
    p = parse_poly("x^3+x*y+z^5", ring)
    assert p.lead_exponents == (1, 1, 0)  # lowest degree wins locally
    assert order_of(p) == 2
    assert p.total_degree() == 5


def test_ring_mismatch_raises():
    a = _ring("dp")
    b = _ring("dp", names="x,y")
    with pytest.raises(RingMismatch):
        a.variable(0) + b.variable(0)


def test_order_of_zero_raises():
    ring = _ring("dp")
    with pytest.raises(ZeroPolynomial):
        order_of(ring.zero())


def test_partial_derivatives():
    ring = _ring("dp")
    f = parse_poly("x^3*y+z^2", ring)
    assert render_polynomial(f.partial(0)) == "3*x^2*y"
    assert render_polynomial(f.partial(1)) == "x^3"
    assert render_polynomial(f.partial(2)) == "2*z"


def test_partial_in_characteristic_p():
    ring = _ring("dp", char=3)
    f = parse_poly("x^3+x*y", ring)
    assert render_polynomial(f.partial(0)) == "y"


def test_jacobian_minors_of_pair():
    ring = _ring("ds")
    f = parse_poly("x*y+z^3", ring)
    g = parse_poly("x*z+y*z^2+y^4", ring)
    m = jacobian_minors(f, g)
    assert len(m) == 3
    # 2x2 minors vanish when f = g
    for p in jacobian_minors(f, f):
        assert p.is_zero


def test_weighted_degree_homogeneous():
    ring = _ring("dp", names="x,y")
    from fractions import Fraction

    f = parse_poly("x^2+y^3", ring)
    assert weighted_degree_homogeneous(f, (Fraction(1, 2), Fraction(1, 3)))
    assert not weighted_degree_homogeneous(
        parse_poly("x^2+y^3+x*y", ring), (Fraction(1, 2), Fraction(1, 3))
    )


# ---------------------------------------------------------------------------
# module elements


def test_vector_components_and_ordering():
    ring = _ring("ds")
    x = ring.variable(0)
    v = VectorElement.unit(ring, 3, 1) * x + VectorElement.unit(ring, 3, 3)
    comps = v.components()
    assert len(comps) == 3
    assert comps[0] == x
    assert comps[1].is_zero
    assert not comps[2].is_zero


def test_vector_sum_and_scalar_action():
    ring = _ring("ds")
    x, y = ring.variable(0), ring.variable(1)
    a = VectorElement.from_components([x, y, ring.zero()])
    b = VectorElement.from_components([y, ring.zero(), x])
    s = a + b
    assert s.components()[0] == x + y
    assert (a * y).components()[1] == y * y
