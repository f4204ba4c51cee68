"""Standard basis engine: reduction, bases, staircases, jets."""

import random

import pytest

from germkit import (
    INFINITE,
    Staircase,
    Strategy,
    ecart,
    highest_corner,
    is_member,
    jet_dimensions,
    kbase,
    local_vdim,
    normal_form,
    parse_poly,
    parse_ring,
    serialize,
    spoly,
    std,
    vdim,
)
from germkit.errors import (
    InfiniteDimensional,
    ModeOrderingMismatch,
    ResourceExhausted,
    ZeroPolynomial,
)

SEED = 20259


def _ring(tok, char=0, names="x,y,z"):
    return parse_ring("ring %d (%s) %s" % (char, names, tok))


def _lead_set(basis):
    return sorted(exps for exps, _ in basis.leading_exponents())


# ---------------------------------------------------------------------------
# ecart and s-polynomials


def test_ecart_examples():
    loc = _ring("ds", names="x")
    assert ecart(parse_poly("x-x^2", loc)) == 1
    glob = _ring("dp")
    assert ecart(parse_poly("x+y", glob)) == 0
    assert ecart(parse_poly("x^2*y+z^3", glob)) == 0  # homogeneous
    with pytest.raises(ZeroPolynomial):
        ecart(glob.zero())


def test_spoly_examples():
    ring = _ring("dp", names="x,y")
    f = parse_poly("x^2+y", ring)
    g = parse_poly("x*y+1", ring)
    assert spoly(f, g) == parse_poly("y^2-x", ring)
    assert spoly(f, f).is_zero
    h = spoly(parse_poly("x^2+y", ring), parse_poly("y^2+x", ring))
    assert ring.compare(h.lead_exponents, (2, 2)) < 0


# ---------------------------------------------------------------------------
# normal form


def test_mora_normal_form_unit_factor():
    ring = _ring("ds", names="x")
    f = parse_poly("x-x^2", ring)
    assert normal_form(parse_poly("x", ring), [f]).is_zero


def test_buchberger_normal_form():
    ring = _ring("dp", names="x,y")
    g = parse_poly("x^2-1", ring)
    assert normal_form(parse_poly("x^2*y", ring), [g]) == parse_poly("y", ring)


def test_buchberger_mode_needs_global_ordering():
    ring = _ring("ds", names="x,y")
    with pytest.raises(ModeOrderingMismatch):
        std([parse_poly("x+y^2", ring)], mode="buchberger")


def test_membership_by_construction():
    rng = random.Random(SEED)
    for tok in ("dp", "ds"):
        ring = _ring(tok)
        for _ in range(20):
            def rand(maxdeg, terms):
                p = ring.zero()
                for _ in range(rng.randint(1, terms)):
                    e = [0, 0, 0]
                    for _ in range(rng.randint(0, maxdeg)):
                        e[rng.randrange(3)] += 1
                    p = p + ring.monomial(tuple(e), rng.randint(-3, 3))
                return p

            g1, g2 = rand(3, 3), rand(3, 3)
            if not g1 or not g2:
                continue
            f = rand(2, 2) * g1 + rand(2, 2) * g2
            if not f:
                continue
            basis = std([g1, g2])
            assert is_member(f, basis)


# ---------------------------------------------------------------------------
# std


def test_monomial_ideal_is_its_own_basis():
    ring = _ring("lp", names="x,y")
    basis = std([parse_poly("x^2", ring), parse_poly("y^3", ring)])
    assert _lead_set(basis) == [(0, 3), (2, 0)]


def test_unit_factor_collapses_locally():
    ring = _ring("ds", names="x,y")
    basis = std([parse_poly("x-x^2", ring)])
    assert _lead_set(basis) == [(1, 0)]


def test_ft54_tjurina_ideal_staircase():
    from germkit import ft_germ

    germ = ft_germ(5, 4)
    basis = std([germ.f, germ.g] + list(germ.minors()))
    assert vdim(basis) == 10  # tau


def test_generators_are_members():
    ring = _ring("ds")
    gens = [
        parse_poly("x*y+z^3", ring),
        parse_poly("x*z+y*z^2+y^4", ring),
        parse_poly("x^2-y^5+z^4", ring),
    ]
    basis = std(gens)
    for g in gens:
        assert is_member(g, basis)


def test_minimality_no_lead_divides_another():
    ring = _ring("ds")
    gens = [parse_poly(s, ring) for s in ("x^2+y^3", "x*y-z^4", "z^2-x*y^2")]
    basis = std(gens)
    leads = _lead_set(basis)
    for a in leads:
        for b in leads:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))


def test_strategy_invariance_spot_check():
    ring = _ring("ds")
    gens = [parse_poly(s, ring) for s in ("x^2+y^3", "x*y-z^4", "z^2-x*y^2")]
    reference = None
    for pair in ("sugar", "min-lcm-degree", "fifo"):
        for red in ("min-ecart", "first-found"):
            basis = std(gens, Strategy(pair, red, False, False))
            if reference is None:
                reference = _lead_set(basis)
            else:
                assert _lead_set(basis) == reference


def test_buchberger_against_sympy():
    import sympy

    xs = sympy.symbols("x y z")
    ring = _ring("dp")
    cases = [
        ("x^2+y", "x*y-1", "z-1"),
        ("x^3-y^2", "y^3-x*z", "x*y-z^2"),
        ("x^2+y^2+z^2-1", "x*y-z", "y*z-x"),
    ]
    for texts in cases:
        ours = std([parse_poly(t, ring) for t in texts], mode="buchberger")
        theirs = sympy.groebner(
            [sympy.sympify(t.replace("^", "**")) for t in texts],
            *xs,
            order="grevlex",
        )
        lead = sorted(
            tuple(int(e) for e in p.LM(order="grevlex").exponents)
            for p in theirs.polys
        )
        assert _lead_set(ours) == lead


def test_reduction_ceiling():
    ring = _ring("ds")
    gens = [parse_poly("x*y+z^3", ring), parse_poly("x*z+y*z^2+y^4", ring)]
    with pytest.raises(ResourceExhausted):
        std(gens + [parse_poly("x^2-y^5+z^4", ring)], ceiling=3)


# ---------------------------------------------------------------------------
# staircase queries


def test_vdim_examples():
    ring = _ring("ds", names="x,y")
    assert vdim(std([parse_poly("x^2", ring), parse_poly("y^3", ring)])) == 6
    assert vdim(std([parse_poly("x", ring)])) is INFINITE
    assert vdim(std([parse_poly("3*x^2", ring), parse_poly("5*y^4", ring)])) == 8


def test_kbase_examples():
    ring = _ring("ds", names="x,y")
    basis = std([parse_poly("x^2", ring), parse_poly("y^2", ring)])
    assert sorted(serialize(m) for m in kbase(basis)) == ["1", "x", "x*y", "y"]
    tiny = std([parse_poly("x", ring), parse_poly("y", ring)])
    assert [serialize(m) for m in kbase(tiny)] == ["1"]
    mixed = std([parse_poly(s, ring) for s in ("x^2", "x*y", "y^3")])
    assert sorted(serialize(m) for m in kbase(mixed)) == ["1", "x", "y", "y^2"]
    with pytest.raises(InfiniteDimensional):
        kbase(std([parse_poly("x", ring)]))


def test_highest_corner_examples():
    ring = _ring("ds", names="x,y")
    assert highest_corner(std([parse_poly("x^2", ring), parse_poly("y^2", ring)])) == 3
    assert highest_corner(std([parse_poly("x", ring), parse_poly("y", ring)])) == 1
    assert (
        highest_corner(std([parse_poly("3*x^2", ring), parse_poly("5*y^4", ring)]))
        == 5
    )
    assert highest_corner(std([parse_poly("x", ring)])) is INFINITE


def test_membership_local_versus_global():
    loc = _ring("ds", names="x,y")
    glob = _ring("dp", names="x,y")
    fl = parse_poly("x-x^2", loc)
    fg = parse_poly("x-x^2", glob)
    assert is_member(parse_poly("x", loc), std([fl]))
    assert not is_member(parse_poly("x", glob), std([fg]))


def test_euler_relation_membership():
    ring = _ring("ds", names="x,y")
    jacobian = std([parse_poly("3*x^2", ring), parse_poly("5*y^4", ring)])
    assert is_member(parse_poly("x^3+y^5", ring), jacobian)


def test_staircase_counts_gap_free():
    ring = _ring("ds")
    gens = [parse_poly(s, ring) for s in ("x^3", "y^4", "z^2", "x*y^2*z")]
    st = std(gens).staircase()
    corner = highest_corner(std(gens))
    counts = st.counts_by_degree(corner)
    assert counts[-1] == 0
    nonzero = [d for d, c in enumerate(counts) if c]
    assert nonzero == list(range(nonzero[-1] + 1))  # gap-free interval
    assert sum(counts) == vdim(std(gens))


# ---------------------------------------------------------------------------
# jets


def test_jet_run_matches_untruncated():
    ring = _ring("ds")
    gens = [parse_poly(s, ring) for s in ("x^2+y^3", "x*y-z^4", "z^2-x*y^2")]
    full = std(gens)
    want = vdim(full)
    jb = std(gens, jet=highest_corner(full) + 1)
    counts, certified = jet_dimensions(jb)
    assert certified
    assert sum(counts) == want


def test_jet_below_corner_is_not_certified():
    ring = _ring("ds", names="x,y")
    gens = [parse_poly("x^3", ring), parse_poly("y^3", ring)]
    jb = std(gens, jet=3)  # true corner is 5
    counts, certified = jet_dimensions(jb)
    assert not certified


def test_local_vdim_drives_jets():
    ring = _ring("ds")
    gens = [parse_poly(s, ring) for s in ("x^2+y^3", "x*y-z^4", "z^2-x*y^2")]
    value, basis = local_vdim(gens)
    assert value == vdim(std(gens))
    assert basis.jet is not None


def test_corner_tightening_on_oversized_jet():
    # bound 128 with a staircase topping out below 20: the run must shrink
    # its own bound once pure powers appear, without changing any answer
    from germkit import ft_germ

    germ = ft_germ(8, 8)
    gens = [germ.f, germ.g] + list(germ.minors())
    want = vdim(std(gens))
    jb = std(gens, jet=128)
    counts, certified = jet_dimensions(jb)
    assert certified
    assert sum(counts) == want


def test_vdim_queries_reject_jet_bases():
    ring = _ring("ds", names="x,y")
    jb = std([parse_poly("x^2", ring), parse_poly("y^2", ring)], jet=8)
    with pytest.raises(ValueError):
        vdim(jb)
    with pytest.raises(ValueError):
        kbase(jb)


# ---------------------------------------------------------------------------
# staircase object


def test_staircase_pure_powers_and_finiteness():
    st = Staircase(2, None, [((2, 0), 0), ((0, 3), 0)])
    assert st.is_finite()
    assert st.pure_power_degrees(0) == [2, 3]
    assert len(st.std_exponents(0)) == 6
    open_st = Staircase(2, None, [((2, 0), 0)])
    assert not open_st.is_finite()


def test_module_vdim_per_component():
    from germkit import VectorElement

    ring = _ring("ds", names="x,y")
    x, y = ring.variable(0), ring.variable(1)
    gens = [
        VectorElement.unit(ring, 2, 1) * x,
        VectorElement.unit(ring, 2, 1) * y,
        VectorElement.unit(ring, 2, 2) * (x * x),
        VectorElement.unit(ring, 2, 2) * (y * y),
    ]
    basis = std(gens)
    assert vdim(basis) == 1 + 4  # {1} in slot 1, {1, x, y, xy} in slot 2
