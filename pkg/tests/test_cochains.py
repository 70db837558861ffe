import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import unit
from rblie.algebra import LieAlgebra, adjoint_bimodule, adjoint_rep, zero_rep
from rblie.certificate import ShapeError
from rblie.cochains import (
    CECochain,
    HochschildCochain,
    RBCochain,
    delta_ce,
    delta_hochschild,
    delta_rb,
    delta_rb_assoc,
    partial_ce,
    partial_hochschild,
    phi,
    psi,
    random_ce_cochain,
    random_hochschild_cochain,
    random_rb_assoc_cochain,
    random_rb_cochain,
    skew_symmetrize_cochain,
    skew_symmetrize_rb_cochain,
    sort_with_sign,
    wedge_basis,
    wedge_rank,
    wedge_unrank,
    xi,
)
from rblie.fixtures import aff1, assoc_configurations, fix_a, fix_ass, fix_ass_rb, lie_configurations, sl2
from rblie.linalg import Matrix, vec_add, vec_scale, zero_vector
from rblie.rota_baxter import (
    RBBimodule,
    RBLieRepresentation,
    WeightedRBAssoc,
    WeightedRBLie,
    dual_operator,
    dual_representation,
    skew_symmetrize_rb,
)

LIE = lie_configurations()
ASSOC = assoc_configurations()


# --- dense oracles, written from the textbook formulas -----------------------


def oracle_ce(g, rep, f, args):
    """Standard Chevalley-Eilenberg coboundary times ``(-1)^(n-1)``."""
    n = f.degree
    out = zero_vector(f.tgt_dim)
    for i in range(n + 1):
        rest = args[:i] + args[i + 1:]
        out = vec_add(out, vec_scale((-1) ** i, rep.act(args[i], f(*rest))))
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            rest = [a for k, a in enumerate(args) if k not in (i, j)]
            out = vec_add(out, vec_scale((-1) ** (i + j), f(g.bracket(args[i], args[j]), *rest)))
    return vec_scale((-1) ** (n - 1), out)


def oracle_hochschild(a, bim, f, args):
    n = f.degree
    out = bim.lmul(args[0], f(*args[1:]))
    for i in range(n):
        merged = args[:i] + [a.mul(args[i], args[i + 1])] + args[i + 2:]
        out = vec_add(out, vec_scale((-1) ** (i + 1), f(*merged)))
    out = vec_add(out, vec_scale((-1) ** (n + 1), bim.rmul(f(*args[:n]), args[n])))
    return vec_scale((-1) ** (n - 1), out)


# --- indexing ---------------------------------------------------------------


@given(st.integers(1, 6), st.data())
def test_wedge_rank_roundtrip(dim, data):
    n = data.draw(st.integers(0, dim))
    for r, t in enumerate(wedge_basis(dim, n)):
        assert wedge_rank(dim, t) == r
        assert wedge_unrank(dim, n, r) == t


def test_sort_with_sign():
    assert sort_with_sign((1, 0)) == (-1, (0, 1))
    assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_with_sign((1, 1))[0] == 0


@given(st.integers(0, 10_000))
def test_ce_cochains_alternate(seed):
    rng = random.Random(seed)
    f = random_ce_cochain(rng, 3, 4, 2)
    vs = [tuple(F(rng.randint(-2, 2)) for _ in range(4)) for _ in range(3)]
    v = f(*vs)
    assert f(vs[1], vs[0], vs[2]) == tuple(-x for x in v)
    assert f(vs[0], vs[2], vs[1]) == tuple(-x for x in v)
    assert not any(f(vs[0], vs[0], vs[1]))


def test_entries_roundtrip():
    f = CECochain.from_entries(2, 3, 2, [{"indices": [0, 2], "value": [1, "-1/2"]}])
    assert f.at((2, 0)) == (-1, F(1, 2))
    assert CECochain.from_entries(2, 3, 2, f.to_dict()) == f
    with pytest.raises(ShapeError):
        CECochain.from_entries(2, 3, 2, [{"indices": [1, 1], "value": [1, 1]}])


# --- explicit values ----------------------------------------------------------


def test_degree_zero_coboundary_is_minus_action():
    g = aff1()
    rep = adjoint_rep(g)
    v = CECochain(0, 2, 2, ((F(2), F(3)),))
    dv = delta_ce(g, rep, v)
    for i in range(2):
        assert dv.at((i,)) == tuple(-x for x in rep.rho[i].apply((2, 3)))


def test_coboundary_of_identity_on_aff1():
    g = aff1()
    ident = CECochain.from_function(1, 2, 2, lambda t: unit(2, t[0]))
    assert delta_ce(g, adjoint_rep(g), ident).at((0, 1)) == (0, 1)


def test_abelian_zero_rep_has_zero_differential():
    g = LieAlgebra.abelian(3)
    rng = random.Random(0)
    for n in range(4):
        assert delta_ce(g, zero_rep(g, 2), random_ce_cochain(rng, n, 3, 2)).is_zero()


def test_deformed_differential_vanishes_for_zero_operator():
    rb = WeightedRBLie(aff1(), 0, Matrix.zeros(2))
    rbrep = RBLieRepresentation(adjoint_rep(aff1()), Matrix.zeros(2))
    rng = random.Random(1)
    for n in range(3):
        f = random_ce_cochain(rng, n, 2, 2)
        assert partial_ce(rb, rbrep, f).is_zero()
        if n:
            assert phi(rb, rbrep, f).is_zero()
            assert delta_rb(rb, rbrep, RBCochain(f, random_ce_cochain(rng, n - 1, 2, 2))).g.is_zero()


def test_deformed_differential_degree_zero():
    rb, rbrep = fix_a(2)
    v = CECochain(0, 2, 2, ((F(1), F(-1)),))
    dv = partial_ce(rb, rbrep, v)
    for i in range(2):
        expect = vec_add(
            tuple(-x for x in rbrep.rep.matrix(rb.T.col(i)).apply((1, -1))),
            rbrep.calT.apply(rbrep.rep.rho[i].apply((1, -1))),
        )
        assert dv.at((i,)) == expect


def test_phi_degree_one():
    rb, rbrep = LIE["FIX-AB"]
    rng = random.Random(2)
    f = random_ce_cochain(rng, 1, 2, 2)
    out = phi(rb, rbrep, f)
    for i in range(2):
        expect = tuple(a - b for a, b in zip(f(rb.T.col(i)), rbrep.calT.apply(f.at((i,)))))
        assert out.at((i,)) == expect


def test_phi_vanishes_for_identity_operator_in_degree_two():
    rb, rbrep = LIE["FIX-SL2/identity"]
    rng = random.Random(3)
    assert phi(rb, rbrep, random_ce_cochain(rng, 2, 3, 3)).is_zero()


def test_delta_rb_degree_zero():
    rb, rbrep = fix_a(1)
    v = CECochain(0, 2, 2, ((F(1), F(4)),))
    out = delta_rb(rb, rbrep, RBCochain(v, None))
    assert out.f == delta_ce(rb.g, rbrep.rep, v)
    assert out.g == -v


def test_hochschild_degree_zero_and_identity():
    a = fix_ass()
    bim = adjoint_bimodule(a)
    m = (F(1), F(2))
    dm = delta_hochschild(a, bim, HochschildCochain(0, 2, 2, (m,)))
    for i in range(2):
        e = unit(2, i)
        expect = tuple(x - y for x, y in zip(bim.rmul(m, e), bim.lmul(e, m)))
        assert dm.at((i,)) == expect
    ident = HochschildCochain.from_function(1, 2, 2, lambda t: unit(2, t[0]))
    # the identity is not a derivation: its coboundary is the product itself
    prod = HochschildCochain.from_function(2, 2, 2, lambda t: a.constants[t[0]][t[1]])
    assert delta_hochschild(a, bim, ident) == prod


def test_hochschild_degree_zero_commutative_is_zero():
    from rblie.fixtures import dual_numbers

    d = dual_numbers()
    assert delta_hochschild(d, adjoint_bimodule(d), HochschildCochain(0, 2, 2, ((F(3), F(-1)),))).is_zero()


def test_psi_examples():
    rba, rbbim = fix_ass_rb(1)
    f0 = HochschildCochain(0, 2, 2, ((F(1), F(1)),))
    assert psi(rba, rbbim, f0) == f0
    rng = random.Random(4)
    zero = (WeightedRBAssoc(fix_ass(), 0, Matrix.zeros(2)), RBBimodule(adjoint_bimodule(fix_ass()), Matrix.zeros(2)))
    for n in (1, 2):
        assert psi(*zero, random_hochschild_cochain(rng, n, 2, 2)).is_zero()
    f = random_hochschild_cochain(rng, 1, 2, 2)
    out = psi(rba, rbbim, f)
    for i in range(2):
        assert out.at((i,)) == tuple(a - b for a, b in zip(f(rba.R.col(i)), rbbim.calR.apply(f.at((i,)))))


def test_delta_rb_assoc_low_degrees():
    rba, rbbim = fix_ass_rb(1)
    m = HochschildCochain(0, 2, 2, ((F(2), F(-1)),))
    out = delta_rb_assoc(rba, rbbim, RBCochain(m, None))
    assert out.f == delta_hochschild(rba.a, rbbim.bim, m) and out.g == -m
    zero = (WeightedRBAssoc(fix_ass(), 0, Matrix.zeros(2)), RBBimodule(adjoint_bimodule(fix_ass()), Matrix.zeros(2)))
    c = random_rb_assoc_cochain(random.Random(5), 2, 2, 2)
    out = delta_rb_assoc(*zero, c)
    assert out.f == delta_hochschild(fix_ass(), adjoint_bimodule(fix_ass()), c.f) and out.g.is_zero()


def test_skew_symmetrization_examples():
    rng = random.Random(6)
    f = random_hochschild_cochain(rng, 1, 2, 2)
    assert skew_symmetrize_cochain(f).values == f.values
    sym = HochschildCochain.from_function(2, 2, 2, lambda t: (F(t[0] + t[1]), F(t[0] * t[1])))
    assert skew_symmetrize_cochain(sym).is_zero()
    a = fix_ass()
    prod = HochschildCochain.from_function(2, 2, 2, lambda t: a.constants[t[0]][t[1]])
    br = skew_symmetrize_cochain(prod)
    assert br.at((0, 1)) == aff1().basis_bracket(0, 1)


def test_xi_signs():
    rng = random.Random(7)
    c1 = random_rb_cochain(rng, 1, 2, 2)
    assert xi(c1) == c1
    c2 = random_rb_cochain(rng, 2, 2, 2)
    assert xi(c2) == RBCochain(c2.f, -c2.g)
    assert xi(RBCochain.zero(CECochain, 2, 2, 2)).is_zero()
    c3 = random_rb_cochain(rng, 3, 2, 2)
    assert xi(xi(c3)) == c3


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        delta_ce(aff1(), adjoint_rep(aff1()), random_ce_cochain(random.Random(0), 1, 3, 2))
    with pytest.raises(ShapeError):
        random_rb_cochain(random.Random(0), 2, 2, 2) + random_rb_cochain(random.Random(0), 1, 2, 2)


# --- agreement with the oracles and the identities ----------------------------


@given(st.integers(0, 10_000), st.sampled_from(["FIX-A", "FIX-SL2", "FIX-AB", "FIX-A/zero-rep"]), st.integers(0, 2))
def test_ce_matches_oracle(seed, name, n):
    rng = random.Random(seed)
    rb, rbrep = LIE[name]
    g, rep = rb.g, rbrep.rep
    f = random_ce_cochain(rng, n, g.dim, rep.module_dim)
    df = delta_ce(g, rep, f)
    args = [tuple(F(rng.randint(-2, 2)) for _ in range(g.dim)) for _ in range(n + 1)]
    assert df(*args) == oracle_ce(g, rep, f, args)


@given(st.integers(0, 10_000), st.integers(0, 2))
def test_hochschild_matches_oracle(seed, n):
    rng = random.Random(seed)
    a = fix_ass()
    bim = adjoint_bimodule(a)
    f = random_hochschild_cochain(rng, n, 2, 2)
    df = delta_hochschild(a, bim, f)
    for t in product(range(2), repeat=n + 1):
        args = [unit(2, i) for i in t]
        assert df.at(t) == oracle_hochschild(a, bim, f, args)


@given(st.integers(0, 10_000), st.sampled_from(sorted(LIE)), st.integers(0, 3))
def test_lie_differentials_square_to_zero(seed, name, n):
    rng = random.Random(seed)
    rb, rbrep = LIE[name]
    d, m = rb.g.dim, rbrep.rep.module_dim
    f = random_ce_cochain(rng, n, d, m)
    assert delta_ce(rb.g, rbrep.rep, delta_ce(rb.g, rbrep.rep, f)).is_zero()
    assert partial_ce(rb, rbrep, partial_ce(rb, rbrep, f)).is_zero()
    assert partial_ce(rb, rbrep, phi(rb, rbrep, f)) == phi(rb, rbrep, delta_ce(rb.g, rbrep.rep, f))
    c = random_rb_cochain(rng, n, d, m)
    assert delta_rb(rb, rbrep, delta_rb(rb, rbrep, c)).is_zero()


@given(st.integers(0, 10_000), st.sampled_from(sorted(ASSOC)), st.integers(0, 2))
def test_assoc_differentials_square_to_zero(seed, name, n):
    rng = random.Random(seed)
    rba, rbbim = ASSOC[name]
    d, m = rba.a.dim, rbbim.bim.module_dim
    f = random_hochschild_cochain(rng, n, d, m)
    assert delta_hochschild(rba.a, rbbim.bim, delta_hochschild(rba.a, rbbim.bim, f)).is_zero()
    assert partial_hochschild(rba, rbbim, partial_hochschild(rba, rbbim, f)).is_zero()
    assert partial_hochschild(rba, rbbim, psi(rba, rbbim, f)) == psi(rba, rbbim, delta_hochschild(rba.a, rbbim.bim, f))
    c = random_rb_assoc_cochain(rng, n, d, m)
    assert delta_rb_assoc(rba, rbbim, delta_rb_assoc(rba, rbbim, c)).is_zero()


@given(st.integers(0, 10_000), st.sampled_from(sorted(ASSOC)), st.integers(0, 2))
def test_skew_symmetrization_squares_commute(seed, name, n):
    rng = random.Random(seed)
    rba, rbbim = ASSOC[name]
    rb, rbrep = skew_symmetrize_rb(rba, rbbim)
    d, m = rba.a.dim, rbbim.bim.module_dim
    f = random_hochschild_cochain(rng, n, d, m)
    S = skew_symmetrize_cochain
    assert delta_ce(rb.g, rbrep.rep, S(f)) == S(delta_hochschild(rba.a, rbbim.bim, f))
    assert partial_ce(rb, rbrep, S(f)) == S(partial_hochschild(rba, rbbim, f))
    assert phi(rb, rbrep, S(f)) == S(psi(rba, rbbim, f))
    c = random_rb_assoc_cochain(rng, n, d, m)
    assert delta_rb(rb, rbrep, skew_symmetrize_rb_cochain(c)) == skew_symmetrize_rb_cochain(delta_rb_assoc(rba, rbbim, c))


@given(st.integers(0, 10_000), st.sampled_from(sorted(LIE)), st.integers(0, 3))
def test_xi_intertwines_with_dual(seed, name, n):
    rng = random.Random(seed)
    rb, rbrep = LIE[name]
    du, dr = dual_operator(rb), dual_representation(rb, rbrep)
    c = random_rb_cochain(rng, n, rb.g.dim, rbrep.rep.module_dim)
    assert delta_rb(du, dr, xi(c)) == xi(delta_rb(rb, rbrep, c))


def test_sl2_has_three_dimensional_wedge_top():
    assert len(wedge_basis(sl2().dim, 3)) == 1
