import random
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import closed_form_TT, random_matrix, unit
from rblie.algebra import LieAlgebra, LieRepresentation, adjoint_rep, validate_lie, validate_representation, zero_rep
from rblie.certificate import StructureError
from rblie.fixtures import aff1, lie_configurations, sl2
from rblie.graded import (
    LBlocks,
    MultiMap,
    PairedOperators,
    RBpCochain,
    build_theta,
    build_theta_prime,
    check_paired,
    d_T,
    dd,
    derived_bracket,
    embed,
    four_block_algebra,
    graph_subalgebra_check,
    lambda_double,
    lambda_double_rep,
    mc_check,
    mc_deformation_check,
    mc_residual,
    nr_bracket,
    nr_diamond,
    operator_cochain,
    project,
    random_rbp_cochain,
    rbp_cohomology,
)
from rblie.linalg import Matrix, vec_scale
from rblie.rota_baxter import RBLieRepresentation, WeightedRBLie, dual_operator, dual_representation, is_lie_homomorphism

LIE = lie_configurations()


def paired(name):
    rb, rbrep = LIE[name]
    return PairedOperators(rb.g, rbrep.rep, rb.weight, rb.T, rbrep.calT)


def random_multimap(rng, arity, blocks, density=0.3):
    from itertools import combinations

    data = {}
    for t in combinations(range(blocks.size), arity):
        if rng.random() < density:
            data[t] = {rng.randrange(blocks.size): F(rng.randint(-2, 2))}
    return MultiMap(arity, blocks, data=data)


def lie_as_multimap(g: LieAlgebra, blocks: LBlocks) -> MultiMap:
    data = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = {k: c for k, c in enumerate(g.basis_bracket(i, j)) if c}
            if v:
                data[(i, j)] = v
    return MultiMap(2, blocks, data=data)


# --- the Nijenhuis-Richardson bracket --------------------------------------


def test_arity_one_bracket_is_commutator():
    B = LBlocks(1, 1)
    rng = random.Random(0)
    f, h = random_multimap(rng, 1, B, 0.8), random_multimap(rng, 1, B, 0.8)
    Mf = Matrix.from_columns([f(unit(4, i)) for i in range(4)], 4)
    Mh = Matrix.from_columns([h(unit(4, i)) for i in range(4)], 4)
    br = nr_bracket(f, h)
    assert Matrix.from_columns([br(unit(4, i)) for i in range(4)], 4) == Mf @ Mh - Mh @ Mf


@given(st.integers(0, 10_000), st.integers(1, 3))
def test_identity_acts_by_degree(seed, arity):
    B = LBlocks(1, 1)
    ident = MultiMap(1, B, data={(i,): {i: F(1)} for i in range(B.size)})
    h = random_multimap(random.Random(seed), arity, B)
    assert nr_bracket(ident, h) == h.scale(1 - arity)


@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3))
def test_graded_antisymmetry(seed, a, b):
    rng = random.Random(seed)
    B = LBlocks(1, 1)
    f, h = random_multimap(rng, a, B), random_multimap(rng, b, B)
    s = -((-1) ** ((a - 1) * (b - 1)))
    assert nr_bracket(f, h) == nr_bracket(h, f).scale(s)


@given(st.integers(0, 10_000), st.integers(1, 2), st.integers(1, 2), st.integers(1, 3))
def test_graded_jacobi(seed, a, b, c):
    rng = random.Random(seed)
    B = LBlocks(1, 1)
    f, g, h = (random_multimap(rng, k, B, 0.4) for k in (a, b, c))
    da, db = a - 1, b - 1
    lhs = nr_bracket(f, nr_bracket(g, h))
    rhs = nr_bracket(nr_bracket(f, g), h) + nr_bracket(g, nr_bracket(f, h)).scale((-1) ** (da * db))
    assert lhs == rhs


@given(st.integers(0, 10_000))
def test_square_zero_iff_jacobi(seed):
    rng = random.Random(seed)
    B = LBlocks(2, 0)
    triples = []
    for i in range(4):
        for j in range(i + 1, 4):
            if rng.random() < 0.35:
                triples.append((i, j, rng.randrange(4), rng.choice([1, -1])))
    g = LieAlgebra.from_triples(4, triples)
    mu = lie_as_multimap(g, B)
    assert nr_bracket(mu, mu).is_zero() == bool(validate_lie(g))


def test_square_zero_on_known_lie_algebras():
    for name in ("FIX-A", "FIX-SL2"):
        p = paired(name)
        big = four_block_algebra(p.g, p.rep, p.weight)
        mu = lie_as_multimap(big, p.blocks)
        assert nr_bracket(mu, mu).is_zero()
    assert nr_diamond(mu, mu).arity == 3


# --- theta and theta' ------------------------------------------------------


def test_theta_vanishes_for_abelian_trivial_data():
    g = LieAlgebra.abelian(2)
    assert build_theta(g, zero_rep(g, 2)).is_zero()
    assert build_theta_prime(g, zero_rep(g, 2)).is_zero()


@pytest.mark.parametrize("name", ["FIX-A", "FIX-SL2", "FIX-AB", "FIX-A/zero-rep"])
def test_theta_is_maurer_cartan(name):
    p = paired(name)
    th, tp = build_theta(p.g, p.rep), build_theta_prime(p.g, p.rep)
    assert nr_bracket(th, th).is_zero()
    assert nr_bracket(tp, tp).is_zero()
    assert nr_bracket(th, tp).is_zero()


def test_theta_square_detects_bad_input():
    g = aff1()
    bad_rep = LieRepresentation(2, (Matrix.identity(2), Matrix.identity(2)))
    assert not validate_representation(g, bad_rep)
    th = build_theta(g, bad_rep)
    assert not nr_bracket(th, th).is_zero()
    bad_g = LieAlgebra.from_triples(3, [(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 0, 1)])
    th = build_theta(bad_g, zero_rep(bad_g, 1))
    assert not nr_bracket(th, th).is_zero()


# --- embedding and projection ----------------------------------------------


def test_embedding_of_identity_pair():
    B = LBlocks(2, 2)
    c = operator_cochain(Matrix.identity(2), Matrix.identity(2))
    e = embed(c, B)
    assert e.materialize() == {(B.gp(0),): {0: 1}, (B.gp(1),): {1: 1}, (B.vp(0),): {B.v(0): 1}, (B.vp(1),): {B.v(1): 1}}
    assert embed(RBpCochain.zero(2, 2, 2), B).is_zero()


@given(st.integers(0, 10_000), st.integers(1, 3))
def test_embedding_roundtrip_and_abelian_image(seed, k):
    rng = random.Random(seed)
    B = LBlocks(2, 2)
    c = random_rbp_cochain(rng, k, 2, 2)
    assert project(embed(c, B)) == c
    c2 = random_rbp_cochain(rng, 2, 2, 2)
    assert nr_bracket(embed(c, B), embed(c2, B)).is_zero()


# --- derived bracket and the differential -----------------------------------


@pytest.mark.parametrize("name", sorted(LIE))
def test_derived_bracket_and_differential_closed_forms(name):
    p = paired(name)
    T = operator_cochain(p.T, p.calT)
    TT = derived_bracket(p.g, p.rep, T, T)
    dT = dd(p.g, p.rep, p.weight, T)
    c1, c2 = closed_form_TT(p)
    for (i, j), v in c1.items():
        assert TT.part1.at((i, j)) == v
        assert dT.part1.at((i, j)) == vec_scale(p.weight, p.T.apply(p.g.basis_bracket(i, j)))
    for (i, a), v in c2.items():
        assert TT.value2((i,), a) == v
        assert dT.value2((i,), a) == vec_scale(p.weight, p.calT.apply(p.rep.rho[i].col(a)))


def test_differential_vanishes_at_weight_zero():
    p = paired("FIX-A/trivial")
    c = random_rbp_cochain(random.Random(1), 1, 2, 2)
    assert dd(p.g, p.rep, 0, c).is_zero()
    assert dd(p.g, p.rep, 3, RBpCochain.zero(1, 2, 2)).is_zero()
    assert derived_bracket(p.g, p.rep, c, RBpCochain.zero(1, 2, 2)).is_zero()


@given(st.integers(0, 10_000), st.sampled_from(["FIX-A", "FIX-SL2", "FIX-AB"]), st.integers(1, 2), st.integers(1, 2))
def test_derived_bracket_symmetry_and_derivation(seed, name, k1, k2):
    rng = random.Random(seed)
    p = paired(name)
    n, m = p.blocks.n, p.blocks.m
    P, Q = random_rbp_cochain(rng, k1, n, m), random_rbp_cochain(rng, k2, n, m)
    br = lambda a, b: derived_bracket(p.g, p.rep, a, b)  # noqa: E731
    d = lambda a: dd(p.g, p.rep, p.weight, a)  # noqa: E731
    assert br(P, Q) == br(Q, P).scale(-((-1) ** (k1 * k2)))
    assert d(br(P, Q)) == br(d(P), Q) + br(P, d(Q)).scale((-1) ** k1)
    assert d(d(P)).is_zero()


# --- Maurer-Cartan ------------------------------------------------------------


def test_paired_examples():
    g = sl2()
    ident = PairedOperators(g, adjoint_rep(g), -1, Matrix.identity(3), Matrix.identity(3))
    assert check_paired(ident) and mc_check(ident) and mc_residual(ident).is_zero()
    for lam in (0, 1, -2):
        p = PairedOperators(aff1(), adjoint_rep(aff1()), lam, Matrix.diag([-lam, 0]), Matrix.diag([-lam, 0]))
        assert check_paired(p) and mc_check(p)


def test_bad_module_operator_fails_second_identity_only():
    p = paired("FIX-A")
    q = p.with_operators(p.T, Matrix.from_rows([[1, 1], [1, 0]]))
    cert = check_paired(q)
    assert not cert and "module" in cert.check
    mc = mc_check(q)
    assert not mc and mc.where[0] == "part2"


@given(st.integers(0, 10_000), st.sampled_from(sorted(LIE)))
def test_mc_residual_iff_paired(seed, name):
    rng = random.Random(seed)
    p = paired(name)
    n, m = p.blocks.n, p.blocks.m
    mode = seed % 3
    T = p.T if mode == 1 else p.T + random_matrix(rng, n)
    calT = p.calT if mode == 2 else p.calT + random_matrix(rng, m)
    q = p.with_operators(T, calT)
    ok = bool(check_paired(q))
    assert bool(mc_check(q)) == ok
    assert mc_residual(q).is_zero() == ok
    assert bool(graph_subalgebra_check(q)) == ok


@pytest.mark.parametrize("name", ["FIX-A", "FIX-SL2", "FIX-AB"])
def test_d_T_squares_to_zero(name):
    p = paired(name)
    rng = random.Random(4)
    for k in (1, 2, 3):
        c = random_rbp_cochain(rng, k, p.blocks.n, p.blocks.m)
        assert d_T(p, d_T(p, c)).is_zero()


def test_d_T_needs_paired_operators():
    p = paired("FIX-A")
    q = p.with_operators(p.T, Matrix.from_rows([[1, 1], [1, 0]]))
    with pytest.raises(StructureError):
        d_T(q, RBpCochain.zero(1, 2, 2))


def test_rbp_cohomology_is_cochain_space_for_zero_data():
    p = paired("FIX-A/trivial")
    n, m = 2, 2
    for k in (1, 2, 3):
        assert rbp_cohomology(p, k).betti == comb(n, k) * n + comb(n, k - 1) * m * m == RBpCochain.space_dim(k, n, m)


@pytest.mark.parametrize("name", sorted(LIE))
def test_increment_equation(name):
    p = paired(name)
    n, m = p.blocks.n, p.blocks.m
    assert mc_deformation_check(p, Matrix.zeros(n), Matrix.zeros(m))
    base = WeightedRBLie(p.g, p.weight, p.T)
    du = dual_operator(base)
    dr = dual_representation(base, RBLieRepresentation(p.rep, p.calT))
    assert mc_deformation_check(p, du.T - p.T, dr.calT - p.calT)
    rng = random.Random(7)
    for _ in range(10):
        T2, c2 = random_matrix(rng, n), random_matrix(rng, m)
        expect = bool(check_paired(p.with_operators(p.T + T2, p.calT + c2)))
        assert bool(mc_deformation_check(p, T2, c2)) == expect


# --- the doubled algebra and the graph ---------------------------------------


def test_lambda_double():
    ab = lambda_double(LieAlgebra.abelian(2), 0)
    assert all(not any(v) for row in ab.constants for v in row)
    d = lambda_double(aff1(), 1)
    assert d.dim == 4 and validate_lie(d)
    proj = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]])
    assert is_lie_homomorphism(d, aff1(), proj)
    for lam in (0, 1, F(1, 2)):
        g = sl2()
        assert validate_representation(lambda_double(g, lam), lambda_double_rep(g, adjoint_rep(g), lam))


def test_graph_without_module_is_operator_graph():
    g = aff1()
    for T, ok in ((Matrix.diag([-1, 0]), True), (Matrix.from_rows([[0, 1], [1, 0]]), False)):
        p = PairedOperators(g, zero_rep(g, 0), 1 if ok else 0, T, Matrix.zeros(0))
        assert bool(graph_subalgebra_check(p)) == ok == bool(check_paired(p))


def test_graph_witness_for_perturbed_module_operator():
    p = paired("FIX-A")
    q = p.with_operators(p.T, p.calT + Matrix.from_rows([[0, 1], [0, 0]]))
    cert = graph_subalgebra_check(q)
    assert not cert and any(cert.residual)
