"""Acceptance run: ten numbered criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
Every comparison is exact; the random corpora are seeded.
"""

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpers import closed_form_TT, random_matrix  # noqa: E402
from rblie.cochains import (  # noqa: E402
    CECochain,
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
    skew_symmetrize_rb_cochain,
)
from rblie.cohomology import (  # noqa: E402
    betti_numbers,
    cohomology,
    derivations,
    dual_complex,
    inner_derivations,
    is_coboundary,
    rb_assoc_complex,
    rb_complex,
)
from rblie.deformations import (  # noqa: E402
    apply_gauge,
    check_deformation,
    constant_deformation,
    infinitesimal,
    random_gauge,
    trivialize,
)
from rblie.extensions import cocycle_from_extension, extension_from_cocycle, extensions_isomorphic  # noqa: E402
from rblie.fixtures import assoc_configurations, fix_a, fix_a_trivial, fix_ab, fix_ass_rb, fix_sl2, lie_configurations  # noqa: E402
from rblie.graded import (  # noqa: E402
    PairedOperators,
    check_paired,
    d_T,
    dd,
    derived_bracket,
    graph_subalgebra_check,
    mc_check,
    mc_residual,
    operator_cochain,
    random_rbp_cochain,
)
from rblie.rota_baxter import (  # noqa: E402
    adjoint_rb_rep,
    assoc_deformed_product,
    compatibility_skew,
    deformed_bracket,
    dual_operator,
    dual_representation,
    skew_symmetrize_rb,
)
from rblie.algebra import skew_symmetrize_algebra  # noqa: E402
from rblie.linalg import vec_scale  # noqa: E402

SAMPLES = 100
PAIRS = 50
GAUGES = 20
MAX_DEGREE = 3

LIE_FIXTURES = {"FIX-AB": fix_ab, "FIX-A": fix_a, "FIX-SL2": fix_sl2}


def _paired(rb, rbrep):
    return PairedOperators(rb.g, rbrep.rep, rb.weight, rb.T, rbrep.calT)


def _corpus(seed, make, degrees):
    rng = random.Random(seed)
    return {n: [make(rng, n) for _ in range(SAMPLES)] for n in degrees}


def criterion_1():
    failures = []
    for name, fx in LIE_FIXTURES.items():
        rb, r = fx()
        g, rep, n, m = rb.g, r.rep, rb.g.dim, r.rep.module_dim
        ce = _corpus(1, lambda rng, k: random_ce_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
        rbc = _corpus(2, lambda rng, k: random_rb_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
        rbp = _corpus(3, lambda rng, k: random_rbp_cochain(rng, k, n, m), range(1, MAX_DEGREE + 1))
        p = _paired(rb, r)
        for k in range(MAX_DEGREE + 1):
            for f in ce[k]:
                if not delta_ce(g, rep, delta_ce(g, rep, f)).is_zero():
                    failures.append((name, "delta_ce", k))
                if not partial_ce(rb, r, partial_ce(rb, r, f)).is_zero():
                    failures.append((name, "partial_ce", k))
            for c in rbc[k]:
                if not delta_rb(rb, r, delta_rb(rb, r, c)).is_zero():
                    failures.append((name, "delta_rb", k))
            for c in rbp.get(k, []):
                if not d_T(p, d_T(p, c)).is_zero():
                    failures.append((name, "d_T", k))
    rba, bim = fix_ass_rb()
    a, M, n, m = rba.a, bim.bim, rba.a.dim, bim.bim.module_dim
    hh = _corpus(4, lambda rng, k: random_hochschild_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
    rbh = _corpus(5, lambda rng, k: random_rb_assoc_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
    for k in range(MAX_DEGREE + 1):
        for f in hh[k]:
            if not delta_hochschild(a, M, delta_hochschild(a, M, f)).is_zero():
                failures.append(("FIX-ASS", "delta_H", k))
            if not partial_hochschild(rba, bim, partial_hochschild(rba, bim, f)).is_zero():
                failures.append(("FIX-ASS", "partial_H", k))
        for c in rbh[k]:
            if not delta_rb_assoc(rba, bim, delta_rb_assoc(rba, bim, c)).is_zero():
                failures.append(("FIX-ASS", "delta_rb_assoc", k))
    return not failures, f"{len(failures)} nonzero squares; {SAMPLES} cochains per fixture, degree and differential"


def criterion_2():
    failures = []
    for name, fx in LIE_FIXTURES.items():
        rb, r = fx()
        n, m = rb.g.dim, r.rep.module_dim
        ce = _corpus(1, lambda rng, k: random_ce_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
        for k, fs in ce.items():
            for f in fs:
                if partial_ce(rb, r, phi(rb, r, f)) != phi(rb, r, delta_ce(rb.g, r.rep, f)):
                    failures.append((name, k))
    rba, bim = fix_ass_rb()
    n, m = rba.a.dim, bim.bim.module_dim
    hh = _corpus(4, lambda rng, k: random_hochschild_cochain(rng, k, n, m), range(MAX_DEGREE + 1))
    for k, fs in hh.items():
        for f in fs:
            if partial_hochschild(rba, bim, psi(rba, bim, f)) != psi(rba, bim, delta_hochschild(rba.a, bim.bim, f)):
                failures.append(("FIX-ASS", k))
    return not failures, f"{len(failures)} non-commuting squares in degrees 0-{MAX_DEGREE}"


def criterion_3():
    bad = []
    for name, (rb, r) in lie_configurations().items():
        if cohomology(rb_complex(rb, r), 0).betti != 0:
            bad.append(name)
    for name, (rba, bim) in assoc_configurations().items():
        if cohomology(rb_assoc_complex(rba, bim), 0).betti != 0:
            bad.append(name)
    return not bad, f"H^0 nonzero for {bad}" if bad else "H^0 = 0 on every configuration"


def criterion_4():
    rb, r = fix_a_trivial()
    b1 = cohomology(rb_complex(rb, r), 1).betti
    der, inner = len(derivations(rb, r)), len(inner_derivations(rb, r))
    ok = b1 == 2 and (der, inner) == (4, 2) and der - inner == b1
    return ok, f"betti(1) = {b1}, Der = {der}, InnDer = {inner}"


def criterion_5():
    rng = random.Random(6)
    notes = []
    ok = True
    for name, (rb, r) in lie_configurations().items():
        cx = rb_complex(rb, r)
        n, m = rb.g.dim, r.rep.module_dim
        h2 = cohomology(cx, 2)
        for c in h2.cocycle_basis + [RBCochain.zero(CECochain, 2, n, m)]:
            e = extension_from_cocycle(rb, r, c)
            if cocycle_from_extension(e) != c:
                ok = False
                notes.append(f"{name}: round trip")
            shifted = extension_from_cocycle(rb, r, c + delta_rb(rb, r, random_rb_cochain(rng, 1, n, m)))
            if extensions_isomorphic(e, shifted) is None:
                ok = False
                notes.append(f"{name}: cohomologous pair rejected")
    rb, r = fix_a_trivial()
    n, m = rb.g.dim, r.rep.module_dim
    semi = extension_from_cocycle(rb, r, RBCochain.zero(CECochain, 2, n, m))
    classes = cohomology(rb_complex(rb, r), 2).cocycle_basis
    rejected = sum(extensions_isomorphic(extension_from_cocycle(rb, r, c), semi) is None for c in classes)
    if not classes or rejected != len(classes):
        ok = False
        notes.append(f"trivial fixture: {rejected}/{len(classes)} classes rejected")
    return ok, "; ".join(notes) or f"round trips exact, {rejected}/{len(classes)} nontrivial classes rejected against the semidirect product"


def criterion_6():
    rng = random.Random(7)
    failures = []
    count = 0
    for name, fx in LIE_FIXTURES.items():
        rb, _ = fx()
        for i in range(GAUGES):
            N = 1 + i % 3
            d0 = constant_deformation(rb, N)
            d = apply_gauge(d0, random_gauge(rng, rb.g.dim, N))
            count += 1
            if not check_deformation(d):
                failures.append((name, i, "not a deformation"))
                continue
            if not is_coboundary(rb_complex(rb, adjoint_rb_rep(rb)), infinitesimal(d)[0]):
                failures.append((name, i, "infinitesimal"))
            res = trivialize(d)
            if not res or apply_gauge(d, res.gauge) != d0:
                failures.append((name, i, "trivialize"))
    return not failures, f"{len(failures)} failures over {count} gauge transforms"


def _pair_corpus():
    """Seeded (fixture, pair) list mixing valid and perturbed operators."""
    out = []
    for name, fx in LIE_FIXTURES.items():
        rb, r = fx()
        p = _paired(rb, r)
        du, dr = dual_operator(rb), dual_representation(rb, r)
        n, m = rb.g.dim, r.rep.module_dim
        rng = random.Random(len(out) + 11)
        for i in range(PAIRS):
            mode = i % 5
            if mode == 0:
                q = p
            elif mode == 1:
                q = p.with_operators(du.T, dr.calT)
            elif mode == 2:
                q = p.with_operators(p.T, p.calT + random_matrix(rng, m))
            elif mode == 3:
                q = p.with_operators(p.T + random_matrix(rng, n), p.calT)
            else:
                q = p.with_operators(random_matrix(rng, n), random_matrix(rng, m))
            out.append((name, q))
    return out


def criterion_7():
    corpus = _pair_corpus()
    mismatch, closed, valid = 0, 0, 0
    for _, q in corpus:
        ok = bool(check_paired(q))
        if mc_residual(q).is_zero() != ok or bool(mc_check(q)) != ok:
            mismatch += 1
        if not ok:
            continue
        valid += 1
        T = operator_cochain(q.T, q.calT)
        TT = derived_bracket(q.g, q.rep, T, T)
        dT = dd(q.g, q.rep, q.weight, T)
        c1, c2 = closed_form_TT(q)
        good = all(TT.part1.at(t) == v for t, v in c1.items())
        good &= all(TT.value2((i,), a) == v for (i, a), v in c2.items())
        good &= all(
            dT.part1.at((i, j)) == vec_scale(q.weight, q.T.apply(q.g.basis_bracket(i, j))) for (i, j) in c1
        )
        good &= all(dT.value2((i,), a) == vec_scale(q.weight, q.calT.apply(q.rep.rho[i].col(a))) for (i, a) in c2)
        closed += not good
    return mismatch == 0 and closed == 0, (
        f"{len(corpus)} pairs ({valid} valid): {mismatch} verdict mismatches, {closed} closed-form mismatches"
    )


def criterion_8():
    notes = []
    for lam in (0, 1, -1):
        rba, bim = fix_ass_rb(lam)
        rb = skew_symmetrize_rb(rba)
        a1 = deformed_bracket(rb).constants
        a2 = skew_symmetrize_algebra(assoc_deformed_product(rba)).constants
        if a1 != a2 or not compatibility_skew(rba, bim):
            notes.append(f"arrays differ at weight {lam}")
        rb, rr = skew_symmetrize_rb(rba, bim)
        rng = random.Random(8 + lam)
        for k in range(3):
            for _ in range(SAMPLES):
                c = random_rb_assoc_cochain(rng, k, rba.a.dim, bim.bim.module_dim)
                lhs = delta_rb(rb, rr, skew_symmetrize_rb_cochain(c))
                if lhs != skew_symmetrize_rb_cochain(delta_rb_assoc(rba, bim, c)):
                    notes.append(f"chain map fails at weight {lam}, degree {k}")
                    break
    return not notes, "; ".join(notes) or "structure constants identical at weights 0, 1, -1; chain map exact in degrees 0-2"


def criterion_9():
    bad = []
    for name, (rb, r) in lie_configurations().items():
        b = betti_numbers(rb_complex(rb, r), MAX_DEGREE)
        bd = betti_numbers(dual_complex(rb, r), MAX_DEGREE)
        if b != bd:
            bad.append(f"{name}: {b} vs {bd}")
    return not bad, "; ".join(bad) or f"betti agree on {len(lie_configurations())} configurations"


def criterion_10():
    corpus = _pair_corpus()
    mismatch = sum(bool(graph_subalgebra_check(q)) != bool(check_paired(q)) for _, q in corpus)
    valid = sum(bool(check_paired(q)) for _, q in corpus)
    return mismatch == 0, f"{mismatch} mismatches over {len(corpus)} pairs ({valid} valid)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _report(k, ok, detail):
    return f"acceptance {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, 11))
def test_acceptance(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _report(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [CRITERIA[k - 1]() for k in range(1, 11)]
    for k, (ok, detail) in enumerate(results, start=1):
        print(_report(k, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
