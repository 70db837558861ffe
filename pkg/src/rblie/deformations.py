"""Formal one-parameter deformations truncated at a finite order.

A deformation of ``(g, T)`` is given by coefficient lists ``mu[0..N]``
(alternating bilinear maps ``g x g -> g``, ``mu[0]`` the bracket) and
``T[0..N]`` (linear maps, ``T[0]`` the operator). A gauge transform is a list
``phi[0..N]`` with ``phi[0] = id``; it acts by
``mu' = phi^-1 mu (phi x phi)`` and ``T' = phi^-1 T phi``, truncated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra
from .certificate import Certificate, ShapeError
from .cochains import CECochain, RBCochain, delta_ce
from .cohomology import is_coboundary, is_cocycle, rb_complex
from .linalg import Matrix, is_zero_vector, vec_add, vec_sub, zero_vector
from .rota_baxter import WeightedRBLie, adjoint_rb_rep

__all__ = [
    "TruncatedDeformation",
    "GaugeTransform",
    "TrivializationResult",
    "constant_deformation",
    "bracket_cochain",
    "check_deformation",
    "infinitesimal",
    "apply_gauge",
    "compose_gauges",
    "inverse_gauge",
    "check_equivalence",
    "trivialize",
    "random_gauge",
]


def _unit(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def bracket_cochain(g: LieAlgebra) -> CECochain:
    return CECochain.from_function(2, g.dim, g.dim, lambda t: g.basis_bracket(*t))


@dataclass(frozen=True)
class TruncatedDeformation:
    base: WeightedRBLie
    mu: tuple  # CECochain of degree 2, one per order
    T: tuple  # Matrix, one per order

    def __post_init__(self):
        if len(self.mu) != len(self.T):
            raise ShapeError("bracket and operator coefficient lists differ in length")
        if not self.mu:
            raise ShapeError("a deformation needs at least the order-0 terms")
        n = self.base.g.dim
        for m in self.mu:
            if (m.degree, m.src_dim, m.tgt_dim) != (2, n, n):
                raise ShapeError("bracket coefficients must be 2-cochains on g with values in g")
        for t in self.T:
            if t.shape != (n, n):
                raise ShapeError("operator coefficients must be square of the algebra dimension")

    @property
    def order(self) -> int:
        return len(self.mu) - 1

    @property
    def weight(self) -> Fraction:
        return self.base.weight


@dataclass(frozen=True)
class GaugeTransform:
    phi: tuple  # Matrix per order, phi[0] = identity

    def __post_init__(self):
        if not self.phi or self.phi[0] != Matrix.identity(self.phi[0].rows):
            raise ShapeError("a gauge transform starts with the identity")

    @property
    def order(self) -> int:
        return len(self.phi) - 1

    @classmethod
    def identity(cls, dim: int, order: int) -> "GaugeTransform":
        return cls((Matrix.identity(dim),) + (Matrix.zeros(dim),) * order)

    def truncate(self, order: int) -> "GaugeTransform":
        n = self.phi[0].rows
        phi = list(self.phi[: order + 1])
        phi += [Matrix.zeros(n)] * (order + 1 - len(phi))
        return GaugeTransform(tuple(phi))


def constant_deformation(rb: WeightedRBLie, order: int) -> TruncatedDeformation:
    n = rb.g.dim
    zero = CECochain.zero(2, n, n)
    return TruncatedDeformation(rb, (bracket_cochain(rb.g),) + (zero,) * order, (rb.T,) + (Matrix.zeros(n),) * order)


# ---------------------------------------------------------------------------
# the order-by-order systems


def check_deformation(d: TruncatedDeformation) -> Certificate:
    """Jacobi and Rota-Baxter identities coefficient by coefficient.

    Failures report ``where = (order, basis indices...)``.
    """
    g = d.base.g
    n = g.dim
    lam = d.weight
    if d.mu[0] != bracket_cochain(g) or d.T[0] != d.base.T:
        return Certificate.failed("order-0 terms", (0,), (), "order-0 terms differ from the base structure")
    units = [_unit(n, i) for i in range(n)]
    for N in range(d.order + 1):
        # Jacobi
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    x, y, z = units[a], units[b], units[c]
                    acc = zero_vector(n)
                    for i in range(N + 1):
                        j = N - i
                        mi, mj = d.mu[i], d.mu[j]
                        acc = vec_add(acc, mi(x, mj(y, z)))
                        acc = vec_add(acc, mi(y, mj(z, x)))
                        acc = vec_add(acc, mi(z, mj(x, y)))
                    if not is_zero_vector(acc):
                        return Certificate.failed("deformation jacobi", (N, a, b, c), acc)
        # Rota-Baxter identity
        for a in range(n):
            for b in range(a + 1, n):
                x, y = units[a], units[b]
                lhs = zero_vector(n)
                rhs = zero_vector(n)
                for i in range(N + 1):
                    for j in range(N + 1 - i):
                        k = N - i - j
                        lhs = vec_add(lhs, d.mu[i](d.T[j].apply(x), d.T[k].apply(y)))
                        inner = vec_add(d.mu[j](d.T[k].apply(x), y), d.mu[j](x, d.T[k].apply(y)))
                        rhs = vec_add(rhs, d.T[i].apply(inner))
                    rhs = vec_add(rhs, tuple(lam * v for v in d.T[i].apply(d.mu[N - i](x, y))))
                diff = vec_sub(lhs, rhs)
                if not is_zero_vector(diff):
                    return Certificate.failed("deformation rota-baxter", (N, a, b), diff)
    return Certificate.passed("deformation")


def _complex(d: TruncatedDeformation):
    return rb_complex(d.base, adjoint_rb_rep(d.base))


def _matrix_cochain(M: Matrix) -> CECochain:
    return CECochain.from_function(1, M.cols, M.rows, lambda t: M.col(t[0]))


def _cochain_matrix(f: CECochain) -> Matrix:
    return Matrix.from_columns([f.values[i] for i in range(f.src_dim)], f.tgt_dim)


def order_term(d: TruncatedDeformation, k: int) -> RBCochain:
    return RBCochain(d.mu[k], _matrix_cochain(d.T[k]))


def infinitesimal(d: TruncatedDeformation) -> tuple[RBCochain, bool]:
    """``(mu_1, T_1)`` as a 2-cochain of the adjoint complex, and whether it is a cocycle."""
    if d.order < 1:
        raise ValueError("an order-0 deformation has no infinitesimal")
    c = order_term(d, 1)
    return c, is_cocycle(_complex(d), c)


# ---------------------------------------------------------------------------
# gauge action


def _series_product(a, b, order):
    n = a[0].rows
    out = []
    for k in range(order + 1):
        acc = Matrix.zeros(n)
        for i in range(k + 1):
            acc = acc + a[i] @ b[k - i]
        out.append(acc)
    return out


def inverse_gauge(gt: GaugeTransform) -> GaugeTransform:
    phi = gt.phi
    n = phi[0].rows
    inv = [Matrix.identity(n)]
    for k in range(1, len(phi)):
        acc = Matrix.zeros(n)
        for i in range(1, k + 1):
            acc = acc + phi[i] @ inv[k - i]
        inv.append(-acc)
    return GaugeTransform(tuple(inv))


def compose_gauges(g1: GaugeTransform, g2: GaugeTransform) -> GaugeTransform:
    """``g1 o g2`` truncated at the smaller order."""
    order = min(g1.order, g2.order)
    return GaugeTransform(tuple(_series_product(g1.phi, g2.phi, order)))


def apply_gauge(d: TruncatedDeformation, gt: GaugeTransform) -> TruncatedDeformation:
    N = d.order
    if gt.order < N:
        raise ShapeError("gauge transform of lower order than the deformation")
    gt = gt.truncate(N)
    phi = gt.phi
    psi = inverse_gauge(gt).phi
    n = d.base.g.dim
    mus = []
    for k in range(N + 1):
        def value(t, k=k):
            a, b = t
            acc = zero_vector(n)
            for i in range(k + 1):
                for j in range(k + 1 - i):
                    for p in range(k + 1 - i - j):
                        q = k - i - j - p
                        v = d.mu[j](phi[p].col(a), phi[q].col(b))
                        if any(v):
                            acc = vec_add(acc, psi[i].apply(v))
            return acc

        mus.append(CECochain.from_function(2, n, n, value))
    Ts = []
    for k in range(N + 1):
        acc = Matrix.zeros(n)
        for i in range(k + 1):
            for j in range(k + 1 - i):
                acc = acc + psi[i] @ d.T[j] @ phi[k - i - j]
        Ts.append(acc)
    return TruncatedDeformation(d.base, tuple(mus), tuple(Ts))


def check_equivalence(d: TruncatedDeformation, d2: TruncatedDeformation, gt: GaugeTransform) -> Certificate:
    """``phi`` intertwines ``d2`` with ``d``: ``phi mu2 = mu (phi x phi)`` and ``phi T2 = T phi``."""
    n = d.base.g.dim
    phi = gt.truncate(d.order).phi
    for N in range(d.order + 1):
        for a in range(n):
            for b in range(a + 1, n):
                x, y = _unit(n, a), _unit(n, b)
                lhs = zero_vector(n)
                for i in range(N + 1):
                    lhs = vec_add(lhs, phi[i].apply(d2.mu[N - i](x, y)))
                rhs = zero_vector(n)
                for i in range(N + 1):
                    for j in range(N + 1 - i):
                        rhs = vec_add(rhs, d.mu[i](phi[j].apply(x), phi[N - i - j].apply(y)))
                diff = vec_sub(lhs, rhs)
                if not is_zero_vector(diff):
                    return Certificate.failed("gauge bracket", (N, a, b), diff)
        lhs = Matrix.zeros(n)
        rhs = Matrix.zeros(n)
        for i in range(N + 1):
            lhs = lhs + phi[i] @ d2.T[N - i]
            rhs = rhs + d.T[i] @ phi[N - i]
        diff = lhs - rhs
        if not diff.is_zero():
            return Certificate.failed("gauge operator", (N,), diff.entries)
    return Certificate.passed("gauge equivalence")


# ---------------------------------------------------------------------------
# trivialization


@dataclass(frozen=True)
class TrivializationResult:
    gauge: GaugeTransform | None
    obstruction_order: int | None = None
    obstruction: RBCochain | None = None

    def __bool__(self) -> bool:
        return self.gauge is not None


def trivialize(d: TruncatedDeformation) -> TrivializationResult:
    """Gauge ``d`` to the constant deformation order by order.

    At order ``k`` the lowest surviving term ``(mu_k, T_k)`` is a 2-cocycle;
    if it equals ``-d_RB(gamma, v)`` the gauge ``id + (gamma + dv) t^k``
    removes it. Otherwise that order is reported with the offending cocycle.
    """
    n = d.base.g.dim
    N = d.order
    cx = _complex(d)
    rep = adjoint_rb_rep(d.base).rep
    total = GaugeTransform.identity(n, N)
    cur = d
    for k in range(1, N + 1):
        term = order_term(cur, k)
        if term.is_zero():
            continue
        prim = is_coboundary(cx, -term)
        if prim is None:
            return TrivializationResult(None, k, term)
        step_map = _cochain_matrix(prim.f + delta_ce(d.base.g, rep, prim.g))
        step = [Matrix.identity(n)] + [Matrix.zeros(n)] * N
        step[k] = step_map
        step = GaugeTransform(tuple(step))
        cur = apply_gauge(cur, step)
        total = compose_gauges(total, step)
    final = apply_gauge(d, total)
    if any(not final.mu[k].is_zero() or not final.T[k].is_zero() for k in range(1, N + 1)):
        raise AssertionError("composite gauge does not trivialize the deformation")
    return TrivializationResult(total)


def random_gauge(rng: random.Random, dim: int, order: int, spread: int = 2) -> GaugeTransform:
    phi = [Matrix.identity(dim)]
    for _ in range(order):
        phi.append(Matrix.from_rows([[rng.randint(-spread, spread) for _ in range(dim)] for _ in range(dim)]))
    return GaugeTransform(tuple(phi))
