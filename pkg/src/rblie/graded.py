"""Paired operators, the Nijenhuis-Richardson bracket and the derived-bracket DGLA.

The ambient space is ``l = g + g' + V + V'`` with flat basis ordered by blocks
``g`` (``0..n-1``), ``g'`` (``n..2n-1``), ``V`` (``2n..2n+m-1``) and ``V'``
(``2n+m..2n+2m-1``). Alternating maps on ``l`` are :class:`MultiMap` values,
evaluated lazily and cached, so brackets of brackets only touch the argument
tuples they are asked about.

A cochain ``(P1, P2)`` with ``P1 : wedge^k g -> g`` and
``P2 : wedge^(k-1) g (x) V -> V`` embeds as the map that is ``P1`` on
``g'``-arguments and ``P2`` on ``(g',...,g', V')``-arguments, and zero elsewhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, isqrt

from .algebra import LieAlgebra, LieRepresentation
from .certificate import Certificate, ShapeError, StructureError
from .cochains import CECochain, sort_with_sign, wedge_basis
from .cohomology import CochainComplex
from .linalg import Matrix, vec_add, vec_scale, vec_sub, zero_vector
from .rota_baxter import WeightedRBLie

__all__ = [
    "PairedOperators",
    "RBpCochain",
    "MultiMap",
    "LBlocks",
    "check_paired",
    "lambda_double",
    "lambda_double_rep",
    "four_block_algebra",
    "graph_subalgebra_check",
    "nr_diamond",
    "nr_bracket",
    "build_theta",
    "build_theta_prime",
    "embed",
    "project",
    "derived_bracket",
    "dd",
    "mc_residual",
    "mc_check",
    "d_T",
    "rbp_complex",
    "rbp_cohomology",
    "mc_deformation_check",
    "random_rbp_cochain",
    "operator_cochain",
]


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class PairedOperators:
    g: LieAlgebra
    rep: LieRepresentation
    weight: Fraction
    T: Matrix
    calT: Matrix

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.T.shape != (self.g.dim, self.g.dim):
            raise ShapeError("T must be square of the algebra dimension")
        if self.calT.shape != (self.rep.module_dim, self.rep.module_dim):
            raise ShapeError("calT must be square of the module dimension")
        if len(self.rep.rho) != self.g.dim:
            raise ShapeError("representation does not match the algebra")

    @property
    def blocks(self) -> "LBlocks":
        return LBlocks(self.g.dim, self.rep.module_dim)

    def with_operators(self, T: Matrix, calT: Matrix) -> "PairedOperators":
        return PairedOperators(self.g, self.rep, self.weight, T, calT)


@dataclass(frozen=True)
class LBlocks:
    n: int
    m: int

    @property
    def size(self) -> int:
        return 2 * self.n + 2 * self.m

    def g(self, i):
        return i

    def gp(self, i):
        return self.n + i

    def v(self, a):
        return 2 * self.n + a

    def vp(self, a):
        return 2 * self.n + self.m + a


@dataclass(frozen=True)
class RBpCochain:
    """``part1`` in ``Hom(wedge^k g, g)``; ``part2`` in ``Hom(wedge^(k-1) g (x) V, V)``.

    ``part2`` is stored as a degree ``k-1`` cochain with values in ``End(V)``
    written row-major, so ``part2(x..)[r*m + a]`` is coordinate ``r`` of the
    value on ``(x.., e_a)``.
    """

    part1: CECochain
    part2: CECochain

    def __post_init__(self):
        if self.part2.degree != self.part1.degree - 1:
            raise ShapeError("second part must have one fewer algebra argument")
        if self.part1.degree < 1:
            raise ShapeError("paired-operator cochains start in degree 1")

    @property
    def degree(self) -> int:
        return self.part1.degree

    @property
    def g_dim(self) -> int:
        return self.part1.src_dim

    @property
    def v_dim(self) -> int:
        return isqrt(self.part2.tgt_dim)

    @staticmethod
    def space_dim(k: int, n: int, m: int) -> int:
        if k < 1:
            return 0
        return comb(n, k) * n + comb(n, k - 1) * m * m

    @classmethod
    def zero(cls, k, n, m):
        return cls(CECochain.zero(k, n, n), CECochain.zero(k - 1, n, m * m))

    @classmethod
    def from_flat(cls, k, n, m, flat):
        d1 = comb(n, k) * n
        return cls(CECochain.from_flat(k, n, n, flat[:d1]), CECochain.from_flat(k - 1, n, m * m, flat[d1:]))

    def flat(self):
        return self.part1.flat() + self.part2.flat()

    def __add__(self, o):
        return RBpCochain(self.part1 + o.part1, self.part2 + o.part2)

    def __sub__(self, o):
        return RBpCochain(self.part1 - o.part1, self.part2 - o.part2)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return RBpCochain(self.part1.scale(c), self.part2.scale(c))

    def is_zero(self):
        return self.part1.is_zero() and self.part2.is_zero()

    def value2(self, idx, a):
        """``part2(e_idx.., e_a)`` as a vector of ``V``."""
        m = self.v_dim
        w = self.part2.at(idx)
        if w is None:
            return zero_vector(m)
        return tuple(w[r * m + a] for r in range(m))

    def to_dict(self):
        return {"degree": self.degree, "part1": self.part1.to_dict(), "part2": self.part2.to_dict()}


def operator_cochain(T: Matrix, calT: Matrix) -> RBpCochain:
    """The degree-1 cochain of a pair of operators."""
    n, m = T.rows, calT.rows
    p1 = CECochain.from_function(1, n, n, lambda t: T.col(t[0]))
    p2 = CECochain(0, n, m * m, (calT.entries,))
    return RBpCochain(p1, p2)


def _cochain_operators(c: RBpCochain) -> tuple[Matrix, Matrix]:
    n, m = c.g_dim, c.v_dim
    T = Matrix.from_columns([c.part1.values[i] for i in range(n)], n)
    calT = Matrix(m, m, tuple(c.part2.values[0]))
    return T, calT


# ---------------------------------------------------------------------------
# paired operators and the doubled algebra


def _unit(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def check_paired(p: PairedOperators) -> Certificate:
    """Both identities on basis elements; the first is reported before the second."""
    g, rep, T, calT, lam = p.g, p.rep, p.T, p.calT, p.weight
    n, m = g.dim, rep.module_dim
    for i in range(n):
        for j in range(i + 1, n):
            x, y = _unit(n, i), _unit(n, j)
            Tx, Ty = T.col(i), T.col(j)
            inner = vec_add(vec_add(g.bracket(Tx, y), g.bracket(x, Ty)), vec_scale(lam, g.basis_bracket(i, j)))
            d = vec_sub(g.bracket(Tx, Ty), T.apply(inner))
            if any(d):
                return Certificate.failed("paired operators (algebra identity)", (i, j), d)
    for i in range(n):
        x = _unit(n, i)
        Tx = T.col(i)
        rTx = rep.matrix(Tx)
        for a in range(m):
            u = _unit(m, a)
            Tu = calT.col(a)
            inner = vec_add(vec_add(rTx.apply(u), rep.rho[i].apply(Tu)), vec_scale(lam, rep.rho[i].apply(u)))
            d = vec_sub(rTx.apply(Tu), calT.apply(inner))
            if any(d):
                return Certificate.failed("paired operators (module identity)", (i, a), d)
    return Certificate.passed("paired operators")


def lambda_double(g: LieAlgebra, weight) -> LieAlgebra:
    """``[(x,x'),(y,y')] = ([x,y], [x,y'] + [x',y] + lam [x',y'])`` on ``g + g``."""
    lam = Fraction(weight)
    n = g.dim
    zn = zero_vector(n)

    def br(a, b):
        ia, ib = a // n, b // n
        c = g.basis_bracket(a % n, b % n)
        if ia == 0 and ib == 0:
            return c + zn
        if ia == 1 and ib == 1:
            return zn + vec_scale(lam, c)
        return zn + c

    return LieAlgebra.from_function(2 * n, br)


def lambda_double_rep(g: LieAlgebra, rep: LieRepresentation, weight) -> LieRepresentation:
    lam = Fraction(weight)
    m = rep.module_dim
    Z = Matrix.zeros(m)
    mats = []
    for i in range(g.dim):
        r = rep.rho[i]
        mats.append(Matrix.from_rows(
            [list(r.row(k)) + [0] * m for k in range(m)] + [[0] * m + list(r.row(k)) for k in range(m)]
        ))
    for i in range(g.dim):
        r = rep.rho[i]
        lr = r.scale(lam)
        mats.append(Matrix.from_rows(
            [list(Z.row(k)) + list(Z.row(k)) for k in range(m)] + [list(r.row(k)) + list(lr.row(k)) for k in range(m)]
        ))
    return LieRepresentation(2 * m, tuple(mats))


def four_block_algebra(g: LieAlgebra, rep: LieRepresentation, weight) -> LieAlgebra:
    """Semidirect product of the doubled algebra with the doubled module; blocks ``(g, g, V, V)``."""
    from .rota_baxter import RBLieRepresentation, semidirect

    dbl = lambda_double(g, weight)
    drep = lambda_double_rep(g, rep, weight)
    rb = WeightedRBLie(dbl, weight, Matrix.zeros(dbl.dim))
    return semidirect(rb, RBLieRepresentation(drep, Matrix.zeros(drep.module_dim))).g


def graph_subalgebra_check(p: PairedOperators) -> Certificate:
    """Closure of ``{(Tx, x, calT u, u)}`` under the four-block bracket."""
    n, m = p.g.dim, p.rep.module_dim
    big = four_block_algebra(p.g, p.rep, p.weight)
    zn, zm = zero_vector(n), zero_vector(m)
    gens = [p.T.col(i) + _unit(n, i) + zm + zm for i in range(n)]
    gens += [zn + zn + p.calT.col(a) + _unit(m, a) for a in range(m)]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            z = big.bracket(gens[i], gens[j])
            x = z[n:2 * n]
            u = z[2 * n + m:]
            proj = p.T.apply(x) + x + p.calT.apply(u) + u
            d = vec_sub(z, proj)
            if any(d):
                return Certificate.failed("graph subalgebra", (i, j), d)
    return Certificate.passed("graph subalgebra")


# ---------------------------------------------------------------------------
# alternating maps on l


def _sparse_add(acc: dict, vec: dict, c):
    for k, x in vec.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


class MultiMap:
    """Alternating ``m``-linear map on ``l`` with values in ``l``.

    Values are sparse ``{coordinate: Fraction}`` dicts on strictly increasing
    basis tuples. Either ``data`` is given explicitly or ``fn`` computes a
    value on demand (results are cached).
    """

    def __init__(self, arity: int, blocks: LBlocks, data: dict | None = None, fn=None):
        if arity < 1:
            raise ValueError("multilinear maps of arity 0 are not handled")
        self.arity = arity
        self.blocks = blocks
        self._data = None if data is None else {k: dict(v) for k, v in data.items() if v}
        self._fn = fn
        self._cache: dict = {}

    def at(self, t: tuple) -> dict:
        """Value on an increasing tuple."""
        if self._data is not None:
            return self._data.get(t, {})
        v = self._cache.get(t)
        if v is None:
            v = self._fn(t)
            self._cache[t] = v
        return v

    def value(self, idx) -> tuple[int, dict]:
        sign, s = sort_with_sign(idx)
        if sign == 0:
            return 0, {}
        return sign, self.at(s)

    def apply_first(self, vec: dict, rest: tuple) -> dict:
        """``f(vec, e_rest...)`` for a sparse vector ``vec``."""
        out: dict = {}
        for k, c in vec.items():
            sign, v = self.value((k,) + rest)
            if sign:
                _sparse_add(out, v, sign * c)
        return out

    def __call__(self, *vectors) -> tuple:
        """Dense multilinear evaluation (used by tests and closed-form checks)."""
        from itertools import product

        L = self.blocks.size
        out: dict = {}
        supports = [[(i, c) for i, c in enumerate(v) if c] for v in vectors]
        for choice in product(*supports):
            coef = Fraction(1)
            for _, c in choice:
                coef *= c
            sign, v = self.value(tuple(i for i, _ in choice))
            if sign:
                _sparse_add(out, v, sign * coef)
        return tuple(out.get(k, Fraction(0)) for k in range(L))

    def materialize(self) -> dict:
        L = self.blocks.size
        out = {}
        for t in combinations(range(L), self.arity):
            v = {k: c for k, c in self.at(t).items() if c}
            if v:
                out[t] = v
        return out

    def is_zero(self) -> bool:
        return not self.materialize()

    def __add__(self, other):
        self._check(other)
        return MultiMap(self.arity, self.blocks, fn=lambda t: _sum(self.at(t), other.at(t), 1))

    def __sub__(self, other):
        self._check(other)
        return MultiMap(self.arity, self.blocks, fn=lambda t: _sum(self.at(t), other.at(t), -1))

    def scale(self, c):
        c = Fraction(c)
        return MultiMap(self.arity, self.blocks, fn=lambda t: {k: c * x for k, x in self.at(t).items()} if c else {})

    def _check(self, other):
        if self.arity != other.arity or self.blocks != other.blocks:
            raise ShapeError("maps of different arity or on different spaces")

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return self.arity == other.arity and self.blocks == other.blocks and self.materialize() == other.materialize()

    __hash__ = None


def _sum(a: dict, b: dict, s) -> dict:
    out = dict(a)
    _sparse_add(out, b, s)
    return out


def _unshuffles(k: int, p: int):
    """Position sets of size ``p`` in ``range(k)`` with the sign of moving them to the front."""
    for S in combinations(range(k), p):
        e = sum(s - j for j, s in enumerate(S))
        rest = tuple(i for i in range(k) if i not in S)
        yield S, rest, (-1 if e % 2 else 1)


def nr_diamond(f: MultiMap, h: MultiMap) -> MultiMap:
    """``(f . h)(l..) = sum over unshuffles of sign * f(h(l_S), l_rest)``."""
    if f.blocks != h.blocks:
        raise ShapeError("maps on different spaces")
    k = f.arity + h.arity - 1
    shuffles = list(_unshuffles(k, h.arity))

    def fn(t):
        out: dict = {}
        for S, rest, sign in shuffles:
            inner = h.at(tuple(t[i] for i in S))
            if not inner:
                continue
            _sparse_add(out, f.apply_first(inner, tuple(t[i] for i in rest)), sign)
        return out

    return MultiMap(k, f.blocks, fn=fn)


def nr_bracket(f: MultiMap, h: MultiMap) -> MultiMap:
    """``[f,h] = f.h - (-1)^((m-1)(n-1)) h.f``."""
    s = -1 if ((f.arity - 1) * (h.arity - 1)) % 2 == 0 else 1
    a, b = nr_diamond(f, h), nr_diamond(h, f)
    return MultiMap(a.arity, f.blocks, fn=lambda t: _sum(a.at(t), b.at(t), s))


def _bilinear_map(blocks: LBlocks, entries) -> MultiMap:
    """Alternating bilinear map from ``(i, j, {k: c})`` with ``i < j``."""
    data: dict = {}
    for i, j, vec in entries:
        if i == j:
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        acc = data.setdefault((i, j), {})
        _sparse_add(acc, vec, sign)
    return MultiMap(2, blocks, data=data)


def _sparse(vec, offset=0) -> dict:
    return {offset + k: Fraction(x) for k, x in enumerate(vec) if x}


def build_theta(g: LieAlgebra, rep: LieRepresentation) -> MultiMap:
    """``mu + ad' + rho + rho' + varrho``; ``varrho`` takes ``g' x V`` into ``V'``."""
    B = LBlocks(g.dim, rep.module_dim)
    n, m = B.n, B.m
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            c = g.basis_bracket(i, j)
            entries.append((B.g(i), B.g(j), _sparse(c, 0)))  # mu
        for j in range(n):
            c = g.basis_bracket(i, j)
            entries.append((B.g(i), B.gp(j), _sparse(c, n)))  # ad'
        for a in range(m):
            col = rep.rho[i].col(a)
            entries.append((B.g(i), B.v(a), _sparse(col, 2 * n)))  # rho
            entries.append((B.g(i), B.vp(a), _sparse(col, 2 * n + m)))  # rho'
            entries.append((B.gp(i), B.v(a), _sparse(col, 2 * n + m)))  # varrho
    return _bilinear_map(B, entries)


def build_theta_prime(g: LieAlgebra, rep: LieRepresentation) -> MultiMap:
    """``-(mu' + varrho')`` on ``g' + V'``."""
    B = LBlocks(g.dim, rep.module_dim)
    n, m = B.n, B.m
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            c = g.basis_bracket(i, j)
            entries.append((B.gp(i), B.gp(j), _sparse(vec_scale(-1, c), n)))
        for a in range(m):
            col = rep.rho[i].col(a)
            entries.append((B.gp(i), B.vp(a), _sparse(vec_scale(-1, col), 2 * n + m)))
    return _bilinear_map(B, entries)


def embed(c: RBpCochain, blocks: LBlocks) -> MultiMap:
    n, m = blocks.n, blocks.m
    if c.g_dim != n or c.v_dim != m:
        raise ShapeError("cochain does not match the block structure")
    k = c.degree
    data = {}
    for t, v in zip(wedge_basis(n, k), c.part1.values):
        if any(v):
            data[tuple(blocks.gp(i) for i in t)] = _sparse(v, 0)
    for t in wedge_basis(n, k - 1):
        for a in range(m):
            v = c.value2(t, a)
            if any(v):
                data[tuple(blocks.gp(i) for i in t) + (blocks.vp(a),)] = _sparse(v, 2 * n)
    return MultiMap(k, blocks, data=data)


def project(f: MultiMap) -> RBpCochain:
    """Read off the ``g'``-to-``g`` and ``(g'.., V')``-to-``V`` components."""
    B = f.blocks
    n, m, k = B.n, B.m, f.arity

    def p1(t):
        v = f.at(tuple(B.gp(i) for i in t))
        return tuple(v.get(r, Fraction(0)) for r in range(n))

    def p2(t):
        out = [Fraction(0)] * (m * m)
        for a in range(m):
            v = f.at(tuple(B.gp(i) for i in t) + (B.vp(a),))
            for r in range(m):
                x = v.get(B.v(r))
                if x:
                    out[r * m + a] = x
        return tuple(out)

    return RBpCochain(CECochain.from_function(k, n, n, p1), CECochain.from_function(k - 1, n, m * m, p2))


# ---------------------------------------------------------------------------
# the differential graded Lie algebra


class _Context:
    """``theta``, ``theta'`` and cached ``[theta, T]`` for one ``(g, rep)``."""

    def __init__(self, g: LieAlgebra, rep: LieRepresentation):
        self.g, self.rep = g, rep
        self.blocks = LBlocks(g.dim, rep.module_dim)

    @cached_property
    def theta(self):
        return build_theta(self.g, self.rep)

    @cached_property
    def theta_prime(self):
        return build_theta_prime(self.g, self.rep)


_contexts: dict = {}


def _ctx(g, rep) -> _Context:
    key = (g, rep)
    ctx = _contexts.get(key)
    if ctx is None:
        if len(_contexts) > 64:
            _contexts.clear()
        ctx = _contexts[key] = _Context(g, rep)
    return ctx


def derived_bracket(g: LieAlgebra, rep: LieRepresentation, P: RBpCochain, Q: RBpCochain) -> RBpCochain:
    """``(-1)^m [[theta, P], Q]`` projected back, ``m`` the degree of ``P``."""
    ctx = _ctx(g, rep)
    inner = nr_bracket(ctx.theta, embed(P, ctx.blocks))
    outer = nr_bracket(inner, embed(Q, ctx.blocks))
    out = project(outer)
    return out if P.degree % 2 == 0 else -out


def dd(g: LieAlgebra, rep: LieRepresentation, weight, c: RBpCochain) -> RBpCochain:
    """``lam [theta', c]`` projected back."""
    lam = Fraction(weight)
    if not lam:
        return RBpCochain.zero(c.degree + 1, c.g_dim, c.v_dim)
    ctx = _ctx(g, rep)
    return project(nr_bracket(ctx.theta_prime, embed(c, ctx.blocks))).scale(lam)


def _closed_form_residual(p: PairedOperators) -> RBpCochain:
    """``d T + 1/2 [[T, T]]`` from the component formulas."""
    g, rep, T, calT, lam = p.g, p.rep, p.T, p.calT, p.weight
    n, m = g.dim, rep.module_dim

    def p1(t):
        i, j = t
        x, y = _unit(n, i), _unit(n, j)
        Tx, Ty = T.col(i), T.col(j)
        inner = vec_add(vec_add(g.bracket(Tx, y), g.bracket(x, Ty)), vec_scale(lam, g.basis_bracket(i, j)))
        return vec_sub(T.apply(inner), g.bracket(Tx, Ty))

    def p2(t):
        (i,) = t
        rTx = rep.matrix(T.col(i))
        r = rep.rho[i]
        M = rTx @ calT
        cols = []
        for a in range(m):
            u = _unit(m, a)
            inner = vec_add(vec_add(rTx.apply(u), r.apply(calT.col(a))), vec_scale(lam, r.apply(u)))
            cols.append(vec_sub(calT.apply(inner), M.col(a)))
        return Matrix.from_columns(cols, m).entries

    return RBpCochain(CECochain.from_function(2, n, n, p1), CECochain.from_function(1, n, m * m, p2))


def mc_residual(p: PairedOperators) -> RBpCochain:
    """``d T + 1/2 [[T, T]]`` by the bracket engine, cross-checked against the closed form."""
    T = operator_cochain(p.T, p.calT)
    engine = dd(p.g, p.rep, p.weight, T) + derived_bracket(p.g, p.rep, T, T).scale(Fraction(1, 2))
    closed = _closed_form_residual(p)
    if engine != closed:
        raise AssertionError("bracket engine and closed form disagree on the Maurer-Cartan residual")
    return engine


def mc_check(p: PairedOperators) -> Certificate:
    res = mc_residual(p)
    if res.is_zero():
        return Certificate.passed("maurer-cartan")
    for t, v in zip(wedge_basis(p.g.dim, 2), res.part1.values):
        if any(v):
            return Certificate.failed("maurer-cartan", ("part1",) + t, v)
    for t, v in zip(wedge_basis(p.g.dim, 1), res.part2.values):
        if any(v):
            return Certificate.failed("maurer-cartan", ("part2",) + t, v)
    raise AssertionError("unreachable")


def d_T(p: PairedOperators, c: RBpCochain, check: bool = True) -> RBpCochain:
    """``d c + [[T, c]]``; requires ``p`` to be a paired operator."""
    if check:
        cert = check_paired(p)
        if not cert:
            raise StructureError(f"not a paired operator, the differential would not square to zero: {cert}")
    T = operator_cochain(p.T, p.calT)
    return dd(p.g, p.rep, p.weight, c) + derived_bracket(p.g, p.rep, T, c)


def rbp_complex(p: PairedOperators) -> CochainComplex:
    cert = check_paired(p)
    if not cert:
        raise StructureError(f"not a paired operator: {cert}")
    n, m = p.g.dim, p.rep.module_dim
    return CochainComplex(
        "rbp",
        lambda k: RBpCochain.space_dim(k, n, m),
        lambda k, flat: RBpCochain.from_flat(k, n, m, flat),
        lambda c: c.flat(),
        lambda c: d_T(p, c, check=False),
    )


def rbp_cohomology(p: PairedOperators, k: int):
    from .cohomology import cohomology

    return cohomology(rbp_complex(p), k)


def mc_deformation_check(p: PairedOperators, T2: Matrix, calT2: Matrix) -> Certificate:
    """``d_T(T') + 1/2 [[T', T']]`` vanishes exactly when ``T + T'`` is paired."""
    inc = operator_cochain(T2, calT2)
    res = d_T(p, inc) + derived_bracket(p.g, p.rep, inc, inc).scale(Fraction(1, 2))
    if res.is_zero():
        return Certificate.passed("maurer-cartan increment")
    for t, v in zip(wedge_basis(p.g.dim, 2), res.part1.values):
        if any(v):
            return Certificate.failed("maurer-cartan increment", ("part1",) + t, v)
    for t, v in zip(wedge_basis(p.g.dim, 1), res.part2.values):
        if any(v):
            return Certificate.failed("maurer-cartan increment", ("part2",) + t, v)
    raise AssertionError("unreachable")


def random_rbp_cochain(rng: random.Random, k: int, n: int, m: int, spread: int = 3) -> RBpCochain:
    flat = [Fraction(rng.randint(-spread, spread)) for _ in range(RBpCochain.space_dim(k, n, m))]
    return RBpCochain.from_flat(k, n, m, flat)
