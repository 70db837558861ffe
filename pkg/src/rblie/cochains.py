"""Cochains and coboundaries.

A Chevalley-Eilenberg cochain of degree ``n`` stores one value per strictly
increasing index tuple, in the order of :func:`itertools.combinations`. A
Hochschild cochain stores one value per index tuple in the order of
:func:`itertools.product`. Either kind flattens to a single coordinate vector:
tuple-major, then target coordinate.

Coboundary sign conventions. The Lie coboundary is

    (dF)(x_1..x_{n+1}) = sum_i (-1)^(i+n) rho(x_i) F(..^x_i..)
                       + sum_{i<j} (-1)^(i+j+n+1) F([x_i,x_j], ..^x_i..^x_j..)

which is ``(-1)^(n-1)`` times the textbook one, so ``(dv)(x) = -rho(x) v``.
The Hochschild coboundary carries the same twist so that skew-symmetrization
stays a chain map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb
from typing import Sequence

from .algebra import AssociativeAlgebra, Bimodule, LieAlgebra, LieRepresentation
from .certificate import ShapeError
from .linalg import Matrix, vec_add, vec_scale, zero_vector
from .rota_baxter import (
    RBBimodule,
    RBLieRepresentation,
    WeightedRBAssoc,
    WeightedRBLie,
    assoc_deformed_product,
    bimodule_tilde,
    deformed_bracket,
    rep_tilde,
)

__all__ = [
    "wedge_basis",
    "wedge_rank",
    "wedge_unrank",
    "sort_with_sign",
    "Cochain",
    "CECochain",
    "HochschildCochain",
    "RBCochain",
    "delta_ce",
    "partial_ce",
    "phi",
    "delta_rb",
    "delta_hochschild",
    "partial_hochschild",
    "psi",
    "delta_rb_assoc",
    "skew_symmetrize_cochain",
    "skew_symmetrize_rb_cochain",
    "xi",
    "random_ce_cochain",
    "random_hochschild_cochain",
    "random_rb_cochain",
    "random_rb_assoc_cochain",
    "ce_dimension",
]


# ---------------------------------------------------------------------------
# index bookkeeping


@lru_cache(maxsize=None)
def wedge_basis(dim: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(dim), n))


@lru_cache(maxsize=None)
def _wedge_index(dim: int, n: int) -> dict:
    return {t: k for k, t in enumerate(wedge_basis(dim, n))}


def wedge_rank(dim: int, idx: Sequence[int]) -> int:
    return _wedge_index(dim, len(idx))[tuple(idx)]


def wedge_unrank(dim: int, n: int, r: int) -> tuple[int, ...]:
    return wedge_basis(dim, n)[r]


@lru_cache(maxsize=None)
def tensor_basis(dim: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(product(range(dim), repeat=n))


def _tensor_rank(dim: int, idx: Sequence[int]) -> int:
    r = 0
    for i in idx:
        r = r * dim + i
    return r


def sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    a = list(idx)
    sign = 1
    for i in range(1, len(a)):
        j = i
        while j > 0 and a[j - 1] > a[j]:
            a[j - 1], a[j] = a[j], a[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(a)):
        if a[i] == a[i - 1]:
            return 0, tuple(a)
    return sign, tuple(a)


def ce_dimension(src_dim: int, tgt_dim: int, n: int) -> int:
    return comb(src_dim, n) * tgt_dim if n >= 0 else 0


def _unit(n: int, i: int):
    return tuple(Fraction(int(k == i)) for k in range(n))


# ---------------------------------------------------------------------------
# cochains


@dataclass(frozen=True)
class Cochain:
    degree: int
    src_dim: int
    tgt_dim: int
    values: tuple  # one target vector per basis tuple

    alternating = True

    def __post_init__(self):
        if len(self.values) != len(self.index_tuples()):
            raise ShapeError(
                f"degree-{self.degree} cochain needs {len(self.index_tuples())} values, got {len(self.values)}"
            )
        for v in self.values:
            if len(v) != self.tgt_dim:
                raise ShapeError("cochain value of the wrong length")

    # basis ------------------------------------------------------------------
    @classmethod
    def _tuples(cls, dim: int, n: int):
        raise NotImplementedError

    def index_tuples(self):
        return self._tuples(self.src_dim, self.degree)

    @classmethod
    def zero(cls, degree: int, src_dim: int, tgt_dim: int):
        return cls(degree, src_dim, tgt_dim, (zero_vector(tgt_dim),) * len(cls._tuples(src_dim, degree)))

    @classmethod
    def from_function(cls, degree: int, src_dim: int, tgt_dim: int, fn):
        return cls(degree, src_dim, tgt_dim, tuple(tuple(fn(t)) for t in cls._tuples(src_dim, degree)))

    @classmethod
    def from_flat(cls, degree: int, src_dim: int, tgt_dim: int, flat: Sequence):
        m = tgt_dim
        count = len(cls._tuples(src_dim, degree))
        if len(flat) != count * m:
            raise ShapeError("flat vector length does not match the cochain space")
        return cls(degree, src_dim, tgt_dim, tuple(tuple(Fraction(x) for x in flat[k * m:(k + 1) * m]) for k in range(count)))

    @classmethod
    def space_dim(cls, degree: int, src_dim: int, tgt_dim: int) -> int:
        return len(cls._tuples(src_dim, degree)) * tgt_dim

    def flat(self) -> tuple:
        return tuple(x for v in self.values for x in v)

    # evaluation ---------------------------------------------------------------
    def at(self, idx: Sequence[int]):
        raise NotImplementedError

    def __call__(self, *vectors):
        """Multilinear evaluation on coordinate vectors."""
        if len(vectors) != self.degree:
            raise ShapeError(f"degree-{self.degree} cochain given {len(vectors)} arguments")
        out = [Fraction(0)] * self.tgt_dim
        supports = [[(i, c) for i, c in enumerate(v) if c] for v in vectors]
        for choice in product(*supports):
            coef = Fraction(1)
            for _, c in choice:
                coef *= c
            val = self.at(tuple(i for i, _ in choice))
            if val is None:
                continue
            for k, x in enumerate(val):
                if x:
                    out[k] += coef * x
        return tuple(out)

    # arithmetic -----------------------------------------------------------------
    def _check_same(self, other):
        if (type(self), self.degree, self.src_dim, self.tgt_dim) != (
            type(other), other.degree, other.src_dim, other.tgt_dim
        ):
            raise ShapeError("cochains live in different spaces")

    def __add__(self, other):
        self._check_same(other)
        return type(self)(self.degree, self.src_dim, self.tgt_dim, tuple(vec_add(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return type(self)(self.degree, self.src_dim, self.tgt_dim, tuple(vec_scale(c, v) for v in self.values))

    def is_zero(self) -> bool:
        return all(x == 0 for v in self.values for x in v)

    def to_dict(self) -> list:
        return [
            {"indices": list(t), "value": [str(x) for x in v]}
            for t, v in zip(self.index_tuples(), self.values)
            if any(v)
        ]


class CECochain(Cochain):
    """Alternating cochain, stored on increasing index tuples."""

    alternating = True

    @classmethod
    def _tuples(cls, dim, n):
        return wedge_basis(dim, n)

    def at(self, idx):
        sign, s = sort_with_sign(idx)
        if sign == 0:
            return None
        v = self.values[wedge_rank(self.src_dim, s)]
        return v if sign > 0 else tuple(-x for x in v)

    @classmethod
    def from_entries(cls, degree, src_dim, tgt_dim, entries):
        """From ``[{indices, value}]`` with any index order; unlisted tuples are zero."""
        vals = [list(zero_vector(tgt_dim)) for _ in wedge_basis(src_dim, degree)]
        for e in entries:
            sign, s = sort_with_sign(e["indices"])
            if len(s) != degree or any(not 0 <= i < src_dim for i in s):
                raise ShapeError(f"bad cochain indices {e['indices']}")
            if sign == 0:
                raise ShapeError(f"repeated index in alternating cochain entry {e['indices']}")
            if len(e["value"]) != tgt_dim:
                raise ShapeError("cochain value of the wrong length")
            k = wedge_rank(src_dim, s)
            for j, x in enumerate(e["value"]):
                vals[k][j] += sign * Fraction(x)
        return cls(degree, src_dim, tgt_dim, tuple(tuple(v) for v in vals))


class HochschildCochain(Cochain):
    """Multilinear cochain with no symmetry, stored on all index tuples."""

    alternating = False

    @classmethod
    def _tuples(cls, dim, n):
        return tensor_basis(dim, n)

    def at(self, idx):
        return self.values[_tensor_rank(self.src_dim, idx)]


@dataclass(frozen=True)
class RBCochain:
    """Pair ``(f, g)`` with ``deg g = deg f - 1``; ``g`` is ``None`` in degree 0."""

    f: Cochain
    g: Cochain | None

    def __post_init__(self):
        if self.g is None:
            if self.f.degree != 0:
                raise ShapeError("only degree-0 cochains may omit the second part")
        elif self.g.degree != self.f.degree - 1 or type(self.g) is not type(self.f):
            raise ShapeError("second part must have degree one less than the first")

    @property
    def degree(self) -> int:
        return self.f.degree

    def flat(self) -> tuple:
        return self.f.flat() + (self.g.flat() if self.g is not None else ())

    @classmethod
    def from_flat(cls, kind, degree, src_dim, tgt_dim, flat):
        k = kind.space_dim(degree, src_dim, tgt_dim)
        f = kind.from_flat(degree, src_dim, tgt_dim, flat[:k])
        g = kind.from_flat(degree - 1, src_dim, tgt_dim, flat[k:]) if degree > 0 else None
        return cls(f, g)

    @staticmethod
    def space_dim(kind, degree, src_dim, tgt_dim) -> int:
        out = kind.space_dim(degree, src_dim, tgt_dim)
        if degree > 0:
            out += kind.space_dim(degree - 1, src_dim, tgt_dim)
        return out

    @classmethod
    def zero(cls, kind, degree, src_dim, tgt_dim):
        return cls(
            kind.zero(degree, src_dim, tgt_dim),
            kind.zero(degree - 1, src_dim, tgt_dim) if degree > 0 else None,
        )

    def __add__(self, other):
        return RBCochain(self.f + other.f, None if self.g is None else self.g + other.g)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return RBCochain(self.f.scale(c), None if self.g is None else self.g.scale(c))

    def __neg__(self):
        return self.scale(-1)

    def is_zero(self) -> bool:
        return self.f.is_zero() and (self.g is None or self.g.is_zero())

    def to_dict(self) -> dict:
        return {"degree": self.degree, "f": self.f.to_dict(), "g": self.g.to_dict() if self.g is not None else None}


# ---------------------------------------------------------------------------
# Lie side


def _lie_coboundary(constants, src_dim: int, rho, f: CECochain) -> CECochain:
    n = f.degree
    m = f.tgt_dim
    if f.src_dim != src_dim or (rho and rho[0].rows != m):
        raise ShapeError("cochain does not match the algebra or the module")

    def value(t):
        out = [Fraction(0)] * m
        for i in range(n + 1):
            rest = t[:i] + t[i + 1:]
            fv = f.at(rest)
            if fv is None or not any(fv):
                continue
            s = 1 if (i + 1 + n) % 2 == 0 else -1
            for k, x in enumerate(rho[t[i]].apply(fv)):
                if x:
                    out[k] += s * x
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = constants[t[i]][t[j]]
                rest = t[:i] + t[i + 1:j] + t[j + 1:]
                s = 1 if (i + j + 2 + n + 1) % 2 == 0 else -1
                for c_idx, c in enumerate(br):
                    if not c:
                        continue
                    fv = f.at((c_idx,) + rest)
                    if fv is None:
                        continue
                    for k, x in enumerate(fv):
                        if x:
                            out[k] += s * c * x
        return tuple(out)

    return CECochain.from_function(n + 1, src_dim, m, value)


def delta_ce(g: LieAlgebra, rep: LieRepresentation, f: CECochain) -> CECochain:
    return _lie_coboundary(g.constants, g.dim, rep.rho, f)


@lru_cache(maxsize=256)
def _deformed_lie(rb: WeightedRBLie, rbrep: RBLieRepresentation):
    return deformed_bracket(rb), rep_tilde(rb, rbrep).rep


def partial_ce(rb: WeightedRBLie, rbrep: RBLieRepresentation, f: CECochain) -> CECochain:
    """Coboundary of ``g_T`` with coefficients in ``V`` under ``rho_tilde``."""
    gT, rt = _deformed_lie(rb, rbrep)
    return _lie_coboundary(gT.constants, gT.dim, rt.rho, f)


def _phi_generic(kind, T: Matrix, calT: Matrix, lam: Fraction, f: Cochain) -> Cochain:
    n = f.degree
    if n == 0:
        return f
    cols = [T.col(i) for i in range(f.src_dim)]

    def value(t):
        units = [_unit(f.src_dim, i) for i in t]
        out = f(*[cols[i] for i in t])
        acc = zero_vector(f.tgt_dim)
        for k in range(n):
            coef = lam ** (n - k - 1)
            if not coef:
                continue
            for I in combinations(range(n), k):
                args = [cols[t[p]] if p in I else units[p] for p in range(n)]
                acc = vec_add(acc, vec_scale(coef, f(*args)))
        return tuple(a - b for a, b in zip(out, calT.apply(acc)))

    return kind.from_function(n, f.src_dim, f.tgt_dim, value)


def phi(rb: WeightedRBLie, rbrep: RBLieRepresentation, f: CECochain) -> CECochain:
    """``Phi^n(f)``; the identity in degree 0."""
    return _phi_generic(CECochain, rb.T, rbrep.calT, rb.weight, f)


def delta_rb(rb: WeightedRBLie, rbrep: RBLieRepresentation, c: RBCochain) -> RBCochain:
    """``(f, g) -> (dF, -dT g - Phi f)``; ``v -> (dv, -v)``."""
    df = delta_ce(rb.g, rbrep.rep, c.f)
    if c.g is None:
        return RBCochain(df, -c.f)
    return RBCochain(df, -partial_ce(rb, rbrep, c.g) - phi(rb, rbrep, c.f))


# ---------------------------------------------------------------------------
# associative side


def _hochschild_coboundary(a_constants, a_dim: int, bim: Bimodule, f: HochschildCochain) -> HochschildCochain:
    n = f.degree
    m = f.tgt_dim
    if f.src_dim != a_dim or bim.module_dim != m:
        raise ShapeError("cochain does not match the algebra or the bimodule")
    twist = 1 if (n - 1) % 2 == 0 else -1

    def value(t):
        out = list(bim.left[t[0]].apply(f.at(t[1:])))
        for i in range(n):
            prod_ = a_constants[t[i]][t[i + 1]]
            s = -1 if i % 2 == 0 else 1  # (-1)^(i+1) with i counted from 0
            for c_idx, c in enumerate(prod_):
                if not c:
                    continue
                fv = f.at(t[:i] + (c_idx,) + t[i + 2:])
                for k, x in enumerate(fv):
                    if x:
                        out[k] += s * c * x
        s = 1 if (n + 1) % 2 == 0 else -1
        for k, x in enumerate(bim.right[t[n]].apply(f.at(t[:n]))):
            if x:
                out[k] += s * x
        return tuple(twist * x for x in out)

    return HochschildCochain.from_function(n + 1, a_dim, m, value)


def delta_hochschild(a: AssociativeAlgebra, bim: Bimodule, f: HochschildCochain) -> HochschildCochain:
    return _hochschild_coboundary(a.constants, a.dim, bim, f)


@lru_cache(maxsize=256)
def _deformed_assoc(rba: WeightedRBAssoc, rbbim: RBBimodule):
    return assoc_deformed_product(rba), bimodule_tilde(rba, rbbim)


def partial_hochschild(rba: WeightedRBAssoc, rbbim: RBBimodule, f: HochschildCochain) -> HochschildCochain:
    aR, mt = _deformed_assoc(rba, rbbim)
    return _hochschild_coboundary(aR.constants, aR.dim, mt, f)


def psi(rba: WeightedRBAssoc, rbbim: RBBimodule, f: HochschildCochain) -> HochschildCochain:
    return _phi_generic(HochschildCochain, rba.R, rbbim.calR, rba.weight, f)


def delta_rb_assoc(rba: WeightedRBAssoc, rbbim: RBBimodule, c: RBCochain) -> RBCochain:
    df = delta_hochschild(rba.a, rbbim.bim, c.f)
    if c.g is None:
        return RBCochain(df, -c.f)
    return RBCochain(df, -partial_hochschild(rba, rbbim, c.g) - psi(rba, rbbim, c.f))


# ---------------------------------------------------------------------------
# comparison maps


def _perm_sign(p) -> int:
    return sort_with_sign(p)[0]


def skew_symmetrize_cochain(f: HochschildCochain) -> CECochain:
    n = f.degree
    perms = [(p, _perm_sign(p)) for p in permutations(range(n))]

    def value(t):
        out = zero_vector(f.tgt_dim)
        for p, s in perms:
            v = f.at(tuple(t[k] for k in p))
            out = vec_add(out, v if s > 0 else tuple(-x for x in v))
        return out

    return CECochain.from_function(n, f.src_dim, f.tgt_dim, value)


def skew_symmetrize_rb_cochain(c: RBCochain) -> RBCochain:
    return RBCochain(
        skew_symmetrize_cochain(c.f), None if c.g is None else skew_symmetrize_cochain(c.g)
    )


def xi(c: RBCochain) -> RBCochain:
    """``(f, g) -> (f, (-1)^(n-1) g)``; the identity in degree 0."""
    if c.g is None:
        return c
    return RBCochain(c.f, c.g if (c.degree - 1) % 2 == 0 else -c.g)


# ---------------------------------------------------------------------------
# random sampling (tests and CLI property runs)


def _rand_values(rng: random.Random, count: int, m: int, spread: int, density: float):
    return tuple(
        tuple(Fraction(rng.randint(-spread, spread)) if rng.random() < density else Fraction(0) for _ in range(m))
        for _ in range(count)
    )


def random_ce_cochain(rng, degree, src_dim, tgt_dim, spread=3, density=0.7) -> CECochain:
    return CECochain(degree, src_dim, tgt_dim, _rand_values(rng, comb(src_dim, degree), tgt_dim, spread, density))


def random_hochschild_cochain(rng, degree, src_dim, tgt_dim, spread=3, density=0.7) -> HochschildCochain:
    return HochschildCochain(degree, src_dim, tgt_dim, _rand_values(rng, src_dim**degree, tgt_dim, spread, density))


def random_rb_cochain(rng, degree, src_dim, tgt_dim, **kw) -> RBCochain:
    f = random_ce_cochain(rng, degree, src_dim, tgt_dim, **kw)
    return RBCochain(f, random_ce_cochain(rng, degree - 1, src_dim, tgt_dim, **kw) if degree else None)


def random_rb_assoc_cochain(rng, degree, src_dim, tgt_dim, **kw) -> RBCochain:
    f = random_hochschild_cochain(rng, degree, src_dim, tgt_dim, **kw)
    return RBCochain(f, random_hochschild_cochain(rng, degree - 1, src_dim, tgt_dim, **kw) if degree else None)
