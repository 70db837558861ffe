"""Abelian extensions of Rota-Baxter Lie algebras and their 2-cocycles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra, LieRepresentation, validate_lie
from .certificate import Certificate, ShapeError, StructureError, combine
from .cochains import CECochain, RBCochain, delta_ce
from .cohomology import cohomologous, is_cocycle, rb_complex
from .linalg import Matrix, solve, vec_add, vec_sub, zero_vector
from .rota_baxter import (
    RBLieRepresentation,
    WeightedRBLie,
    check_rb_lie,
    morphism_check,
)

__all__ = [
    "AbelianExtension",
    "extension_from_cocycle",
    "cocycle_from_extension",
    "induced_representation",
    "extensions_isomorphic",
    "check_extension",
]


@dataclass(frozen=True)
class AbelianExtension:
    """``0 -> V --incl--> total --proj--> g -> 0`` with a chosen section of ``proj``."""

    base: WeightedRBLie
    module: RBLieRepresentation
    total: WeightedRBLie
    incl: Matrix
    proj: Matrix
    section: Matrix

    def with_section(self, section: Matrix) -> "AbelianExtension":
        return AbelianExtension(self.base, self.module, self.total, self.incl, self.proj, section)


def _unit(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def extension_from_cocycle(rb: WeightedRBLie, rbrep: RBLieRepresentation, c: RBCochain) -> AbelianExtension:
    """Twisted semidirect product on ``g (+) V`` built from a 2-cocycle ``(psi, chi)``.

    ``[(x,u),(y,w)] = ([x,y], rho(x)w - rho(y)u + psi(x,y))`` and
    ``T^(x,u) = (T x, calT u + chi(x))``.
    """
    if c.degree != 2:
        raise ShapeError("an extension needs a degree-2 cochain")
    if not is_cocycle(rb_complex(rb, rbrep), c):
        raise StructureError("(psi, chi) is not a 2-cocycle")
    psi, chi = c.f, c.g
    g, rep = rb.g, rbrep.rep
    n, m = g.dim, rep.module_dim
    zn = zero_vector(n)

    def br(a, b):
        if a < n and b < n:
            return g.basis_bracket(a, b) + psi(_unit(n, a), _unit(n, b))
        if a < n <= b:
            return zn + rep.rho[a].col(b - n)
        if b < n <= a:
            return zn + tuple(-x for x in rep.rho[b].col(a - n))
        return zero_vector(n + m)

    total = LieAlgebra.from_function(n + m, br)
    cols = []
    for a in range(n):
        cols.append(rb.T.col(a) + chi(_unit(n, a)))
    for b in range(m):
        cols.append(zn + rbrep.calT.col(b))
    That = Matrix.from_columns(cols, n + m)
    incl = Matrix.from_columns([zn + _unit(m, b) for b in range(m)], n + m)
    proj = Matrix.from_rows([list(_unit(n + m, a)) for a in range(n)])
    section = Matrix.from_columns([_unit(n, a) + zero_vector(m) for a in range(n)], n + m)
    return AbelianExtension(rb, rbrep, WeightedRBLie(total, rb.weight, That), incl, proj, section)


def _inverse_on_image(incl: Matrix, z):
    u = solve(incl, z)
    if u is None:
        raise StructureError("vector does not lie in the image of the inclusion")
    return u


def check_extension(ext: AbelianExtension) -> Certificate:
    """Structure checks: both legs are morphisms, ``p i = 0`` and ``p s = id``."""
    tot = ext.total
    n, m = ext.base.g.dim, ext.module.rep.module_dim
    certs = [validate_lie(tot.g), check_rb_lie(tot.g, tot.weight, tot.T)]
    if not (ext.proj @ ext.incl).is_zero():
        certs.append(Certificate.failed("exactness", (), (), "proj . incl is not zero"))
    if ext.proj @ ext.section != Matrix.identity(n):
        certs.append(Certificate.failed("section", (), (), "proj . section is not the identity"))
    abelian = WeightedRBLie(LieAlgebra.abelian(m), tot.weight, ext.module.calT)
    certs.append(morphism_check(abelian, tot, ext.incl))
    certs.append(morphism_check(tot, ext.base, ext.proj))
    return combine("abelian extension", *certs)


def induced_representation(ext: AbelianExtension) -> RBLieRepresentation:
    """``rho(x)u = i^-1 [s x, i u]`` and ``calT u = i^-1 T^(i u)``."""
    tot = ext.total.g
    n, m = ext.base.g.dim, ext.incl.cols
    rho = []
    for a in range(n):
        sx = ext.section.col(a)
        cols = [_inverse_on_image(ext.incl, tot.bracket(sx, ext.incl.col(b))) for b in range(m)]
        rho.append(Matrix.from_columns(cols, m))
    calT = Matrix.from_columns(
        [_inverse_on_image(ext.incl, ext.total.T.apply(ext.incl.col(b))) for b in range(m)], m
    )
    return RBLieRepresentation(LieRepresentation(m, tuple(rho)), calT)


def cocycle_from_extension(ext: AbelianExtension) -> RBCochain:
    """``psi(x,y) = [s x, s y] - s[x,y]`` and ``chi(x) = T^(s x) - s(T x)``, pulled back along ``i``."""
    n = ext.base.g.dim
    m = ext.incl.cols
    if ext.proj @ ext.section != Matrix.identity(n):
        raise StructureError("section does not split the projection")
    tot = ext.total
    s = ext.section
    g = ext.base.g

    def psi_val(t):
        a, b = t
        z = vec_sub(tot.g.bracket(s.col(a), s.col(b)), s.apply(g.basis_bracket(a, b)))
        return _inverse_on_image(ext.incl, z)

    def chi_val(t):
        (a,) = t
        z = vec_sub(tot.T.apply(s.col(a)), s.apply(ext.base.T.col(a)))
        return _inverse_on_image(ext.incl, z)

    c = RBCochain(CECochain.from_function(2, n, m, psi_val), CECochain.from_function(1, n, m, chi_val))
    if not is_cocycle(rb_complex(ext.base, ext.module), c):
        raise AssertionError("extracted cochain is not a cocycle")
    return c


def extensions_isomorphic(e1: AbelianExtension, e2: AbelianExtension) -> Matrix | None:
    """An isomorphism ``e1.total -> e2.total`` over ``V`` and ``g``, or ``None``.

    Found from a primitive ``(gamma, v)`` of ``c2 - c1`` and then re-verified.
    """
    if e1.base != e2.base or e1.module != e2.module:
        raise StructureError("extensions of different structures")
    c1, c2 = cocycle_from_extension(e1), cocycle_from_extension(e2)
    cx = rb_complex(e1.base, e1.module)
    prim = cohomologous(cx, c2, c1)
    if prim is None:
        return None
    gamma = prim.f + delta_ce(e1.base.g, e1.module.rep, prim.g)
    N = e1.total.g.dim

    def image(z):
        x = e1.proj.apply(z)
        u = _inverse_on_image(e1.incl, vec_sub(z, e1.section.apply(x)))
        return vec_add(e2.section.apply(x), e2.incl.apply(vec_sub(u, gamma(x))))

    phi = Matrix.from_columns([image(_unit(N, k)) for k in range(N)], e2.total.g.dim)
    cert = combine(
        "extension isomorphism",
        morphism_check(e1.total, e2.total, phi),
    )
    if not cert or phi @ e1.incl != e2.incl or e2.proj @ phi != e1.proj or not phi.is_invertible():
        raise AssertionError(f"constructed map failed verification: {cert}")
    return phi
