"""Reading input documents (YAML or JSON) into algebraic structures.

Top-level keys::

    lie:       {dim: 2, bracket: [{i: 0, j: 1, k: 1, c: "1"}, ...]}
    assoc:     {dim: 2, product: [{i, j, k, c}, ...]}
    rep:       "adjoint" | {module_dim: m, matrices: [m x m matrix per basis element]}
    bimodule:  "adjoint" | {module_dim: m, left: [...], right: [...]}
    weight:    "1/2"
    T:         row-major matrix of rational strings (operator on the algebra)
    calT:      operator on the module (defaults to T for the adjoint module)
    cocycle:   {degree: n, f: [{indices, value}], g: [{indices, value}]}
    deformation: {mu: [[{i,j,k,c}...] for orders 1..N], T: [matrix for orders 1..N]}
    increment: {T: matrix, calT: matrix}
    extension: {bracket: [...], T: matrix, incl: matrix, proj: matrix, section: matrix}

Rational entries are strings such as ``"3"`` or ``"-2/5"``; integers are also
accepted. Floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from .algebra import (
    AssociativeAlgebra,
    Bimodule,
    LieAlgebra,
    LieRepresentation,
    adjoint_bimodule,
    adjoint_rep,
)
from .certificate import ShapeError
from .cochains import CECochain, RBCochain
from .deformations import TruncatedDeformation, bracket_cochain
from .extensions import AbelianExtension
from .linalg import Matrix
from .rota_baxter import RBBimodule, RBLieRepresentation, WeightedRBAssoc, WeightedRBLie

__all__ = ["SchemaError", "Document", "load_document", "parse_document", "parse_rational", "parse_matrix"]


class SchemaError(ValueError):
    """Input document does not match the schema; ``where`` names the offending field."""

    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


def parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise SchemaError(where, f"expected a rational string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(ch in s for ch in ".eE"):
            raise SchemaError(where, f"not a rational string: {x!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(where, f"not a rational string: {x!r}") from None
    raise SchemaError(where, f"expected a rational string, got {type(x).__name__}")


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise SchemaError(where, f"expected a non-negative integer, got {x!r}")
    return x


def _list(x, where: str) -> list:
    if not isinstance(x, list):
        raise SchemaError(where, f"expected a list, got {type(x).__name__}")
    return x


def _map(x, where: str) -> dict:
    if not isinstance(x, dict):
        raise SchemaError(where, f"expected a mapping, got {type(x).__name__}")
    return x


def parse_matrix(x, where: str, shape: tuple[int, int] | None = None) -> Matrix:
    rows = _list(x, where)
    parsed = [[parse_rational(c, f"{where}[{i}][{j}]") for j, c in enumerate(_list(r, f"{where}[{i}]"))] for i, r in enumerate(rows)]
    cols = len(parsed[0]) if parsed else (shape[1] if shape else 0)
    if any(len(r) != cols for r in parsed):
        raise SchemaError(where, "ragged matrix")
    M = Matrix.from_rows(parsed, cols)
    if shape is not None and M.shape != shape:
        raise SchemaError(where, f"expected shape {shape}, got {M.shape}")
    return M


def _triples(x, dim: int, where: str) -> list:
    out = []
    for n, t in enumerate(_list(x, where)):
        w = f"{where}[{n}]"
        t = _map(t, w)
        missing = {"i", "j", "k", "c"} - set(t)
        if missing:
            raise SchemaError(w, f"missing keys {sorted(missing)}")
        i, j, k = (_int(t[key], f"{w}.{key}") for key in "ijk")
        if max(i, j, k) >= dim:
            raise SchemaError(w, f"index out of range for dimension {dim}")
        out.append((i, j, k, parse_rational(t["c"], f"{w}.c")))
    return out


def _cochain_entries(x, degree: int, src: int, tgt: int, where: str) -> CECochain:
    entries = []
    for n, e in enumerate(_list(x or [], where)):
        w = f"{where}[{n}]"
        e = _map(e, w)
        idx = [_int(i, f"{w}.indices") for i in _list(e.get("indices"), f"{w}.indices")]
        val = [parse_rational(c, f"{w}.value") for c in _list(e.get("value"), f"{w}.value")]
        entries.append({"indices": idx, "value": val})
    try:
        return CECochain.from_entries(degree, src, tgt, entries)
    except ShapeError as exc:
        raise SchemaError(where, str(exc)) from None


@dataclass
class Document:
    raw: dict
    lie: LieAlgebra | None = None
    assoc: AssociativeAlgebra | None = None
    rep: LieRepresentation | None = None
    bimodule: Bimodule | None = None
    weight: Fraction = Fraction(0)
    T: Matrix | None = None
    calT: Matrix | None = None

    # --- derived views -----------------------------------------------------
    def rb_lie(self) -> tuple[WeightedRBLie, RBLieRepresentation]:
        if self.lie is None:
            raise SchemaError("lie", "this command needs a Lie algebra")
        if self.T is None or self.calT is None:
            raise SchemaError("T", "this command needs the operators T and calT")
        return WeightedRBLie(self.lie, self.weight, self.T), RBLieRepresentation(self.rep, self.calT)

    def rb_assoc(self) -> tuple[WeightedRBAssoc, RBBimodule]:
        if self.assoc is None:
            raise SchemaError("assoc", "this command needs an associative algebra")
        if self.T is None or self.calT is None:
            raise SchemaError("T", "this command needs the operators T and calT")
        return WeightedRBAssoc(self.assoc, self.weight, self.T), RBBimodule(self.bimodule, self.calT)

    def cocycle(self) -> RBCochain:
        rb, rbrep = self.rb_lie()
        c = _map(self.raw.get("cocycle"), "cocycle")
        deg = _int(c.get("degree", 2), "cocycle.degree")
        n, m = rb.g.dim, rbrep.rep.module_dim
        f = _cochain_entries(c.get("f"), deg, n, m, "cocycle.f")
        g = _cochain_entries(c.get("g"), deg - 1, n, m, "cocycle.g") if deg > 0 else None
        return RBCochain(f, g)

    def deformation(self) -> TruncatedDeformation:
        rb, _ = self.rb_lie()
        d = _map(self.raw.get("deformation"), "deformation")
        n = rb.g.dim
        mus = _list(d.get("mu", []), "deformation.mu")
        Ts = _list(d.get("T", []), "deformation.T")
        if len(mus) != len(Ts):
            raise SchemaError("deformation", "mu and T must list the same number of orders")
        mu = [bracket_cochain(rb.g)]
        for k, tr in enumerate(mus, start=1):
            alg = LieAlgebra.from_triples(n, _triples(tr, n, f"deformation.mu[{k - 1}]"))
            mu.append(bracket_cochain(alg))
        T = [rb.T] + [parse_matrix(t, f"deformation.T[{k}]", (n, n)) for k, t in enumerate(Ts)]
        return TruncatedDeformation(rb, tuple(mu), tuple(T))

    def increment(self) -> tuple[Matrix, Matrix]:
        rb, rbrep = self.rb_lie()
        inc = _map(self.raw.get("increment"), "increment")
        n, m = rb.g.dim, rbrep.rep.module_dim
        return parse_matrix(inc.get("T"), "increment.T", (n, n)), parse_matrix(inc.get("calT"), "increment.calT", (m, m))

    def extension(self) -> AbelianExtension:
        rb, rbrep = self.rb_lie()
        e = _map(self.raw.get("extension"), "extension")
        n, m = rb.g.dim, rbrep.rep.module_dim
        N = n + m
        total = LieAlgebra.from_triples(N, _triples(e.get("bracket", []), N, "extension.bracket"))
        That = parse_matrix(e.get("T"), "extension.T", (N, N))
        incl = parse_matrix(e.get("incl"), "extension.incl", (N, m))
        proj = parse_matrix(e.get("proj"), "extension.proj", (n, N))
        section = parse_matrix(e.get("section"), "extension.section", (N, n))
        return AbelianExtension(rb, rbrep, WeightedRBLie(total, rb.weight, That), incl, proj, section)


def _parse_lie(x) -> LieAlgebra:
    x = _map(x, "lie")
    dim = _int(x.get("dim"), "lie.dim")
    return LieAlgebra.from_triples(dim, _triples(x.get("bracket", []), dim, "lie.bracket"))


def _parse_assoc(x) -> AssociativeAlgebra:
    x = _map(x, "assoc")
    dim = _int(x.get("dim"), "assoc.dim")
    return AssociativeAlgebra.from_triples(dim, _triples(x.get("product", []), dim, "assoc.product"))


def _parse_mats(x, count, m, where):
    mats = _list(x, where)
    if len(mats) != count:
        raise SchemaError(where, f"expected {count} matrices, got {len(mats)}")
    return tuple(parse_matrix(a, f"{where}[{i}]", (m, m)) for i, a in enumerate(mats))


def parse_document(raw: Any) -> Document:
    raw = _map(raw, "document")
    doc = Document(raw)
    if "lie" in raw and "assoc" in raw:
        raise SchemaError("document", "give either 'lie' or 'assoc', not both")
    if "weight" in raw:
        doc.weight = parse_rational(raw["weight"], "weight")
    dim = None
    if "lie" in raw:
        doc.lie = _parse_lie(raw["lie"])
        dim = doc.lie.dim
        r = raw.get("rep", "adjoint")
        if r == "adjoint":
            doc.rep = adjoint_rep(doc.lie)
        else:
            r = _map(r, "rep")
            m = _int(r.get("module_dim"), "rep.module_dim")
            doc.rep = LieRepresentation(m, _parse_mats(r.get("matrices"), dim, m, "rep.matrices"))
        mod_dim = doc.rep.module_dim
        adjoint = raw.get("rep", "adjoint") == "adjoint"
    elif "assoc" in raw:
        doc.assoc = _parse_assoc(raw["assoc"])
        dim = doc.assoc.dim
        b = raw.get("bimodule", "adjoint")
        if b == "adjoint":
            doc.bimodule = adjoint_bimodule(doc.assoc)
        else:
            b = _map(b, "bimodule")
            m = _int(b.get("module_dim"), "bimodule.module_dim")
            doc.bimodule = Bimodule(
                m, _parse_mats(b.get("left"), dim, m, "bimodule.left"), _parse_mats(b.get("right"), dim, m, "bimodule.right")
            )
        mod_dim = doc.bimodule.module_dim
        adjoint = raw.get("bimodule", "adjoint") == "adjoint"
    else:
        raise SchemaError("document", "needs a 'lie' or an 'assoc' section")
    if "T" in raw:
        doc.T = parse_matrix(raw["T"], "T", (dim, dim))
    if "calT" in raw:
        doc.calT = parse_matrix(raw["calT"], "calT", (mod_dim, mod_dim))
    elif adjoint and doc.T is not None:
        doc.calT = doc.T
    return doc


def load_document(path: str | Path) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file ({exc.strerror})") from None
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SchemaError(str(path), f"not valid YAML/JSON: {exc}") from None
    return parse_document(raw)
