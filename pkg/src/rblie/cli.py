"""Command line front end.

Every command reads one input document (two for ``extension-compare``) and
writes a report. Exit status: 0 on success, 1 when the mathematics says no
(invalid structure, non-cocycle, obstruction, non-isomorphic), 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import graded
from .algebra import validate_associative, validate_bimodule, validate_lie, validate_representation
from .certificate import Certificate, ShapeError, StructureError, combine
from .cochains import (
    random_ce_cochain,
    random_hochschild_cochain,
    random_rb_assoc_cochain,
    random_rb_cochain,
)
from .cohomology import cohomology, derivations, inner_derivations, make_complex
from .deformations import check_deformation, infinitesimal, trivialize
from .documents import Document, SchemaError, load_document
from .extensions import (
    check_extension,
    cocycle_from_extension,
    extension_from_cocycle,
    extensions_isomorphic,
)
from .linalg import Matrix
from .rota_baxter import check_rb_assoc, check_rb_bimodule, check_rb_lie, check_rb_rep

EXIT_OK, EXIT_VERDICT, EXIT_INPUT = 0, 1, 2
PROPERTY_SAMPLES = 10


class Verdict(Exception):
    """A negative mathematical answer; carries the partial report."""

    def __init__(self, report: dict):
        super().__init__(report.get("verdict", "failed"))
        self.report = report


# ---------------------------------------------------------------------------
# report helpers


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Matrix):
        return [[str(x[i, j]) for j in range(x.cols)] for i in range(x.rows)]
    if isinstance(x, Certificate):
        return x.to_dict()
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _render_text(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(obj)}")
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _need(cert: Certificate, report: dict):
    if not cert:
        report["verdict"] = "invalid structure"
        report["certificate"] = cert.to_dict()
        raise Verdict(report)


def _structure_certificate(doc: Document) -> Certificate:
    if doc.lie is not None:
        certs = [validate_lie(doc.lie), validate_representation(doc.lie, doc.rep)]
        if doc.T is not None:
            certs.append(check_rb_lie(doc.lie, doc.weight, doc.T))
            if doc.calT is not None:
                rb, _ = doc.rb_lie()
                certs.append(check_rb_rep(rb, doc.rep, doc.calT))
        return combine("structure", *certs)
    certs = [validate_associative(doc.assoc), validate_bimodule(doc.assoc, doc.bimodule)]
    if doc.T is not None:
        certs.append(check_rb_assoc(doc.assoc, doc.weight, doc.T))
        if doc.calT is not None:
            rba, _ = doc.rb_assoc()
            certs.append(check_rb_bimodule(rba, doc.bimodule, doc.calT))
    return combine("structure", *certs)


def _paired(doc: Document) -> graded.PairedOperators:
    rb, rbrep = doc.rb_lie()
    return graded.PairedOperators(rb.g, rbrep.rep, rb.weight, rb.T, rbrep.calT)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, docs):
    doc = docs[0]
    cert = _structure_certificate(doc)
    report = {"command": "validate", "kind": "lie" if doc.lie is not None else "assoc", "certificate": cert.to_dict()}
    if not cert:
        report["verdict"] = "invalid structure"
        raise Verdict(report)
    report["verdict"] = "ok"
    return report


def _sampler(selector, n_src, m, kind_lie):
    if selector in ("ce", "ce-deformed"):
        return lambda rng, k: random_ce_cochain(rng, k, n_src, m)
    if selector in ("hochschild", "hochschild-deformed"):
        return lambda rng, k: random_hochschild_cochain(rng, k, n_src, m)
    if selector == "rb":
        return lambda rng, k: random_rb_cochain(rng, k, n_src, m)
    if selector == "rb-assoc":
        return lambda rng, k: random_rb_assoc_cochain(rng, k, n_src, m)
    return lambda rng, k: graded.random_rbp_cochain(rng, max(k, 1), n_src, m)


def cmd_cohomology(args, docs):
    doc = docs[0]
    report = {"command": "cohomology"}
    _need(_structure_certificate(doc), report)
    if doc.lie is not None:
        selector = args.complex or "rb"
        if selector not in ("ce", "ce-deformed", "rb", "rbp"):
            raise SchemaError("--complex", f"{selector!r} needs an associative input")
        structure, module = doc.rb_lie()
        n, m = structure.g.dim, module.rep.module_dim
    else:
        selector = args.complex or "rb-assoc"
        if selector not in ("hochschild", "hochschild-deformed", "rb-assoc"):
            raise SchemaError("--complex", f"{selector!r} needs a Lie input")
        structure, module = doc.rb_assoc()
        n, m = structure.a.dim, module.bim.module_dim
    cx = make_complex(selector, structure, module)
    report["complex"] = selector
    start = 1 if selector == "rbp" else 0
    degrees = []
    for k in range(start, args.max_degree + 1):
        degrees.append(cohomology(cx, k).to_dict())
    report["degrees"] = degrees
    report["betti"] = [d["betti"] for d in degrees]
    # seeded check that the differential squares to zero
    rng = random.Random(args.seed)
    sample = _sampler(selector, n, m, doc.lie is not None)
    failures = []
    for k in range(start, args.max_degree + 1):
        for s in range(PROPERTY_SAMPLES):
            c = sample(rng, k)
            if not cx.apply(cx.apply(c)).is_zero():
                failures.append({"degree": k, "sample": s})
    report["square_zero_check"] = {"seed": args.seed, "samples_per_degree": PROPERTY_SAMPLES, "failures": failures}
    if failures:
        raise AssertionError(f"differential does not square to zero: {failures[0]}")
    report["verdict"] = "ok"
    return report


def _der_dict(pair):
    gamma, v = pair
    return {"gamma": gamma, "v": list(v)}


def cmd_derivations(args, docs):
    doc = docs[0]
    report = {"command": "derivations"}
    _need(_structure_certificate(doc), report)
    rb, rbrep = doc.rb_lie()
    der = derivations(rb, rbrep)
    inn = inner_derivations(rb, rbrep)
    report.update(
        dim_derivations=len(der),
        dim_inner=len(inn),
        dim_outer=len(der) - len(inn),
        derivations=[_der_dict(p) for p in der],
        inner=[_der_dict(p) for p in inn],
        verdict="ok",
    )
    return report


def _extension_dict(ext):
    tot = ext.total
    return {
        "bracket": [{"i": i, "j": j, "k": k, "c": str(c)} for i, j, k, c in tot.g.triples()],
        "T": _plain(tot.T),
        "incl": _plain(ext.incl),
        "proj": _plain(ext.proj),
        "section": _plain(ext.section),
    }


def cmd_extension_build(args, docs):
    doc = docs[0]
    report = {"command": "extension-build"}
    _need(_structure_certificate(doc), report)
    rb, rbrep = doc.rb_lie()
    c = doc.cocycle()
    if c.degree != 2:
        raise SchemaError("cocycle.degree", "an extension needs a degree-2 cocycle")
    try:
        ext = extension_from_cocycle(rb, rbrep, c)
    except StructureError as exc:
        report["verdict"] = "not a cocycle"
        report["detail"] = str(exc)
        report["coboundary"] = make_complex("rb", rb, rbrep).apply(c).to_dict()
        raise Verdict(report) from None
    report["certificate"] = check_extension(ext).to_dict()
    report["extension"] = _extension_dict(ext)
    report["verdict"] = "ok"
    return report


def cmd_extension_extract(args, docs):
    doc = docs[0]
    report = {"command": "extension-extract"}
    _need(_structure_certificate(doc), report)
    ext = doc.extension()
    cert = check_extension(ext)
    report["certificate"] = cert.to_dict()
    if not cert:
        report["verdict"] = "not an abelian extension"
        raise Verdict(report)
    report["cocycle"] = cocycle_from_extension(ext).to_dict()
    report["verdict"] = "ok"
    return report


def _load_extension(doc: Document):
    if "extension" in doc.raw:
        ext = doc.extension()
        cert = check_extension(ext)
        if not cert:
            return None, cert
        return ext, cert
    rb, rbrep = doc.rb_lie()
    return extension_from_cocycle(rb, rbrep, doc.cocycle()), Certificate.passed("abelian extension")


def cmd_extension_compare(args, docs):
    report = {"command": "extension-compare"}
    exts = []
    for label, doc in zip(("first", "second"), docs):
        _need(_structure_certificate(doc), report)
        try:
            ext, cert = _load_extension(doc)
        except StructureError as exc:
            report["verdict"] = f"{label} input is not a cocycle"
            report["detail"] = str(exc)
            raise Verdict(report) from None
        if ext is None:
            report["verdict"] = f"{label} input is not an abelian extension"
            report["certificate"] = cert.to_dict()
            raise Verdict(report)
        exts.append(ext)
    e1, e2 = exts
    if e1.base != e2.base or e1.module != e2.module:
        raise SchemaError("extension", "the two inputs extend different structures")
    phi = extensions_isomorphic(e1, e2)
    if phi is None:
        report["isomorphic"] = False
        report["verdict"] = "not isomorphic"
        raise Verdict(report)
    report["isomorphic"] = True
    report["isomorphism"] = _plain(phi)
    report["verdict"] = "ok"
    return report


def cmd_deform_check(args, docs):
    doc = docs[0]
    report = {"command": "deform-check"}
    _need(_structure_certificate(doc), report)
    d = doc.deformation()
    report["order"] = d.order
    cert = check_deformation(d)
    report["certificate"] = cert.to_dict()
    if d.order >= 1:
        c, ok = infinitesimal(d)
        report["infinitesimal_is_cocycle"] = ok
    if not cert:
        report["verdict"] = "not a deformation"
        raise Verdict(report)
    report["verdict"] = "ok"
    return report


def cmd_deform_trivialize(args, docs):
    doc = docs[0]
    report = {"command": "deform-trivialize"}
    _need(_structure_certificate(doc), report)
    d = doc.deformation()
    cert = check_deformation(d)
    report["order"] = d.order
    report["certificate"] = cert.to_dict()
    if not cert:
        report["verdict"] = "not a deformation"
        raise Verdict(report)
    res = trivialize(d)
    if not res:
        report["verdict"] = "obstructed"
        report["obstruction_order"] = res.obstruction_order
        report["obstruction"] = res.obstruction.to_dict()
        raise Verdict(report)
    report["gauge"] = [_plain(m) for m in res.gauge.phi]
    report["verdict"] = "ok"
    return report


def cmd_mc_check(args, docs):
    doc = docs[0]
    report = {"command": "mc-check"}
    base = combine("structure", validate_lie(doc.lie), validate_representation(doc.lie, doc.rep)) if doc.lie else None
    if base is None:
        raise SchemaError("lie", "mc-check needs a Lie algebra")
    _need(base, report)
    p = _paired(doc)
    res = graded.mc_residual(p)
    cert = graded.mc_check(p)
    paired = graded.check_paired(p)
    report["residual"] = {"part1": res.part1.to_dict(), "part2": res.part2.to_dict()}
    report["certificate"] = cert.to_dict()
    report["paired_check"] = paired.to_dict()
    if bool(cert) != bool(paired):
        raise AssertionError("Maurer-Cartan verdict disagrees with the direct check")
    if "increment" in doc.raw:
        if not paired:
            report["verdict"] = "base operators are not paired"
            raise Verdict(report)
        T2, calT2 = doc.increment()
        inc = graded.mc_deformation_check(p, T2, calT2)
        report["increment_certificate"] = inc.to_dict()
        if not inc:
            report["verdict"] = "increment fails the Maurer-Cartan equation"
            raise Verdict(report)
    elif not cert:
        report["verdict"] = "not a Maurer-Cartan element"
        raise Verdict(report)
    report["verdict"] = "ok"
    return report


def cmd_rbp_cohomology(args, docs):
    doc = docs[0]
    report = {"command": "rbp-cohomology"}
    _need(_structure_certificate(doc), report)
    p = _paired(doc)
    degrees = [graded.rbp_cohomology(p, k).to_dict() for k in range(1, args.max_degree + 1)]
    report["degrees"] = degrees
    report["betti"] = [d["betti"] for d in degrees]
    report["verdict"] = "ok"
    return report


def cmd_nr_debug(args, docs):
    doc = docs[0]
    if doc.lie is None:
        raise SchemaError("lie", "nr-debug needs a Lie algebra")
    g, rep = doc.lie, doc.rep
    theta = graded.build_theta(g, rep)
    theta_p = graded.build_theta_prime(g, rep)

    def dump(f):
        return [
            {"args": list(t), "value": {str(k): str(v) for k, v in sorted(val.items())}}
            for t, val in sorted(f.materialize().items())
            if val
        ]

    report = {
        "command": "nr-debug",
        "blocks": {"g": g.dim, "module": rep.module_dim, "total": 2 * g.dim + 2 * rep.module_dim},
        "theta": dump(theta),
        "theta_prime": dump(theta_p),
        "theta_theta_vanishes": graded.nr_bracket(theta, theta).is_zero(),
        "theta_prime_theta_prime_vanishes": graded.nr_bracket(theta_p, theta_p).is_zero(),
        "theta_theta_prime_vanishes": graded.nr_bracket(theta, theta_p).is_zero(),
    }
    if doc.T is not None and doc.calT is not None:
        p = _paired(doc)
        T = graded.operator_cochain(p.T, p.calT)
        bb = graded.derived_bracket(g, rep, T, T)
        dT = graded.dd(g, rep, p.weight, T)
        report["derived_bracket_TT"] = {"part1": bb.part1.to_dict(), "part2": bb.part2.to_dict()}
        report["dd_T"] = {"part1": dT.part1.to_dict(), "part2": dT.part2.to_dict()}
    report["verdict"] = "ok"
    return report


COMMANDS = {
    "validate": cmd_validate,
    "cohomology": cmd_cohomology,
    "derivations": cmd_derivations,
    "extension-build": cmd_extension_build,
    "extension-extract": cmd_extension_extract,
    "extension-compare": cmd_extension_compare,
    "deform-check": cmd_deform_check,
    "deform-trivialize": cmd_deform_trivialize,
    "mc-check": cmd_mc_check,
    "rbp-cohomology": cmd_rbp_cohomology,
    "nr-debug": cmd_nr_debug,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rblie", description="Exact computations for weighted Rota-Baxter algebras.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="+", help="input document(s), YAML or JSON")
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="write the report here instead of standard output")
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--complex", choices=("ce", "ce-deformed", "rb", "hochschild", "hochschild-deformed", "rb-assoc", "rbp"))
    return parser


def _emit(report: dict, args) -> None:
    report = _plain(report)
    if args.format == "machine":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(_render_text(report)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    expected = 2 if args.command == "extension-compare" else 1
    if len(args.inputs) != expected:
        return _input_error(args, "arguments", f"{args.command} takes {expected} input file(s)")
    if args.max_degree < 0:
        return _input_error(args, "--max-degree", "must be non-negative")
    try:
        docs = [load_document(p) for p in args.inputs]
        report = COMMANDS[args.command](args, docs)
    except Verdict as v:
        _emit(v.report, args)
        return EXIT_VERDICT
    except SchemaError as exc:
        return _input_error(args, exc.where, str(exc))
    except ShapeError as exc:
        return _input_error(args, "dimensions", str(exc))
    _emit(report, args)
    return EXIT_OK


def _input_error(args, where, msg) -> int:
    _emit({"command": args.command, "verdict": "malformed input", "where": where, "error": msg}, args)
    print(f"rblie: {msg}", file=sys.stderr)
    return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
