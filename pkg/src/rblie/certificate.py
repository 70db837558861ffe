from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class ShapeError(ValueError):
    """Dimensions of the supplied data do not fit together."""


class StructureError(ValueError):
    """An input fails an axiom that the operation requires."""


@dataclass(frozen=True)
class Certificate:
    """Outcome of an identity check on basis elements.

    ``where`` holds the basis indices of the first violation and ``residual``
    the nonzero difference of the two sides there.
    """

    ok: bool
    check: str
    where: tuple = ()
    residual: tuple = ()
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, check: str) -> "Certificate":
        return cls(True, check)

    @classmethod
    def failed(cls, check: str, where=(), residual=(), detail: str = "") -> "Certificate":
        return cls(False, check, tuple(where), tuple(Fraction(x) for x in residual), detail)

    def to_dict(self) -> dict:
        d = {"check": self.check, "ok": self.ok}
        if not self.ok:
            d["where"] = list(self.where)
            d["residual"] = [str(x) for x in self.residual]
            if self.detail:
                d["detail"] = self.detail
        return d

    def __str__(self) -> str:
        if self.ok:
            return f"{self.check}: OK"
        res = ", ".join(str(x) for x in self.residual)
        msg = f"{self.check}: FAILED at {self.where} residual ({res})"
        return msg + (f" [{self.detail}]" if self.detail else "")


def combine(check: str, *certs: Certificate) -> Certificate:
    """First failing certificate, or a pass labelled ``check``."""
    for c in certs:
        if not c.ok:
            return c
    return Certificate.passed(check)
