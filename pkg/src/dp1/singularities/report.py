from __future__ import annotations

from dataclasses import dataclass, field

SMOOTH = "Smooth"
A, D, E = "A", "D", "E"
NOT_SIMPLE = "NotSimple"
MINIMALLY_ELLIPTIC = "MinimallyElliptic"
NON_NORMAL_CUSP = "NonNormalCusp"
NON_NORMAL_NODE = "NonNormalNode"
NON_ISOLATED = "NonIsolated"
BEYOND_BOUND = "BeyondBound"
CONJUGATE_SET = "IrrationalConjugateSet"

ADE = (A, D, E)


@dataclass
class SingularityReport:
    """Outcome of a local classification.

    ``index`` is the subscript of an ADE type; ``mu`` the Milnor number when
    known.  ``prefix`` is ``"c"`` for compound du Val reports.
    """

    tag: str
    index: int | None = None
    mu: int | None = None
    location: object = None
    germ: str | None = None
    evidence: list = field(default_factory=list)
    prefix: str = ""
    flags: list = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.tag in ADE:
            return f"{self.prefix}{self.tag}{self.index}"
        return f"{self.prefix}{self.tag}"

    @property
    def is_du_val(self) -> bool:
        return self.tag in ADE or self.tag == SMOOTH

    @property
    def is_simple(self) -> bool:
        return self.is_du_val

    def to_dict(self) -> dict:
        out = {"type": self.label, "tag": self.tag}
        if self.index is not None:
            out["index"] = self.index
        if self.mu is not None:
            out["milnor"] = self.mu
        if self.location is not None:
            out["location"] = self.location
        if self.germ is not None:
            out["germ"] = self.germ
        if self.flags:
            out["flags"] = list(self.flags)
        out["evidence"] = self.evidence
        return out


def ade(tag: str, index: int, **kw) -> SingularityReport:
    return SingularityReport(tag, index, index, **kw)


def determinacy(report: SingularityReport) -> int:
    """Order of a jet that determines the simple germ up to equivalence."""
    if report.tag == SMOOTH:
        return 1
    if report.tag == A:
        return report.index + 1
    if report.tag == D:
        return report.index - 1
    if report.tag == E:
        return 5 if report.index == 8 else 4
    return 0
