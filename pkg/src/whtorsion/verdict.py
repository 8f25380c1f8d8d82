"""Tri-valued answers that always say which theorem they rest on."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Answer(str, enum.Enum):
    YES = "yes"
    NO = "no"
    OPEN = "open"


# citation key -> the mathematical statement it stands for
ANCHORS: dict[str, str] = {
    "invertible-is-h-cobordism":
        "Every invertible cobordism between closed manifolds is an h-cobordism.",
    "h-cobordism-invertible-dim-not-3":
        "An h-cobordism between closed manifolds of dimension other than 3 is invertible.",
    "dim3-h-cobordism-invertibility-open":
        "Open problem: whether smooth h-cobordisms between closed 3-manifolds are invertible.",
    "torsion-classifies-invertible-cobordisms":
        "Dimension >= 5: Whitehead torsion is a bijection from invertible cobordisms out of M to Wh(M).",
    "torsion-is-an-invariant":
        "Whitehead torsion is an invariant of the class of an invertible cobordism in every dimension.",
    "low-dim-single-class":
        "Dimension <= 2: every invertible cobordism out of M is trivial.",
    "dim4-torsion-surjective":
        "Dimension 4: torsion maps invertible cobordisms onto Wh(M); injectivity is unknown.",
    "dim4-sphere-smooth-poincare":
        "Invertible cobordisms out of S^4 are all trivial iff the smooth 4-dimensional Poincare conjecture holds.",
    "dim3-sphere-smooth-poincare":
        "Smooth h-cobordisms out of S^3 are all trivial iff the smooth 4-dimensional Poincare conjecture holds.",
    "dim3-orientable-zero-torsion":
        "Orientable closed 3-manifolds: the torsion of every invertible cobordism vanishes.",
    "zero-torsion-iff-decomposable":
        "Dimension >= 5: an R-diffeomorphism is decomposable iff its torsion vanishes (s-cobordism theorem).",
    "low-dim-decomposable":
        "Dimension <= 2: every R-diffeomorphism is decomposable.",
    "norm-subgroup-iff-c-decomposable":
        "Dimension >= 5: an R-diffeomorphism is c-decomposable iff its torsion lies in N(M) = {tau + (-1)^n bar(tau)}.",
    "decomposable-implies-c-decomposable":
        "Isotopy to a product implies concordance to a product.",
    "norm-subgroup-inertial":
        "Torsions of cobordisms W followed by their dual lie in N(M), and such composites are inertial.",
    "self-dual-torsion-inertial":
        "Dimension >= 5: a torsion with sigma = (-1)^n bar(sigma) is realized by an inertial cobordism.",
    "even-orientable-abelian-all-inertial":
        "Even dimension >= 6, orientable, finite abelian pi_1: every Whitehead torsion is inertial.",
    "inertia-not-decidable-here":
        "The inertial set is not a subgroup in general and depends on geometry absent from the profile.",
    "simply-connected-r-diffeo-homeomorphic":
        "Simply connected M: R-diffeomorphic manifolds are homeomorphic.",
    "simply-connected-r-diffeo-diffeomorphic":
        "Simply connected M of dimension other than 4: R-diffeomorphic manifolds are diffeomorphic.",
    "dim4-homeomorphic-r-diffeomorphic":
        "Dimension 4 with H_1(M; Z/2) = 0: homeomorphic manifolds are R-diffeomorphic, so R-diffeomorphism does not see smooth structure.",
    "low-dim-r-diffeo-diffeomorphic":
        "Dimension <= 3 (orientable if 3): R-diffeomorphic iff diffeomorphic.",
    "dim3-nonorientable-open":
        "Open problem: the R-diffeomorphism question for non-orientable closed 3-manifolds.",
    "dim4-poly-cyclic-homeomorphic":
        "Dimension 4, pi_1 poly-(finite or cyclic) with Wh = 0: R-diffeomorphic manifolds are homeomorphic.",
    "dim4-smooth-classification-open":
        "Dimension 4: R-diffeomorphism does not decide the smooth type in general.",
    "trivial-whitehead-r-diffeo-diffeomorphic":
        "Dimension >= 5 and Wh(M) = 0: R-diffeomorphic manifolds are diffeomorphic.",
    "inertia-decides-r-diffeo":
        "Dimension >= 5: every manifold R-diffeomorphic to M is diffeomorphic to M iff I(M) = Wh(M).",
    "unit-representative-stabilization":
        "Torsions are realized by matrices in GL_p(Z pi); for finite pi one may take p <= 2, and unit representatives give p = 1.",
}


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    citation: str
    caveat: str | None = None
    claim: str | None = None

    def __post_init__(self):
        if self.citation not in ANCHORS:
            raise ValueError(f"unknown citation {self.citation!r}")

    def to_json(self) -> dict:
        d = {"answer": self.answer.value, "citation": self.citation, "caveat": self.caveat}
        if self.claim is not None:
            d["claim"] = self.claim
        return d

    def __str__(self):
        head = self.answer.value if self.claim is None else f"{self.answer.value} ({self.claim})"
        s = f"{head}  [{self.citation}]"
        if self.caveat:
            s += f"  caveat: {self.caveat}"
        return s


def yes(citation: str, caveat: str | None = None, claim: str | None = None) -> Verdict:
    return Verdict(Answer.YES, citation, caveat, claim)


def no(citation: str, caveat: str | None = None, claim: str | None = None) -> Verdict:
    return Verdict(Answer.NO, citation, caveat, claim)


def open_(citation: str, caveat: str | None = None, claim: str | None = None) -> Verdict:
    return Verdict(Answer.OPEN, citation, caveat, claim)
