"""Invertible cobordisms as morphisms of a symbolic category.

A morphism M -> N is recorded by its Whitehead torsion at M and by the
automorphism ``ident`` = a of Z/n describing the identification of pi_1 N
with pi_1 M (t -> t^a).  Composition is written left to right: ``compose(W, V)``
runs through W first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from . import verdict as v
from .group_ring import CyclicGroupSpec, format_element, parse_element
from .torsion import DimensionContext, compose_cobordism_torsion, dual_torsion
from .verdict import Verdict
from .whitehead import WhiteheadClass, class_of, negate, push_forward, zero_class

FLAG_NAMES = ("h1_z2_zero", "poly_finite_or_cyclic_pi1", "geometric_3mfld")


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldProfile:
    """Closed manifold reduced to the data the torsion calculus can see."""

    name: str
    dim: int
    pi: CyclicGroupSpec
    orientable: bool = True
    flags: tuple[tuple[str, bool], ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        if self.orientable != (self.pi.epsilon == 1):
            raise ValueError("orientable profiles need epsilon = +1, non-orientable ones epsilon = -1")
        flags = dict(self.flags)
        for k in flags:
            if k not in FLAG_NAMES:
                raise ValueError(f"unknown flag {k!r}")
        object.__setattr__(self, "flags", tuple(sorted((k, bool(b)) for k, b in flags.items())))

    @classmethod
    def make(cls, name: str, dim: int, n: int = 1, epsilon: int = 1, **flags) -> "ManifoldProfile":
        return cls(name, dim, CyclicGroupSpec(n, epsilon), epsilon == 1, tuple(flags.items()))

    def flag(self, key: str) -> bool | None:
        return dict(self.flags).get(key)

    @property
    def simply_connected(self) -> bool:
        return self.pi.n == 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "n": self.pi.n,
            "epsilon": self.pi.epsilon,
            "orientable": self.orientable,
            "flags": dict(self.flags),
        }

    @classmethod
    def from_json(cls, doc) -> "ManifoldProfile":
        if not isinstance(doc, dict):
            raise SchemaError("profile must be a JSON object")
        missing = [k for k in ("name", "dim", "n") if k not in doc]
        if missing:
            raise SchemaError(f"profile is missing {', '.join(missing)}")
        for k in ("dim", "n", "epsilon"):
            if k in doc and (not isinstance(doc[k], int) or isinstance(doc[k], bool)):
                raise SchemaError(f"profile field {k!r} must be an integer")
        eps = doc.get("epsilon", 1)
        orientable = doc.get("orientable", eps == 1)
        flags = doc.get("flags", {})
        if not isinstance(flags, dict) or not all(isinstance(b, bool) for b in flags.values()):
            raise SchemaError("profile flags must map names to booleans")
        try:
            return cls(str(doc["name"]), doc["dim"], CyclicGroupSpec(doc["n"], eps), bool(orientable), tuple(flags.items()))
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc


def _check_compatible(M: ManifoldProfile, N: ManifoldProfile) -> None:
    if M.dim != N.dim:
        raise ValueError(f"{M.name} and {N.name} have different dimensions ({M.dim}, {N.dim})")
    if M.pi != N.pi:
        raise ValueError(f"{M.name} and {N.name} have different fundamental groups ({M.pi}, {N.pi})")


@dataclass(frozen=True)
class InvertibleCobordism:
    source: ManifoldProfile
    target: ManifoldProfile
    torsion: WhiteheadClass
    ident: int = 1

    def __post_init__(self):
        _check_compatible(self.source, self.target)
        if self.torsion.group != self.source.pi:
            raise ValueError("torsion must live in Wh of the source fundamental group")
        n = self.source.pi.n
        if gcd(self.ident, n) != 1:
            raise ValueError(f"identification {self.ident} is not coprime to {n}")
        object.__setattr__(self, "ident", self.ident % n)

    @property
    def dim(self) -> int:
        return self.source.dim

    @property
    def n(self) -> int:
        return self.source.pi.n

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "torsion": format_element(self.torsion.rep),
            "ident": self.ident,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, doc) -> "InvertibleCobordism":
        if not isinstance(doc, dict):
            raise SchemaError("cobordism must be a JSON object")
        missing = [k for k in ("source", "target", "torsion") if k not in doc]
        if missing:
            raise SchemaError(f"cobordism is missing {', '.join(missing)}")
        source = ManifoldProfile.from_json(doc["source"])
        target = ManifoldProfile.from_json(doc["target"])
        if not isinstance(doc["torsion"], str):
            raise SchemaError("torsion must be an element string such as '1 - t - t^4'")
        ident = doc.get("ident", 1)
        if not isinstance(ident, int) or isinstance(ident, bool):
            raise SchemaError("ident must be an integer")
        try:
            tau = class_of(parse_element(doc["torsion"], source.pi))
            return cls(source, target, tau, ident)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc

    @classmethod
    def loads(cls, text: str) -> "InvertibleCobordism":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_json(doc)


def identity_cobordism(M: ManifoldProfile) -> InvertibleCobordism:
    return InvertibleCobordism(M, M, zero_class(M.pi), 1)


def mapping_cylinder(M: ManifoldProfile, N: ManifoldProfile, f_star: int) -> InvertibleCobordism:
    """Cylinder of a diffeomorphism M -> N inducing t -> t^f_star; torsion zero."""
    _check_compatible(M, N)
    return InvertibleCobordism(M, N, zero_class(M.pi), f_star)


def compose(W: InvertibleCobordism, Wp: InvertibleCobordism) -> InvertibleCobordism:
    if W.target != Wp.source:
        raise ValueError(f"cannot compose: {W.target.name} is not {Wp.source.name}")
    tau = compose_cobordism_torsion(W.torsion, Wp.torsion, W.ident)
    return InvertibleCobordism(W.source, Wp.target, tau, W.ident * Wp.ident)


def inverse(W: InvertibleCobordism) -> InvertibleCobordism:
    a_inv = pow(W.ident, -1, W.n)
    return InvertibleCobordism(W.target, W.source, negate(push_forward(a_inv, W.torsion)), a_inv)


def dual(W: InvertibleCobordism) -> InvertibleCobordism:
    tau = dual_torsion(W.torsion, DimensionContext(W.dim), W.ident)
    return InvertibleCobordism(W.target, W.source, tau, pow(W.ident, -1, W.n))


def is_s_cobordism(W: InvertibleCobordism) -> bool:
    return not W.torsion


def is_h_cobordism(W: InvertibleCobordism) -> Verdict:
    return v.yes("invertible-is-h-cobordism", claim="h-cobordism")


def h_cobordism_invertible(dim: int) -> Verdict:
    """Is every h-cobordism between closed ``dim``-manifolds invertible?"""
    if dim == 3:
        return v.open_("dim3-h-cobordism-invertibility-open", claim="invertible")
    return v.yes("h-cobordism-invertible-dim-not-3", claim="invertible")


def same_class_in_BM(W1: InvertibleCobordism, W2: InvertibleCobordism) -> Verdict:
    """Do W1 and W2 represent the same invertible cobordism out of M?"""
    if W1.source != W2.source:
        raise ValueError("cobordisms start at different manifolds")
    dim = W1.dim
    equal = W1.torsion == W2.torsion
    if dim >= 5:
        if equal:
            return v.yes("torsion-classifies-invertible-cobordisms")
        return v.no("torsion-classifies-invertible-cobordisms")
    if dim <= 2:
        return v.yes("low-dim-single-class")
    if not equal:
        return v.no("torsion-is-an-invariant")
    if dim == 4:
        if W1.source.simply_connected:
            return v.open_("dim4-sphere-smooth-poincare", caveat="exact equivalence stated for M = S^4")
        return v.open_("dim4-torsion-surjective")
    return v.open_("dim3-h-cobordism-invertibility-open")
