"""The Whitehead group of a finite cyclic group, modelled on units.

A class is a unit of Z[Z/n] modulo the trivial units +-t^k.  For finite
cyclic groups SK1 vanishes and Wh is torsion free, so these classes are the
whole group and the character-logarithm embedding is injective on them.
The group law is written additively in the API and is unit multiplication
underneath.

Floating point (mpmath) is only used to *guess* lattice coordinates; every
guess is confirmed in the group ring before it is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

import mpmath

from .group_ring import (
    CyclicGroupSpec,
    GroupRingElement,
    apply_automorphism,
    format_element,
    invert_unit,
    involution,
    is_trivial_unit,
    is_unit,
    parse_element,
)

DEFAULT_PRECISION = 50
ROUNDING_TOL = mpmath.mpf("1e-20")
# coordinates further than this from an integer are treated as genuinely fractional
FRACTIONAL_GAP = mpmath.mpf("1e-6")
RANK_CHECK_LIMIT = 24


class NotInSpan(Exception):
    """The class is not an integer combination of the given generators."""


class PrecisionError(ArithmeticError):
    """Lattice coordinates could not be rounded with confidence."""


class CrossValidationError(RuntimeError):
    """The closed-form rank disagrees with the Bass-unit lattice rank."""


def _rotations(rep: GroupRingElement):
    c = rep.coeffs
    n = len(c)
    for k in range(n):
        yield tuple(c[(i - k) % n] for i in range(n))


def _normalize(rep: GroupRingElement) -> GroupRingElement:
    # canonical associate among +-t^k * rep: largest |constant term|, made
    # positive, ties broken by the lexicographically smallest coefficient tuple
    best = None
    for rot in _rotations(rep):
        a0 = rot[0]
        if not a0:
            continue
        if a0 < 0:
            rot = tuple(-v for v in rot)
        key = (-rot[0], rot)
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError("zero element has no class")
    return GroupRingElement(rep.group, best[1])


@dataclass(frozen=True)
class WhiteheadClass:
    """Element of Wh(Z/n) carried by a normalized unit representative."""

    group: CyclicGroupSpec
    rep: GroupRingElement

    def __post_init__(self):
        if self.rep.group != self.group:
            raise ValueError("representative lives over a different group")
        object.__setattr__(self, "rep", _normalize(self.rep))

    def __add__(self, other):
        return add_classes(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return add_classes(self, negate(other))

    def __rmul__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        return scale(m, self)

    def __bool__(self):
        return not is_zero(self)

    def __str__(self):
        return format_element(self.rep)


def class_of(u: GroupRingElement) -> WhiteheadClass:
    if not is_unit(u):
        raise ValueError(f"{format_element(u)} is not a unit of Z[Z/{u.group.n}]")
    return WhiteheadClass(u.group, u)


def zero_class(group: CyclicGroupSpec) -> WhiteheadClass:
    return WhiteheadClass(group, GroupRingElement.one(group))


def is_zero(c: WhiteheadClass) -> bool:
    return is_trivial_unit(c.rep)


def classes_equal(c1: WhiteheadClass, c2: WhiteheadClass) -> bool:
    """Equality by the defining test rep1 * rep2^-1 = +-t^k."""
    _same_group(c1, c2)
    return is_trivial_unit(c1.rep * invert_unit(c2.rep))


def _same_group(c1: WhiteheadClass, c2: WhiteheadClass) -> None:
    if c1.group != c2.group:
        raise ValueError(f"mismatched groups: {c1.group} vs {c2.group}")


def add_classes(c1: WhiteheadClass, c2: WhiteheadClass) -> WhiteheadClass:
    _same_group(c1, c2)
    return WhiteheadClass(c1.group, c1.rep * c2.rep)


def negate(c: WhiteheadClass) -> WhiteheadClass:
    return WhiteheadClass(c.group, invert_unit(c.rep))


def scale(m: int, c: WhiteheadClass) -> WhiteheadClass:
    if m < 0:
        return scale(-m, negate(c))
    return WhiteheadClass(c.group, c.rep ** m)


def bar(c: WhiteheadClass) -> WhiteheadClass:
    return WhiteheadClass(c.group, involution(c.rep))


def push_forward(a: int, c: WhiteheadClass) -> WhiteheadClass:
    """Automorphism of Wh induced by t -> t^a."""
    return WhiteheadClass(c.group, apply_automorphism(a, c.rep))


# character logarithms


def log_vector(c: WhiteheadClass | GroupRingElement, precision_digits: int = DEFAULT_PRECISION) -> list:
    """(log|chi_k(rep)|) for k = 1 .. n//2, chi_k(t) = exp(2 pi i k / n)."""
    rep = c.rep if isinstance(c, WhiteheadClass) else c
    n = rep.group.n
    with mpmath.workdps(precision_digits + 10):
        roots = [mpmath.expjpi(mpmath.mpf(2 * j) / n) for j in range(n)]
        out = []
        for k in range(1, n // 2 + 1):
            z = mpmath.mpc(0)
            for j, a in enumerate(rep.coeffs):
                if a:
                    z += a * roots[(j * k) % n]
            out.append(mpmath.log(abs(z)))
    return out


def lattice_rank(vectors, tol=ROUNDING_TOL, precision_digits: int = DEFAULT_PRECISION) -> int:
    """Numeric rank of the real span of ``vectors`` (singular values > tol)."""
    vectors = [v for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    with mpmath.workdps(precision_digits):
        sv = mpmath.svd_r(mpmath.matrix(vectors), compute_uv=False)
        return sum(1 for s in sv if abs(s) > tol)


# Bass units and rank


def _mult_order(a: int, n: int) -> int:
    m, x = 1, a % n
    while x != 1 % n:
        x = (x * a) % n
        m += 1
    return m


def bass_unit(a: int, group: CyclicGroupSpec, order: int | None = None) -> GroupRingElement:
    """Bass cyclic unit (1 + g + ... + g^(a-1))^m + ((1 - a^m)/d) * (1 + g + ... + g^(d-1)).

    ``g = t^(n/d)`` generates the subgroup of order ``d = order`` (the whole
    group by default) and ``m`` is the multiplicative order of ``a`` mod d.
    """
    n = group.n
    d = n if order is None else order
    if d < 1 or n % d:
        raise ValueError(f"subgroup order {d} does not divide {n}")
    if not (1 < a < d) or gcd(a, d) != 1:
        raise ValueError(f"need 1 < a < {d} with gcd(a, {d}) = 1, got a={a}")
    step = n // d
    m = _mult_order(a, d)
    partial = [0] * n
    for i in range(a):
        partial[(i * step) % n] += 1
    u = GroupRingElement(group, tuple(partial)) ** m
    corr = (1 - a ** m) // d
    sub_norm = [0] * n
    for i in range(d):
        sub_norm[(i * step) % n] = corr
    u = u + GroupRingElement(group, tuple(sub_norm))
    if not is_unit(u):
        raise ArithmeticError(f"Bass construction a={a}, d={d} over Z/{n} is not a unit")
    return u


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def rank(n: int) -> int:
    """Free rank of Wh(Z/n): n//2 + 1 - (number of divisors of n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return n // 2 + 1 - len(_divisors(n))


def bass_candidates(group: CyclicGroupSpec):
    """All (a, d) Bass parameters, whole group first then smaller subgroups."""
    n = group.n
    for d in sorted(_divisors(n), reverse=True):
        for a in range(2, (d + 1) // 2):
            if 2 * a < d and gcd(a, d) == 1:
                yield a, d


def bass_lattice_rank(n: int, precision_digits: int = DEFAULT_PRECISION) -> int:
    group = CyclicGroupSpec(n)
    vecs = [log_vector(bass_unit(a, group, d), precision_digits) for a, d in bass_candidates(group)]
    return lattice_rank(vecs, precision_digits=precision_digits)


@lru_cache(maxsize=None)
def _bass_basis(n: int, epsilon: int, precision_digits: int) -> tuple[GroupRingElement, ...]:
    group = CyclicGroupSpec(n, epsilon)
    chosen, vecs = [], []
    target = rank(n)
    for a, d in bass_candidates(group):
        if len(chosen) == target:
            break
        u = bass_unit(a, group, d)
        v = log_vector(u, precision_digits)
        if lattice_rank(vecs + [v], precision_digits=precision_digits) > len(vecs):
            chosen.append(u)
            vecs.append(v)
    if len(chosen) != target:
        raise CrossValidationError(
            f"Z/{n}: Bass units span rank {len(chosen)}, closed form says {target}"
        )
    return tuple(chosen)


def check_rank(n: int, precision_digits: int = DEFAULT_PRECISION) -> int:
    """Closed-form rank, confirmed against the Bass-unit lattice."""
    r = rank(n)
    numeric = bass_lattice_rank(n, precision_digits)
    if numeric != r:
        raise CrossValidationError(f"Z/{n}: closed-form rank {r} but lattice rank {numeric}")
    return r


def independence_check(gens: list[WhiteheadClass], bound: int = 3) -> bool:
    """Exact group-ring check that no small relation holds among up to two classes.

    A single class is independent iff it is nonzero, since Wh(Z/n) is
    torsion-free.  For two classes, every a*g1 + b*g2 with coprime
    |a|, |b| <= bound is checked to be nonzero by exact multiplication.
    """
    if len(gens) > 2:
        raise ValueError("exact independence is only checked for at most two classes")
    if not gens:
        return True
    if any(is_zero(g) for g in gens):
        return False
    if len(gens) == 1:
        return True
    g1, g2 = gens
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) == (0, 0) or gcd(a, b) != 1 or (a == 0 and b < 0):
                continue
            if is_zero(add_classes(scale(a, g1), scale(b, g2))):
                return False
    return True


# generator registry


@dataclass(frozen=True)
class RegistryEntry:
    generators: tuple[str, ...]
    exact_basis: bool


@dataclass
class GeneratorRegistry:
    entries: dict[int, RegistryEntry] = field(default_factory=dict)
    source: str = "<memory>"

    @classmethod
    def from_json(cls, doc: dict, source: str = "<memory>") -> "GeneratorRegistry":
        entries = {}
        for key, val in doc.items():
            n = int(key)
            if n < 1:
                raise ValueError(f"registry key {key!r} is not a positive integer")
            gens = val.get("generators")
            exact = val.get("exact_basis")
            if not isinstance(gens, list) or not isinstance(exact, bool):
                raise ValueError(f"registry entry {key!r} needs 'generators' (list) and 'exact_basis' (bool)")
            entries[n] = RegistryEntry(tuple(gens), exact)
        reg = cls(entries, source)
        reg.validate()
        return reg

    @classmethod
    def load(cls, path: str | Path | None = None) -> "GeneratorRegistry":
        if path is None:
            text = resources.files("whtorsion").joinpath("data/registry.json").read_text()
            return cls.from_json(json.loads(text), "<shipped>")
        path = Path(path)
        return cls.from_json(json.loads(path.read_text()), str(path))

    def to_json(self) -> dict:
        return {
            str(n): {"generators": list(e.generators), "exact_basis": e.exact_basis}
            for n, e in sorted(self.entries.items())
        }

    def classes(self, n: int, epsilon: int = 1) -> list[WhiteheadClass]:
        group = CyclicGroupSpec(n, epsilon)
        return [class_of(parse_element(g, group)) for g in self.entries[n].generators]

    def validate(self) -> None:
        for n, entry in self.entries.items():
            gens = self.classes(n)  # class_of rejects non-units
            if entry.exact_basis:
                if len(gens) != rank(n):
                    raise ValueError(f"registry basis for Z/{n} has {len(gens)} elements, rank is {rank(n)}")
                if lattice_rank([log_vector(g) for g in gens]) != len(gens):
                    raise ValueError(f"registry basis for Z/{n} is not independent")


def generators(
    n: int,
    registry: GeneratorRegistry | None = None,
    epsilon: int = 1,
    precision_digits: int = DEFAULT_PRECISION,
) -> tuple[list[WhiteheadClass], bool]:
    """Generator classes for Wh(Z/n) and whether they form an exact basis.

    Without a registry entry, a maximal independent set of Bass units is
    returned; it generates a subgroup of finite index, so the flag is False.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if registry is not None and n in registry.entries:
        return registry.classes(n, epsilon), registry.entries[n].exact_basis
    if rank(n) == 0:
        return [], True
    group = CyclicGroupSpec(n, epsilon)
    return [WhiteheadClass(group, u) for u in _bass_basis(n, epsilon, precision_digits)], False


def express_in_generators(
    c: WhiteheadClass,
    gens: list[WhiteheadClass],
    precision_digits: int = DEFAULT_PRECISION,
    tol=ROUNDING_TOL,
) -> list[int]:
    """Integer coordinates e with c = sum e_i g_i, verified exactly.

    Raises NotInSpan when no such vector exists and PrecisionError when the
    numeric solve lands too close to call.
    """
    for g in gens:
        _same_group(c, g)
    if not gens:
        if is_zero(c):
            return []
        raise NotInSpan(f"{c} is nonzero and the generator list is empty")
    with mpmath.workdps(precision_digits):
        cols = [log_vector(g, precision_digits) for g in gens]
        v = mpmath.matrix(log_vector(c, precision_digits))
        G = mpmath.matrix(len(cols[0]), len(cols))
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                G[i, j] = x
        x = mpmath.lu_solve(G.T * G, G.T * v)
        resid = mpmath.norm(v - G * x) / (1 + mpmath.norm(v))
        if resid >= FRACTIONAL_GAP:
            raise NotInSpan(f"{c} is not in the real span of the generators")
        rounded = [int(mpmath.nint(xi)) for xi in x]
        dist = max([abs(xi - r) for xi, r in zip(x, rounded)] + [resid])
    if dist > tol:
        if dist >= FRACTIONAL_GAP:
            raise NotInSpan(f"{c} has fractional coordinates in the generators")
        raise PrecisionError(f"coordinates within {mpmath.nstr(dist, 5)} of an integer; raise the precision")
    residue = c
    for e, g in zip(rounded, gens):
        if e:
            residue = add_classes(residue, scale(-e, g))
    if not is_zero(residue):
        raise NotInSpan(f"rounded coordinates {rounded} fail exact verification")
    return rounded


def involution_trivial_on(gens: list[WhiteheadClass]) -> bool:
    return all(bar(g) == g for g in gens)
