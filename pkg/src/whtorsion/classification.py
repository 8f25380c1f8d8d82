"""Decisions about R-diffeomorphisms, inertia and the groups D(M), D_c(M).

Every answer is a :class:`~whtorsion.verdict.Verdict`.  In dimension >= 5
the torsion calculus decides; in dimensions 3 and 4 the relevant
classification problems are open and the verdicts say so.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import verdict as v
from .cobordism import InvertibleCobordism, ManifoldProfile, _check_compatible
from .lattice import in_row_lattice
from .torsion import DimensionContext, norm_element
from .verdict import Answer, Verdict
from .whitehead import (
    DEFAULT_PRECISION,
    RANK_CHECK_LIMIT,
    GeneratorRegistry,
    NotInSpan,
    WhiteheadClass,
    bar,
    check_rank,
    express_in_generators,
    generators,
    involution_trivial_on,
    is_zero,
    negate,
    rank,
)

SUBGROUP_CAVEAT = "relative to the Bass-unit subgroup of finite index"
EXACT = "exact"
FINITE_INDEX = "finite_index_subgroup"


@dataclass(frozen=True)
class GroupStructure:
    free_rank: int
    torsion_factors: tuple[int, ...] = ()
    exactness: str = EXACT

    def __post_init__(self):
        object.__setattr__(self, "torsion_factors", tuple(sorted(self.torsion_factors)))
        if any(f < 2 for f in self.torsion_factors):
            raise ValueError("torsion factors must be at least 2")

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        counts: dict[int, int] = {}
        for f in self.torsion_factors:
            counts[f] = counts.get(f, 0) + 1
        for f, k in sorted(counts.items()):
            parts.append(f"Z/{f}" if k == 1 else f"(Z/{f})^{k}")
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "group": str(self),
            "free_rank": self.free_rank,
            "torsion_factors": list(self.torsion_factors),
            "exactness": self.exactness,
        }


def _require_high_dim(dim: int) -> None:
    if dim < 5:
        raise ValueError(f"dimension {dim} < 5: the torsion classification is only available from dimension 5")


def _wh_rank(n: int) -> int:
    return check_rank(n) if n <= RANK_CHECK_LIMIT else rank(n)


def in_N_subgroup(
    sigma: WhiteheadClass,
    ctx: DimensionContext,
    gens: list[WhiteheadClass],
    exact_basis: bool,
    precision_digits: int = DEFAULT_PRECISION,
) -> Verdict:
    """Is sigma of the form tau + (-1)^n bar(tau)?"""
    cite = "norm-subgroup-inertial"
    if is_zero(sigma):
        return v.yes(cite)
    caveat = None if exact_basis else SUBGROUP_CAVEAT
    try:
        coords = express_in_generators(sigma, gens, precision_digits)
    except NotInSpan:
        if exact_basis:
            raise
        return v.open_(cite, caveat=f"{SUBGROUP_CAVEAT}; class lies outside it")
    # without an exact basis only positive answers are conclusive:
    # N(M) may contain norms of classes outside the subgroup
    negative = v.no(cite) if exact_basis else v.open_(cite, caveat=f"{SUBGROUP_CAVEAT}; not a norm of a subgroup class")
    if involution_trivial_on(gens):
        if ctx.sign == -1:
            # N = {tau - tau} = 0
            return v.no(cite)
        if all(e % 2 == 0 for e in coords):
            return v.yes(cite, caveat=caveat)
        return negative
    try:
        image_rows = [express_in_generators(norm_element(g, ctx), gens, precision_digits) for g in gens]
    except NotInSpan:
        if exact_basis:
            raise
        return v.open_(cite, caveat=f"{SUBGROUP_CAVEAT}; involution leaves it")
    if not any(any(r) for r in image_rows):
        # Wh(Z/n) is torsion-free, so a norm map vanishing on a finite-index subgroup vanishes
        return v.no(cite)
    if in_row_lattice(image_rows, coords):
        return v.yes(cite, caveat=caveat)
    return negative


def decide_decomposable(W: InvertibleCobordism) -> Verdict:
    """Is the R-diffeomorphism encoded by W isotopic to a product?"""
    dim = W.dim
    zero = is_zero(W.torsion)
    if dim >= 5:
        return v.yes("zero-torsion-iff-decomposable") if zero else v.no("zero-torsion-iff-decomposable")
    if dim <= 2:
        return v.yes("low-dim-decomposable")
    if not zero:
        return v.no("torsion-is-an-invariant")
    if dim == 4:
        if W.source.simply_connected:
            return v.open_("dim4-sphere-smooth-poincare", caveat="exact equivalence stated for M = S^4")
        return v.open_("dim4-torsion-surjective")
    return v.open_("dim3-h-cobordism-invertibility-open")


def decide_c_decomposable(
    W: InvertibleCobordism,
    gens: list[WhiteheadClass],
    exact_basis: bool,
    precision_digits: int = DEFAULT_PRECISION,
) -> Verdict:
    """Is the R-diffeomorphism encoded by W concordant to a product?"""
    if W.dim >= 5:
        r = in_N_subgroup(W.torsion, DimensionContext(W.dim), gens, exact_basis, precision_digits)
        return Verdict(r.answer, "norm-subgroup-iff-c-decomposable", r.caveat)
    d = decide_decomposable(W)
    if d.answer is Answer.YES:
        return v.yes(d.citation if W.dim <= 2 else "decomposable-implies-c-decomposable")
    if d.answer is Answer.OPEN:
        return d
    if W.dim == 4:
        return v.open_("dim4-smooth-classification-open")
    return v.open_("dim3-h-cobordism-invertibility-open")


def D_structure(M: ManifoldProfile, registry: GeneratorRegistry | None = None) -> GroupStructure:
    """D(M), in bijection with Wh(pi_1 M) from dimension 5 on."""
    _require_high_dim(M.dim)
    n = M.pi.n
    r = _wh_rank(n)
    exact = r == 0 or (registry is not None and n in registry.entries and registry.entries[n].exact_basis)
    return GroupStructure(r, (), EXACT if exact else FINITE_INDEX)


def Dc_structure(
    M: ManifoldProfile,
    registry: GeneratorRegistry | None = None,
    precision_digits: int = DEFAULT_PRECISION,
) -> GroupStructure:
    """D_c(M), in bijection with Wh(M)/N(M) from dimension 5 on."""
    base = D_structure(M, registry)
    gens, _ = generators(M.pi.n, registry, M.pi.epsilon, precision_digits)
    if not involution_trivial_on(gens):
        raise ValueError(
            f"involution on Wh({M.pi}) is nontrivial on the generators; quotient by N(M) is not computed"
        )
    if M.dim % 2:
        return base
    return GroupStructure(0, (2,) * base.free_rank, base.exactness)


def inertial_status(
    sigma: WhiteheadClass,
    M: ManifoldProfile,
    gens: list[WhiteheadClass],
    exact_basis: bool,
    precision_digits: int = DEFAULT_PRECISION,
) -> Verdict:
    """Is sigma the torsion of a cobordism from M to a manifold diffeomorphic to M?"""
    _require_high_dim(M.dim)
    if is_zero(sigma):
        return v.yes("norm-subgroup-inertial")
    even = M.dim % 2 == 0
    if even and M.orientable:
        return v.yes("even-orientable-abelian-all-inertial")
    twisted = bar(sigma) if even else negate(bar(sigma))
    if twisted == sigma:
        return v.yes("self-dual-torsion-inertial")
    n_member = in_N_subgroup(sigma, DimensionContext(M.dim), gens, exact_basis, precision_digits)
    if n_member.answer is Answer.YES:
        return n_member
    return v.open_("inertia-not-decidable-here")


def stabilization_bound(sigma: WhiteheadClass, M: ManifoldProfile) -> int:
    """Size p of a GL_p representative realizing sigma; always 1 here.

    The general bound for finite fundamental groups is 2 (see the
    ``unit-representative-stabilization`` anchor); classes in this library
    come with 1x1 unit representatives.  The zero class needs no
    stabilization at all, but is reported with the same bound.
    """
    _require_high_dim(M.dim)
    if sigma.group != M.pi:
        raise ValueError("class does not live over the manifold's fundamental group")
    return 1


STABILIZATION_CITATION = "unit-representative-stabilization"


def r_diffeo_conclusion(M: ManifoldProfile, N: ManifoldProfile) -> list[Verdict]:
    """What follows from M x R being diffeomorphic to N x R?

    The caller asserts the R-diffeomorphism (equivalently, an invertible
    cobordism between M and N); nothing geometric is checked.
    """
    _check_compatible(M, N)
    if M.orientable != N.orientable:
        raise ValueError("R-diffeomorphic manifolds share orientability")
    dim = M.dim
    out: list[Verdict] = []
    if M.simply_connected:
        out.append(v.yes("simply-connected-r-diffeo-homeomorphic", claim="homeomorphic"))
        if dim != 4:
            out.append(v.yes("simply-connected-r-diffeo-diffeomorphic", claim="diffeomorphic"))
    if dim <= 2:
        out.append(v.yes("low-dim-r-diffeo-diffeomorphic", claim="diffeomorphic"))
    elif dim == 3:
        if M.orientable:
            out.append(v.yes("low-dim-r-diffeo-diffeomorphic", claim="diffeomorphic"))
        else:
            out.append(v.open_("dim3-nonorientable-open", claim="diffeomorphic"))
    elif dim == 4:
        # finite cyclic groups are poly-(finite or cyclic)
        if rank(M.pi.n) == 0:
            if not M.simply_connected:
                out.append(v.yes("dim4-poly-cyclic-homeomorphic", claim="homeomorphic"))
        else:
            out.append(v.open_("dim4-torsion-surjective", claim="homeomorphic"))
        if M.flag("h1_z2_zero"):
            out.append(v.open_("dim4-homeomorphic-r-diffeomorphic", claim="diffeomorphic"))
        else:
            out.append(v.open_("dim4-smooth-classification-open", claim="diffeomorphic"))
    else:
        if rank(M.pi.n) == 0:
            out.append(v.yes("trivial-whitehead-r-diffeo-diffeomorphic", claim="diffeomorphic"))
        elif dim % 2 == 0 and M.orientable:
            out.append(v.yes(
                "even-orientable-abelian-all-inertial",
                caveat="every torsion is inertial here, so each such N is diffeomorphic to M",
                claim="diffeomorphic",
            ))
        else:
            out.append(v.open_(
                "inertia-decides-r-diffeo",
                caveat="diffeomorphic for every such N iff I(M) = Wh(M)",
                claim="diffeomorphic",
            ))
    return out
