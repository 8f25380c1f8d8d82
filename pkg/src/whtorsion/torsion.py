"""Torsion formulas for compositions, products and duals.

Induced maps between fundamental groups are automorphisms t -> t^a of the
fixed cyclic group, passed around as the integer ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .whitehead import WhiteheadClass, add_classes, bar, negate, push_forward, scale


@dataclass(frozen=True)
class DimensionContext:
    """Dimension of the closed manifold; only its parity enters the formulas."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")

    @property
    def sign(self) -> int:
        return -1 if self.n % 2 else 1


def _signed(sign: int, c: WhiteheadClass) -> WhiteheadClass:
    return c if sign == 1 else negate(c)


def compose_homotopy_torsion(tau_f: WhiteheadClass, tau_g: WhiteheadClass, f_star_inverse: int) -> WhiteheadClass:
    """tau(g o f) = tau(f) + (f_*)^-1 tau(g)."""
    return add_classes(tau_f, push_forward(f_star_inverse, tau_g))


def product_with_space(tau: WhiteheadClass, euler_char: int) -> WhiteheadClass:
    """Torsion of f x id_Z is chi(Z) * tau(f)."""
    return scale(euler_char, tau)


def compose_cobordism_torsion(tau_W: WhiteheadClass, tau_Wp: WhiteheadClass, h_star: int) -> WhiteheadClass:
    """Torsion of W followed by W', measured at the source of W."""
    return add_classes(tau_W, push_forward(h_star, tau_Wp))


def dual_torsion(tau: WhiteheadClass, ctx: DimensionContext, h_star: int) -> WhiteheadClass:
    """Torsion of the dual cobordism at the other end: h_*^-1((-1)^n bar(tau))."""
    n = tau.group.n
    return push_forward(pow(h_star, -1, n), _signed(ctx.sign, bar(tau)))


def norm_element(tau: WhiteheadClass, ctx: DimensionContext) -> WhiteheadClass:
    """tau + (-1)^n bar(tau); its values form the subgroup N(M)."""
    return add_classes(tau, _signed(ctx.sign, bar(tau)))


def concordance_residue(sigma_X: WhiteheadClass, ctx: DimensionContext) -> WhiteheadClass:
    """Difference of torsions of two concordant cobordisms, given the relative torsion sigma_X."""
    return norm_element(sigma_X, ctx)
