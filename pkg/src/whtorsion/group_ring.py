"""Exact arithmetic in the integral group ring Z[Z/n].

Elements are stored as a tuple of ``n`` Python integers, index ``k`` holding
the coefficient of ``t^k``.  Everything here is exact; the only place a
unit test happens is through the integer determinant of the circulant
(multiplication-by-x) matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

__all__ = [
    "CyclicGroupSpec",
    "GroupRingElement",
    "ParseError",
    "add",
    "mul",
    "augmentation",
    "involution",
    "circulant_matrix",
    "circulant_determinant",
    "is_unit",
    "invert_unit",
    "apply_automorphism",
    "parse_element",
    "format_element",
    "trivial_unit",
    "is_trivial_unit",
]


class ParseError(ValueError):
    """Syntax error in an element string; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class CyclicGroupSpec:
    """The cyclic group Z/n with generator t and orientation sign ``epsilon``.

    ``epsilon`` is the image of t under the orientation character, so
    omega(t^k) = epsilon**k.  A sign of -1 only makes sense for even n.
    """

    n: int
    epsilon: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"group order must be a positive integer, got {self.n!r}")
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        if self.epsilon == -1 and self.n % 2:
            raise ValueError("epsilon = -1 requires an even group order")

    def omega(self, k: int) -> int:
        return 1 if self.epsilon == 1 or k % 2 == 0 else -1

    def __str__(self):
        s = f"Z/{self.n}"
        if self.epsilon == -1:
            s += " (w(t)=-1)"
        return s


@dataclass(frozen=True)
class GroupRingElement:
    group: CyclicGroupSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.n:
            raise ValueError(
                f"expected {self.group.n} coefficients, got {len(self.coeffs)}"
            )

    # constructors

    @classmethod
    def from_coeffs(cls, group: CyclicGroupSpec, coeffs: Iterable[int]) -> "GroupRingElement":
        return cls(group, tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls, group: CyclicGroupSpec) -> "GroupRingElement":
        return cls(group, (0,) * group.n)

    @classmethod
    def one(cls, group: CyclicGroupSpec) -> "GroupRingElement":
        return cls.monomial(group, 0, 1)

    @classmethod
    def monomial(cls, group: CyclicGroupSpec, k: int, c: int = 1) -> "GroupRingElement":
        coeffs = [0] * group.n
        coeffs[k % group.n] = c
        return cls(group, tuple(coeffs))

    @classmethod
    def norm(cls, group: CyclicGroupSpec) -> "GroupRingElement":
        """The sum of all group elements."""
        return cls(group, (1,) * group.n)

    # ring structure

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.group != self.group:
            raise ValueError(f"mismatched groups: {self.group} vs {other.group}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.monomial(self.group, 0, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupRingElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.monomial(self.group, 0, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, tuple(other * a for a in self.coeffs))
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = self.group.n
        out = [0] * n
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j, c in enumerate(b):
                    if c:
                        out[(i + j) % n] += a * c
        return GroupRingElement(self.group, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return invert_unit(self) ** (-e)
        result = GroupRingElement.one(self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"GroupRingElement({format_element(self)!r}, n={self.group.n})"


def _same(x: GroupRingElement, y: GroupRingElement) -> None:
    if x.group != y.group:
        raise ValueError(f"mismatched groups: {x.group} vs {y.group}")


def add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    _same(x, y)
    return x + y


def mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    _same(x, y)
    return x * y


def augmentation(x: GroupRingElement) -> int:
    return sum(x.coeffs)


def involution(x: GroupRingElement) -> GroupRingElement:
    """sum a_k t^k  ->  sum a_k omega(t^k) t^(-k)."""
    g = x.group
    n = g.n
    out = [0] * n
    for k, a in enumerate(x.coeffs):
        out[-k % n] = g.omega(k) * a
    return GroupRingElement(g, tuple(out))


def apply_automorphism(a: int, x: GroupRingElement) -> GroupRingElement:
    """Ring automorphism induced by t -> t^a."""
    n = x.group.n
    if gcd(a, n) != 1:
        raise ValueError(f"automorphism parameter {a} is not coprime to {n}")
    out = [0] * n
    for k, c in enumerate(x.coeffs):
        out[(a * k) % n] = c
    return GroupRingElement(x.group, tuple(out))


def circulant_matrix(x: GroupRingElement) -> list[list[int]]:
    """Matrix of y -> x*y on Z^n in the basis 1, t, ..., t^(n-1)."""
    n = x.group.n
    c = x.coeffs
    return [[c[(i - j) % n] for j in range(n)] for i in range(n)]


def _bareiss_det(m: list[list[int]]) -> int:
    m = [row[:] for row in m]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def circulant_determinant(x: GroupRingElement) -> int:
    return _bareiss_det(circulant_matrix(x))


def is_unit(x: GroupRingElement) -> bool:
    return abs(circulant_determinant(x)) == 1


def invert_unit(x: GroupRingElement) -> GroupRingElement:
    """Inverse of a unit, found by solving x*y = 1 exactly and checked."""
    n = x.group.n
    if not is_unit(x):
        raise ValueError(f"{format_element(x)} is not a unit of Z[Z/{n}]")
    # Gauss-Jordan over the rationals on [C | e_0]
    rows = [[Fraction(v) for v in row] + [Fraction(int(i == 0))] for i, row in enumerate(circulant_matrix(x))]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    sol = [rows[i][n] for i in range(n)]
    if any(v.denominator != 1 for v in sol):
        raise ArithmeticError("non-integral inverse of a unit; determinant check is inconsistent")
    y = GroupRingElement(x.group, tuple(int(v) for v in sol))
    if x * y != GroupRingElement.one(x.group):
        raise ArithmeticError("inverse failed exact verification")
    return y


def trivial_unit(group: CyclicGroupSpec, sign: int, k: int) -> GroupRingElement:
    return GroupRingElement.monomial(group, k, sign)


def is_trivial_unit(x: GroupRingElement) -> bool:
    """True iff x = +-t^k."""
    nz = [c for c in x.coeffs if c]
    return len(nz) == 1 and abs(nz[0]) == 1


# text form

def parse_element(text: str, group: CyclicGroupSpec) -> GroupRingElement:
    """Parse e.g. ``"1 - t - t^4"``; exponents are reduced mod n."""
    n = group.n
    coeffs = [0] * n
    pos = 0
    end = len(text)

    def skip_ws(p):
        while p < end and text[p].isspace():
            p += 1
        return p

    def read_int(p):
        q = p
        while q < end and text[q].isdigit():
            q += 1
        if q == p:
            raise ParseError("expected an integer", text, p)
        return int(text[p:q]), q

    pos = skip_ws(pos)
    if pos == end:
        raise ParseError("empty expression", text, pos)
    first = True
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < end and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        first = False
        if pos >= end:
            raise ParseError("expected a term", text, pos)
        coef = None
        if text[pos].isdigit():
            coef, pos = read_int(pos)
            pos = skip_ws(pos)
            if pos < end and text[pos] == "*":
                pos = skip_ws(pos + 1)
                if pos >= end or text[pos] != "t":
                    raise ParseError("expected 't' after '*'", text, pos)
        exp = 0
        if pos < end and text[pos] == "t":
            pos = skip_ws(pos + 1)
            exp = 1
            if pos < end and text[pos] == "^":
                pos = skip_ws(pos + 1)
                esign = 1
                if pos < end and text[pos] in "+-":
                    esign = -1 if text[pos] == "-" else 1
                    pos = skip_ws(pos + 1)
                if pos >= end or not text[pos].isdigit():
                    raise ParseError("exponent must be an integer", text, pos)
                e, pos = read_int(pos)
                exp = esign * e
        elif coef is None:
            raise ParseError("expected an integer or 't'", text, pos)
        coeffs[exp % n] += sign * (1 if coef is None else coef)
        pos = skip_ws(pos)
        if pos == end:
            break
    return GroupRingElement(group, tuple(coeffs))


def format_element(x: GroupRingElement) -> str:
    """Canonical text: ascending powers, zero terms omitted."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"

