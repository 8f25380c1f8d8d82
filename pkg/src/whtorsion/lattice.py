"""Integer row-lattice membership via Hermite-style echelon reduction."""

from __future__ import annotations


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def echelon(rows: list[list[int]]) -> list[list[int]]:
    """Row echelon basis of the Z-span of ``rows`` (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for col in range(ncols):
        live = [r for r in rows if r[col]]
        if not live:
            continue
        piv = live[0]
        for r in live[1:]:
            g, x, y = _xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [x * p + y * q for p, q in zip(piv, r)]
            r[:] = [a * q - b * p for p, q in zip(piv, r)]
            piv = new_piv
        if piv[col] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        rows = [r for r in rows if r is not live[0] and any(r)]
    for i, b in enumerate(basis):
        col = next(j for j, v in enumerate(b) if v)
        for k in range(i):
            q = basis[k][col] // b[col]
            if q:
                basis[k] = [u - q * w for u, w in zip(basis[k], b)]
    return basis


def in_row_lattice(rows: list[list[int]], target: list[int]) -> bool:
    residue = list(target)
    for b in echelon(rows):
        col = next(j for j, v in enumerate(b) if v)
        if residue[col] % b[col]:
            return False
        q = residue[col] // b[col]
        residue = [u - q * w for u, w in zip(residue, b)]
    return not any(residue)
