"""Integer lattices given by generating columns, in column Hermite form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^dim spanned by ``basis`` (columns in Hermite form).

    Column ``j`` has its first nonzero entry, positive, at ``pivots[j]``;
    pivot rows strictly increase and every column's entry at a later pivot
    row lies in ``[0, pivot)``.  The form is canonical for the lattice.
    """

    dim: int
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def residue(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``v`` modulo the lattice."""
        v = list(v)
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in lattice of dimension {self.dim}")
        for col, r in zip(self.basis, self.pivots):
            q = v[r] // col[r]
            if q:
                for i in range(r, self.dim):
                    v[i] -= q * col[i]
        return tuple(v)

    def __contains__(self, v: Sequence[int]) -> bool:
        return not any(self.residue(v))

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coefficients of ``v`` on the basis, or None if ``v`` is outside."""
        v = list(v)
        coeffs = []
        for col, r in zip(self.basis, self.pivots):
            q, rem = divmod(v[r], col[r])
            if rem:
                return None
            coeffs.append(q)
            for i in range(r, self.dim):
                v[i] -= q * col[i]
        if any(v):
            return None
        return tuple(coeffs)


def hermite_lattice(columns: Iterable[Sequence[int]], dim: int) -> Lattice:
    pending = [list(c) for c in columns]
    for c in pending:
        if len(c) != dim:
            raise ValueError(f"column of length {len(c)}, expected {dim}")
    pending = [c for c in pending if any(c)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in range(dim):
        active = [c for c in pending if c[row]]
        if not active:
            continue
        rest = [c for c in pending if not c[row]]
        # Euclid on the entries of this row
        while len(active) > 1:
            active.sort(key=lambda c: abs(c[row]))
            small = active[0]
            nxt = [small]
            for c in active[1:]:
                q = c[row] // small[row]
                c = [x - q * y for x, y in zip(c, small)]
                if c[row]:
                    nxt.append(c)
                elif any(c):
                    rest.append(c)
            active = nxt
        piv = active[0]
        if piv[row] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        pivots.append(row)
        pending = rest
    for j in range(len(basis)):
        for i in range(j + 1, len(basis)):
            r = pivots[i]
            q = basis[j][r] // basis[i][r]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return Lattice(dim, tuple(tuple(c) for c in basis), tuple(pivots))
