"""Exact rational nullspaces of homogeneous restriction systems.

A restriction is a linear equation ``c . w = 0`` over a fixed index set
(vertices or edges).  The solution space of a list of restrictions is kept as
a ``WeightSpace`` whose basis is in reduced row-echelon form, so that two
spaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    """Vectors or spaces over index sets of different sizes were combined."""


@dataclass(frozen=True)
class Restriction:
    """Linear equation ``sum(coeffs[i] * w[i]) == 0``.

    ``provenance`` records which structure produced the equation; it takes
    no part in equality of the resulting space.
    """

    coeffs: tuple[int, ...]
    provenance: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("the trivial restriction 0 = 0 is never emitted")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def evaluate(self, w: Sequence) -> Fraction:
        if len(w) != len(self.coeffs):
            raise DimensionError(f"weight vector has length {len(w)}, expected {len(self.coeffs)}")
        return sum((Fraction(c) * Fraction(x) for c, x in zip(self.coeffs, w) if c), Fraction(0))

    def equation(self, labels: Optional[Sequence[str]] = None) -> str:
        """Human-readable form, positive side on the left.

        >>> Restriction((-1, 1, -1)).equation()
        'w1 = w0 + w2'
        """
        if labels is None:
            labels = [f"w{i}" for i in range(len(self.coeffs))]
        lhs = [(c, labels[i]) for i, c in enumerate(self.coeffs) if c > 0]
        rhs = [(-c, labels[i]) for i, c in enumerate(self.coeffs) if c < 0]

        def side(terms):
            if not terms:
                return "0"
            return " + ".join(name if c == 1 else f"{c}*{name}" for c, name in terms)

        return f"{side(lhs)} = {side(rhs)}"


@dataclass(frozen=True)
class WeightSpace:
    """A subspace of Q^ambient given by its canonical (RREF) basis."""

    ambient: int
    basis: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(row) for row in self.basis)

    def __contains__(self, w) -> bool:
        return contains(self, w)

    @classmethod
    def full(cls, ambient: int) -> "WeightSpace":
        return cls(ambient, tuple(
            tuple(Fraction(int(i == j)) for j in range(ambient)) for i in range(ambient)))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "WeightSpace":
        """Canonical form of the span of arbitrary vectors."""
        rows = [tuple(Fraction(x) for x in v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionError(f"vector of length {len(r)} in ambient dimension {ambient}")
        return cls(ambient, tuple(rref(rows, ambient)))


def rref(rows: Iterable[Sequence], ncols: int) -> list[Vector]:
    """Reduced row-echelon form with zero rows dropped.

    Pivot = first nonzero column; exact arithmetic makes pivot size irrelevant.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    out: list[list[Fraction]] = []
    for col in range(ncols):
        src = next((i for i, r in enumerate(mat) if r[col] != 0), None)
        if src is None:
            continue
        row = mat.pop(src)
        inv = 1 / row[col]
        row = [x * inv for x in row]
        for r in mat:
            f = r[col]
            if f:
                for j in range(col, ncols):
                    r[j] -= f * row[j]
        for r in out:
            f = r[col]
            if f:
                for j in range(col, ncols):
                    r[j] -= f * row[j]
        out.append(row)
    return [tuple(r) for r in out]


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols))


def nullspace(restrictions: Iterable[Restriction | Sequence], dim: int) -> WeightSpace:
    """Canonical basis of ``{w : c . w = 0 for every restriction c}``."""
    rows = []
    seen = set()
    for r in restrictions:
        coeffs = tuple(r.coeffs if isinstance(r, Restriction) else r)
        if len(coeffs) != dim:
            raise DimensionError(f"restriction of length {len(coeffs)} over an index set of size {dim}")
        if coeffs not in seen:
            seen.add(coeffs)
            rows.append(coeffs)
    reduced = rref(rows, dim)
    pivot_of_row = [_pivot(r) for r in reduced]
    free = [c for c in range(dim) if c not in set(pivot_of_row)]
    generators = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivot_of_row):
            v[p] = -row[f]
        generators.append(v)
    return WeightSpace(dim, tuple(rref(generators, dim)))


def subspace_equal(a: WeightSpace, b: WeightSpace) -> bool:
    if a.ambient != b.ambient:
        raise DimensionError(f"ambient dimensions differ: {a.ambient} vs {b.ambient}")
    return a.basis == b.basis


def contains(space: WeightSpace, w: Sequence) -> bool:
    """Membership by reduction against the echelon basis."""
    if len(w) != space.ambient:
        raise DimensionError(f"vector of length {len(w)} in ambient dimension {space.ambient}")
    rest = [Fraction(x) for x in w]
    for row in space.basis:
        p = _pivot(row)
        f = rest[p]
        if f:
            for j in range(p, space.ambient):
                rest[j] -= f * row[j]
    return not any(rest)


def format_rational(x) -> str:
    """``p/q``, or ``p`` for integers."""
    return str(Fraction(x))


def _pivot(row: Sequence) -> int:
    return next(i for i, x in enumerate(row) if x != 0)
