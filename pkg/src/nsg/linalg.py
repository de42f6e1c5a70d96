"""Sparse exact linear algebra: vectors are dicts {column: nonzero coefficient}.

A :class:`Subspace` keeps an echelon basis keyed by leading (least) column,
each row scaled to lead coefficient 1.  Reduction against the basis is unique,
so normal forms give canonical coset representatives.
"""

from __future__ import annotations

import heapq
from typing import Iterable

from .fields import FieldSpec

Vec = dict


def vadd(F: FieldSpec, u: Vec, v: Vec, scale=1) -> Vec:
    """u + scale * v."""
    out = dict(u)
    for k, x in v.items():
        y = F.add(out.get(k, F.zero()), F.mul(scale, x))
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vscale(F: FieldSpec, v: Vec, s) -> Vec:
    if not s:
        return {}
    return {k: F.mul(s, x) for k, x in v.items()}


class Subspace:
    def __init__(self, F: FieldSpec, rows: Iterable[Vec] = ()):
        self.F = F
        self.rows: dict[int, Vec] = {}
        for r in rows:
            self.add(r)

    def copy(self) -> "Subspace":
        s = Subspace(self.F)
        s.rows = dict(self.rows)
        return s

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)

    def reduce(self, v: Vec) -> Vec:
        """Normal form of v: no pivot column survives."""
        F = self.F
        v = dict(v)
        heap = [k for k in v if k in self.rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = v.get(k)
            if not c:
                continue
            row = self.rows[k]
            for j, x in row.items():
                y = F.sub(v.get(j, F.zero()), F.mul(c, x))
                if y:
                    v[j] = y
                else:
                    v.pop(j, None)
                if j != k and j in self.rows and j not in seen:
                    heapq.heappush(heap, j)
        return v

    def add(self, v: Vec) -> bool:
        """Insert v; return True when the dimension grew."""
        w = self.reduce(v)
        if not w:
            return False
        lead = min(w)
        self.rows[lead] = vscale(self.F, w, self.F.inv(w[lead]))
        return True

    def __contains__(self, v: Vec) -> bool:
        return not self.reduce(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(r in self for r in other.rows.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.dim == other.dim
            and self.contains_space(other)
        )

    def basis(self) -> list[Vec]:
        return list(self.rows.values())


def rank(F: FieldSpec, vectors: Iterable[Vec]) -> int:
    return Subspace(F, vectors).dim


def express(F: FieldSpec, target: Vec, vectors: list[Vec], width: int) -> list | None:
    """Coefficients x with sum x_i vectors[i] = target, or None.

    Columns of the vectors must lie in [0, width); tag columns at offset
    ``width`` record the combination used.
    """
    S = Subspace(F)
    for i, v in enumerate(vectors):
        tagged = dict(v)
        tagged[width + i] = F.one()
        S.add(tagged)
    w = S.reduce(target)
    if any(k < width for k in w):
        return None
    # target - sum(-w_tag) = 0 in the data columns, so coefficients are -w_tag
    coeffs = [F.zero()] * len(vectors)
    for k, x in w.items():
        coeffs[k - width] = F.neg(x)
    return coeffs


def nullity(F: FieldSpec, vectors: list[Vec]) -> int:
    """Dimension of the space of linear relations among ``vectors``."""
    return len(vectors) - rank(F, vectors)
