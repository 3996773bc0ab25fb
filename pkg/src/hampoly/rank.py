"""Exact affine rank over the rationals.

Gaussian elimination on Fraction rows; no pivoting heuristics needed since the
arithmetic is exact.  The accumulator form lets callers feed points one at a
time and stop as soon as a target rank is reached.
"""

from __future__ import annotations

from fractions import Fraction


class RankAccumulator:
    """Incremental row space: add vectors, track linear rank."""

    def __init__(self):
        self.rows = []  # reduced rows, each with its pivot column
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def add(self, vec):
        """Reduce vec against the stored rows; keep it if independent.
        Returns True iff the rank grew."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p] / row[p]
                for c in range(p, len(v)):
                    v[c] -= f * row[c]
        for c, x in enumerate(v):
            if x:
                self.rows.append(v)
                self.pivots.append(c)
                return True
        return False


class AffineRankAccumulator:
    """Affine rank of a point set: rank of differences from the first point,
    plus one."""

    def __init__(self):
        self._base = None
        self._lin = RankAccumulator()

    @property
    def rank(self):
        if self._base is None:
            return 0
        return self._lin.rank + 1

    def add(self, point):
        pt = [Fraction(x) for x in point]
        if self._base is None:
            self._base = pt
            return True
        return self._lin.add([a - b for a, b in zip(pt, self._base)])


def affine_rank(points) -> int:
    acc = AffineRankAccumulator()
    for p in points:
        acc.add(p)
    return acc.rank
