"""Polynomial-time separation for the implemented facet families.

Each separator evaluates only O(n) candidate members per family (sorted-prefix
selection for the permutation family, smallest-tail selection per m for the
hierarchy families) and is complete: it emits a violated cut whenever some
member of its family is violated by the query point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .core import Domain, rational
from .errors import InputError
from .facets import (
    FAMILY_TAGS,
    FamilyId,
    LinearInequality,
    make_hierarchy_inequality,
    make_permutation_inequality,
    make_two_term_inequalities,
)


@dataclass(frozen=True)
class QueryPoint:
    """A candidate (possibly fractional, possibly infeasible) solution."""

    domain: Domain
    xbar: tuple[Fraction, ...]

    def __post_init__(self):
        xbar = tuple(rational(v) for v in self.xbar)
        if len(xbar) != self.domain.n:
            raise InputError(
                f"point has length {len(xbar)}, expected {self.domain.n}")
        object.__setattr__(self, "xbar", xbar)


@dataclass(frozen=True)
class Cut:
    ineq: LinearInequality
    tags: tuple[FamilyId, ...]
    violation: Fraction  # rhs - lhs > 0, in the normalized form
    theorem_scope_ok: bool


@dataclass(frozen=True)
class SeparationResult:
    cuts: tuple[Cut, ...]
    notes: tuple[str, ...] = ()

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)


def _try_cut(ineq: LinearInequality, q: QueryPoint) -> Cut | None:
    viol = ineq.rhs - ineq.lhs(q.xbar)
    if viol <= 0:
        return None
    return Cut(ineq, (ineq.family,), viol, bool(ineq.facet_guaranteed))


def _sorted_indices(q: QueryPoint, lo: int):
    """Indices lo..n by ascending query value, ties by ascending index."""
    return sorted(range(lo, q.domain.n + 1), key=lambda j: (q.xbar[j - 1], j))


def separate_permutation(q: QueryPoint) -> SeparationResult:
    """Sorted-prefix separation over J subset of {3..n}: the first violated
    prefix inequality, if any, is emitted.  Complete because the m smallest
    values minimize every |J| = m member's left-hand side."""
    n = q.domain.n
    if n < 3:
        raise InputError("permutation separation requires n >= 3")
    order = _sorted_indices(q, 3)
    prefix = Fraction(0)
    rhs = Fraction(0)
    for m, j in enumerate(order, start=1):
        prefix += q.xbar[j - 1]
        rhs += q.domain.values[m - 1]
        if prefix < rhs:
            ineq = make_permutation_inequality(q.domain, order[:m])
            cut = _try_cut(ineq, q)
            return SeparationResult((cut,))
    return SeparationResult(())


def separate_two_term(q: QueryPoint) -> SeparationResult:
    """Evaluate the O(n) two-term candidates: the smallest-pair member of the
    first family, and every member of the indexed families."""
    n = q.domain.n
    if n < 6:
        raise InputError("two-term separation requires n >= 6")
    candidates = []
    best = _sorted_indices(q, 3)[:2]
    pair = tuple(sorted(best))
    for ineq in make_two_term_inequalities(q.domain):
        params = dict(ineq.family.params)
        if ineq.family.tag == "TwoTerm1" and (params["i"], params["j"]) != pair:
            continue
        candidates.append(ineq)
    cuts = tuple(c for c in (_try_cut(i, q) for i in candidates) if c)
    return SeparationResult(cuts)


# (family, tail size as a function of m, m_min, m-range ceiling)
_HIERARCHY_SEPARATORS = (
    ("Level1b", 1, 2, "n/2"),
    ("Level2_11", 2, 4, "(n+1)/2"),
    ("Level2_12", 2, 3, "(n+1)/2"),
    ("Level2_13", 2, 3, "(n+1)/2"),
    ("Level2_14", 2, 3, "(n+1)/2"),
)


def separate_hierarchy(q: QueryPoint) -> SeparationResult:
    """Per family and per m, test the single candidate whose tail is the
    smallest query values beyond index m.  The remaining hierarchy families
    (level 0, fam2a, fam10) are permutation inequalities and are covered by
    separate_permutation."""
    if not q.domain.is_integers():
        raise InputError("hierarchy families are defined on the domain (1..n) only")
    n = q.domain.n
    cuts = []
    for tag, head_len, m_min, half in _HIERARCHY_SEPARATORS:
        m_max = ceil(n / 2) if half == "n/2" else ceil((n + 1) / 2)
        for m in range(m_min, m_max + 1):
            need = m - head_len
            tail = sorted(_sorted_indices(q, m + 1)[:need])
            if len(tail) < need:
                continue
            ineq = make_hierarchy_inequality(n, tag, m, tail)
            cut = _try_cut(ineq, q)
            if cut:
                cuts.append(cut)
    return SeparationResult(tuple(cuts))


def _merge(results) -> SeparationResult:
    by_form = {}
    notes = []
    for res in results:
        notes.extend(res.notes)
        for cut in res.cuts:
            key = (cut.ineq.coeffs, cut.ineq.rhs)
            if key in by_form:
                old = by_form[key]
                tags = tuple(sorted(set(old.tags) | set(cut.tags),
                                    key=lambda f: (FAMILY_TAGS.index(f.tag), f.params)))
                by_form[key] = Cut(old.ineq, tags, old.violation,
                                   old.theorem_scope_ok or cut.theorem_scope_ok)
            else:
                by_form[key] = cut
    ordered = sorted(by_form.values(),
                     key=lambda c: (-c.violation, c.ineq.coeffs, c.ineq.rhs))
    return SeparationResult(tuple(ordered), tuple(notes))


def separate_all(q: QueryPoint) -> SeparationResult:
    """Union of all family separators, deduplicated by normalized form with
    merged family tags, sorted by descending violation."""
    results = []
    n = q.domain.n
    if n >= 3:
        results.append(separate_permutation(q))
    else:
        results.append(SeparationResult((), ("permutation separator skipped: n < 3",)))
    if n >= 6:
        results.append(separate_two_term(q))
    else:
        results.append(SeparationResult((), ("two-term separator skipped: n < 6",)))
    if q.domain.is_integers():
        results.append(separate_hierarchy(q))
    else:
        results.append(SeparationResult(
            (), ("hierarchy separator skipped: domain is not (1..n)",)))
    return _merge(results)
