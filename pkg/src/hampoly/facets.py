"""Inequalities over the circuit polytope: representation, facet families,
validity checking, and facet certification.

An inequality sum_{j in J} a_j x_j >= alpha is valid iff every undominated
J-circuit (with respect to the sign partition J+ = {a_j > 0}, J- = {a_j < 0})
satisfies it, and defines a facet when in addition at least |J| affinely
independent tight J-circuits exist and 1 <= |J| <= n-4.  Outside that scope a
brute-force oracle over all circuits settles the question for small n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd

from .caps import Caps, resolve
from .core import Circuit, Domain, JCircuit, SignPartition, rational
from .enumeration import enumerate_circuits, enumerate_j_circuits
from .errors import InputError, ResourceLimitError
from .greedy import undominated_j_circuits
from .rank import AffineRankAccumulator, affine_rank  # noqa: F401 (re-export)

FAMILY_TAGS = (
    "Permutation", "TwoTerm1", "TwoTerm2", "TwoTerm3", "TwoTerm5", "TwoTerm6",
    "Level0", "Level1a", "Level1b",
    "Level2_10", "Level2_11", "Level2_12", "Level2_13", "Level2_14",
)


@dataclass(frozen=True)
class FamilyId:
    tag: str
    params: tuple = ()  # sorted (name, value) pairs

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise InputError(f"unknown family tag: {self.tag}")
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @classmethod
    def of(cls, tag, **params):
        return cls(tag, tuple(params.items()))


@dataclass(frozen=True)
class LinearInequality:
    """sum_j coeffs[j] * x_j >= rhs, stored in normalized form: coefficients
    and rhs scaled by the unique positive rational making them coprime
    integers.  Equality and hashing ignore the family metadata."""

    n: int
    coeffs: tuple  # sorted ((j, Fraction), ...), all coefficients nonzero
    rhs: Fraction
    family: FamilyId | None = field(default=None, compare=False)
    facet_guaranteed: bool | None = field(default=None, compare=False)

    def __post_init__(self):
        items = sorted(dict(self.coeffs).items())
        cleaned = []
        for j, a in items:
            if not 1 <= j <= self.n:
                raise InputError(f"index {j} out of range 1..{self.n}")
            a = rational(a)
            if a:
                cleaned.append((j, a))
        rhs = rational(self.rhs)
        nums = [a for _, a in cleaned] + ([rhs] if rhs else [])
        if nums:
            den = 1
            for a in nums:
                den = den * a.denominator // gcd(den, a.denominator)
            num = 0
            for a in nums:
                num = gcd(num, abs(a.numerator * (den // a.denominator)))
            scale = Fraction(den, num)
            cleaned = [(j, a * scale) for j, a in cleaned]
            rhs = rhs * scale
        object.__setattr__(self, "coeffs", tuple(cleaned))
        object.__setattr__(self, "rhs", rhs)

    @classmethod
    def make(cls, n, coeffs, rhs, family=None, facet_guaranteed=None):
        return cls(n, tuple(dict(coeffs).items()), rhs, family, facet_guaranteed)

    @property
    def J(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.coeffs)

    def coeff_map(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def sign_partition(self) -> SignPartition:
        return SignPartition(
            frozenset(j for j, a in self.coeffs if a > 0),
            frozenset(j for j, a in self.coeffs if a < 0),
        )

    def lhs(self, x) -> Fraction:
        """Evaluate on a full point (sequence indexed from 1) or a mapping from
        support indices to values."""
        if isinstance(x, Circuit):
            x = x.x
        elif isinstance(x, JCircuit):
            x = x.assignment()
        if isinstance(x, dict):
            return sum((a * rational(x[j]) for j, a in self.coeffs), Fraction(0))
        return sum((a * rational(x[j - 1]) for j, a in self.coeffs), Fraction(0))

    def satisfied_by(self, x) -> bool:
        return self.lhs(x) >= self.rhs

    def tight_at(self, x) -> bool:
        return self.lhs(x) == self.rhs

    def __str__(self):
        terms = []
        for j, a in self.coeffs:
            terms.append(f"{'+' if a > 0 and terms else ''}{a}*x{j}")
        return f"{' '.join(terms) or '0'} >= {self.rhs}"


def make_permutation_inequality(domain: Domain, J) -> LinearInequality:
    """sum_{j in J} x_j >= v_1 + ... + v_{|J|}; a facet when min J > 2 and
    |J| <= n-4."""
    js = tuple(sorted(set(J)))
    n = domain.n
    if not js or len(js) > n - 1:
        raise InputError(f"permutation inequality needs 1 <= |J| <= {n - 1}")
    if js[0] < 1 or js[-1] > n:
        raise InputError(f"indices must lie in 1..{n}")
    rhs = sum(domain.values[:len(js)])
    return LinearInequality.make(
        n, {j: 1 for j in js}, rhs,
        family=FamilyId.of("Permutation", J=js),
        facet_guaranteed=(len(js) <= n - 4 and js[0] > 2),
    )


def make_two_term_inequalities(domain: Domain):
    """All members of the five two-term facet families (the <=-form families
    are stored negated, in >= form)."""
    n = domain.n
    if n < 6:
        raise InputError("two-term families require n >= 6")
    v = domain.values
    v1, v2, v3 = v[0], v[1], v[2]
    va, vb, vc = v[n - 3], v[n - 2], v[n - 1]  # v_{n-2}, v_{n-1}, v_n
    out = []
    for i in range(3, n + 1):
        for j in range(i + 1, n + 1):
            out.append(LinearInequality.make(
                n, {i: 1, j: 1}, v1 + v2,
                family=FamilyId.of("TwoTerm1", i=i, j=j), facet_guaranteed=True))
    out.append(LinearInequality.make(
        n, {1: v3 - v1, 2: v3 - v2}, v3 * v3 - v1 * v2,
        family=FamilyId.of("TwoTerm2"), facet_guaranteed=True))
    for i in range(3, n + 1):
        out.append(LinearInequality.make(
            n, {2: v2 - v1, i: v3 - v1}, v2 * v3 - v1 * v1,
            family=FamilyId.of("TwoTerm3", i=i), facet_guaranteed=True))
    out.append(LinearInequality.make(
        n, {n - 1: -(vb - va), n: -(vc - va)}, -(vc * vb - va * va),
        family=FamilyId.of("TwoTerm5"), facet_guaranteed=True))
    for i in range(1, n - 1):
        out.append(LinearInequality.make(
            n, {i: -(vc - va), n - 1: -(vc - vb)}, -(vc * vc - vb * va),
            family=FamilyId.of("TwoTerm6", i=i), facet_guaranteed=True))
    return out


# hierarchy families on u = (1..n): head coefficients, tail coefficient,
# rhs as a function of m, smallest admissible m, m-range ceiling kind
_HIERARCHY = {
    # tag: (head coeffs on (..., x_{m-1}, x_m), tail coeff, rhs(m), m_min, half)
    "Level0":    ((),     1, lambda m: Fraction(m * (m + 1), 2), 2, None),
    "Level1a":   ((1,),   1, lambda m: Fraction(m * (m + 1), 2), 3, "n/2"),
    "Level1b":   ((1,),   2, lambda m: Fraction(m * m + 1),      2, "n/2"),
    "Level2_10": ((1, 1), 1, lambda m: Fraction(m * (m + 1), 2), 4, "(n+1)/2"),
    "Level2_11": ((2, 1), 2, lambda m: Fraction(m * m + 1),      4, "(n+1)/2"),
    "Level2_12": ((2, 1), 4, lambda m: Fraction(m * (2 * m - 3) + 5), 3, "(n+1)/2"),
    "Level2_13": ((3, 2), 4, lambda m: Fraction(m * (2 * m - 1) + 4), 3, "(n+1)/2"),
    "Level2_14": ((3, 2), 5, lambda m: Fraction(5 * m * (m - 1), 2) + 6, 3, "(n+1)/2"),
}


def make_hierarchy_inequality(n: int, family, m: int, tail) -> LinearInequality:
    """One member of a hierarchy family on u = (1..n).  The head variables are
    the last level-many of x_1..x_m; the tail is a subset of {m+1..n} of size
    m - level."""
    tag = family.tag if isinstance(family, FamilyId) else family
    if tag not in _HIERARCHY:
        raise InputError(f"not a hierarchy family: {tag}")
    head, tail_coeff, rhs_of, m_min, half = _HIERARCHY[tag]
    m_max = n if half is None else (ceil(n / 2) if half == "n/2" else ceil((n + 1) / 2))
    if not m_min <= m <= m_max:
        raise InputError(f"{tag} requires m in {m_min}..{m_max} (got {m})")
    tail = tuple(sorted(set(tail)))
    need = m - len(head)
    if len(tail) != need:
        raise InputError(f"{tag} with m={m} needs a tail of {need} indices")
    if tail and (tail[0] <= m or tail[-1] > n):
        raise InputError(f"tail indices must lie in {m + 1}..{n}")
    coeffs = {}
    for k, a in enumerate(head):
        coeffs[m - len(head) + 1 + k] = a
    for j in tail:
        coeffs[j] = tail_coeff
    return LinearInequality.make(
        n, coeffs, rhs_of(m),
        family=FamilyId.of(tag, m=m, tail=tail),
        facet_guaranteed=(n - m >= 4),
    )


@dataclass(frozen=True)
class ValidityResult:
    valid: bool
    witness: JCircuit | Circuit | None  # a violating point when invalid
    method: str  # "undominated", "all_j_circuits", or "all_circuits"

    def __bool__(self):
        return self.valid


def check_validity(domain: Domain, ineq: LinearInequality,
                   caps: Caps | None = None) -> ValidityResult:
    """Valid iff every undominated J-circuit (w.r.t. the induced sign
    partition) satisfies the inequality."""
    caps = resolve(caps)
    if not ineq.coeffs:
        return ValidityResult(0 >= ineq.rhs, None, "undominated")
    signs = ineq.sign_partition()
    js = ineq.J
    if len(js) >= domain.n:
        # full support: no proper J-circuits exist, check the circuits directly
        for c in enumerate_circuits(domain, caps):
            if not ineq.satisfied_by(c.x):
                return ValidityResult(False, c, "all_circuits")
        return ValidityResult(True, None, "all_circuits")
    if len(js) <= caps.orderings:
        pool = undominated_j_circuits(domain, js, signs, caps)
        method = "undominated"
    else:
        pool = enumerate_j_circuits(domain, js, caps)
        method = "all_j_circuits"
    for jc in pool:
        if not ineq.satisfied_by(jc):
            return ValidityResult(False, jc, method)
    return ValidityResult(True, None, method)


@dataclass(frozen=True)
class FacetCertificate:
    status: str  # facet_by_theorem | facet_by_bruteforce | valid_not_facet | invalid | unknown
    undominated_witnesses: tuple  # ((JCircuit, lhs value), ...)
    tight_points: tuple           # tight J-circuits, or circuits on the brute-force path
    affine_rank_of_tight: int
    theorem_scope_ok: bool

    @property
    def is_facet(self):
        return self.status in ("facet_by_theorem", "facet_by_bruteforce")


def certify_facet(domain: Domain, ineq: LinearInequality,
                  caps: Caps | None = None) -> FacetCertificate:
    """Certify via the |J| affinely-independent-tight-J-circuits theorem when
    1 <= |J| <= n-4; outside that scope fall back to the brute-force oracle."""
    caps = resolve(caps)
    n = domain.n
    js = ineq.J
    if not js:
        raise InputError("cannot certify an inequality with empty support")
    scope_ok = len(js) <= n - 4
    validity = check_validity(domain, ineq, caps)
    witnesses = ()
    if len(js) <= caps.orderings and len(js) < n:
        und = undominated_j_circuits(domain, js, ineq.sign_partition(), caps)
        witnesses = tuple((jc, ineq.lhs(jc)) for jc in und)
    if not validity.valid:
        if validity.witness is not None:
            witnesses = witnesses + ((validity.witness, ineq.lhs(validity.witness)),)
        return FacetCertificate("invalid", witnesses, (), 0, scope_ok)
    if scope_ok:
        # tight J-circuits need not be undominated, so prefer full enumeration
        try:
            pool = enumerate_j_circuits(domain, js, caps)
        except ResourceLimitError:
            pool = [jc for jc, _ in witnesses]
        tight = tuple(jc for jc in pool if ineq.tight_at(jc))
        rank = affine_rank(jc.values for jc in tight)
        status = "facet_by_theorem" if rank >= len(js) else "valid_not_facet"
        return FacetCertificate(status, witnesses, tight, rank, scope_ok)
    if n >= 4 and n <= caps.circuits:
        tight = tuple(c for c in enumerate_circuits(domain, caps)
                      if ineq.tight_at(c.x))
        rank = affine_rank(c.x for c in tight)
        ok = is_facet_bruteforce(domain, ineq, caps)
        return FacetCertificate(
            "facet_by_bruteforce" if ok else "valid_not_facet",
            witnesses, tight, rank, scope_ok)
    return FacetCertificate("unknown", witnesses, (), 0, scope_ok)


def is_facet_bruteforce(domain: Domain, ineq: LinearInequality,
                        caps: Caps | None = None) -> bool:
    """Facet test from first principles: every circuit satisfies the
    inequality, the tight circuits have affine rank >= n-1, and at least one
    circuit is slack (so it is a proper face, not an implicit equality)."""
    caps = resolve(caps)
    n = domain.n
    if n < 4:
        raise InputError("brute-force facet oracle requires n >= 4")
    tight_rank = AffineRankAccumulator()
    any_slack = False
    for c in enumerate_circuits(domain, caps):
        val = ineq.lhs(c.x)
        if val < ineq.rhs:
            return False
        if val == ineq.rhs:
            tight_rank.add(c.x)
        else:
            any_slack = True
    return any_slack and tight_rank.rank >= n - 1


@dataclass(frozen=True)
class ArcInequality:
    """The same cut in the 0-1 arc model y_ij = [x_i = v_j]: coefficients
    c_ij = a_i * v_j on the support rows, zero elsewhere."""

    n: int
    coeffs: tuple  # dense n x n tuple-of-tuples of Fractions, 0-based
    rhs: Fraction

    def lhs_on_circuit(self, c: Circuit) -> Fraction:
        total = Fraction(0)
        for i, k in enumerate(c.successor_indices()):
            total += self.coeffs[i][k]
        return total


def map_to_arc_model(domain: Domain, ineq: LinearInequality) -> ArcInequality:
    n = domain.n
    a = ineq.coeff_map()
    rows = []
    for i in range(1, n + 1):
        ai = a.get(i, Fraction(0))
        rows.append(tuple(ai * v for v in domain.values))
    return ArcInequality(n, tuple(rows), ineq.rhs)
