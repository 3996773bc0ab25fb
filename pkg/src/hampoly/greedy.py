"""Greedy generation of undominated J-circuits.

A J-circuit x(J) dominates y(J) with respect to a sign partition (J+, J-) when
x_j <= y_j on J+ and x_j >= y_j on J-.  The greedy procedure (assign each index
in some order the smallest/largest feasible value by sign) always produces an
undominated J-circuit, and running it over every ordering of J produces all of
them.  The implied-ordering algorithm inverts this: given an undominated x(J),
it reconstructs an ordering whose greedy run reproduces x(J).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .caps import Caps, resolve
from .core import Domain, JCircuit, SignPartition
from .errors import InputError, ResourceLimitError


def _check_signs(signs: SignPartition, J) -> None:
    if not signs.covers(J):
        raise InputError(f"sign partition {sorted(signs.plus)}/{sorted(signs.minus)} "
                         f"does not cover J = {sorted(J)}")


def greedy_j_circuit(domain: Domain, J, signs: SignPartition, ordering) -> JCircuit:
    """One greedy run along `ordering`: each index gets the smallest (J+) or
    largest (J-) unused value that keeps the partial assignment cycle-free."""
    js = tuple(sorted(J))
    _check_signs(signs, js)
    if tuple(sorted(ordering)) != js:
        raise InputError(f"ordering {ordering} is not a permutation of J = {js}")
    if len(js) >= domain.n:
        # with |J| < n the greedy step always has a feasible value
        raise InputError("greedy construction requires |J| < n")
    order0 = [j - 1 for j in ordering]
    minus = [j in signs.minus for j in ordering]
    t = kernels.greedy_tuple(domain.n, order0, minus)
    if t is None:  # pragma: no cover - impossible for |J| < n
        raise InputError("greedy step infeasible")
    by_index = dict(zip(ordering, t))
    vals = domain.values
    return JCircuit(domain, js, tuple(vals[by_index[j]] for j in js))


def dominates(a: JCircuit, b: JCircuit, signs: SignPartition) -> bool:
    """a_j <= b_j on J+ and a_j >= b_j on J- (reflexive)."""
    if a.domain != b.domain or a.J != b.J:
        raise InputError("J-circuits live on different index sets or domains")
    _check_signs(signs, a.J)
    for j, av, bv in zip(a.J, a.values, b.values):
        if j in signs.minus:
            if av < bv:
                return False
        elif av > bv:
            return False
    return True


def undominated_j_circuits(domain: Domain, J, signs: SignPartition,
                           caps: Caps | None = None):
    """The greedy outputs over all |J|! orderings, deduplicated, in
    lexicographic order.  This is exactly the undominated set."""
    caps = resolve(caps)
    js = tuple(sorted(J))
    _check_signs(signs, js)
    if len(js) > caps.orderings:
        raise ResourceLimitError(
            f"all-orderings loop capped at |J| <= {caps.orderings} (got {len(js)})"
        )
    if len(js) >= domain.n:
        raise InputError("undominated generation requires |J| < n")
    n = domain.n
    seen = set()
    for perm in itertools.permutations(js):
        minus = [j in signs.minus for j in perm]
        t = kernels.greedy_tuple(n, [j - 1 for j in perm], minus)
        by_index = dict(zip(perm, t))
        seen.add(tuple(by_index[j] for j in js))
    vals = domain.values
    return [JCircuit(domain, js, tuple(vals[k] for k in t)) for t in sorted(seen)]


def undominated_bruteforce(domain: Domain, J, signs: SignPartition,
                           caps: Caps | None = None):
    """Independent oracle: enumerate every J-circuit and keep the ones no other
    J-circuit dominates."""
    from .enumeration import enumerate_j_circuits  # local: avoid cycle at import

    caps = resolve(caps)
    js = tuple(sorted(J))
    _check_signs(signs, js)
    all_jcs = enumerate_j_circuits(domain, js, caps)
    minus = [j in signs.minus for j in js]
    tuples = [jc.value_indices0() for jc in all_jcs]
    keep = set(kernels.pareto_min(tuples, minus))
    return [jc for jc in all_jcs if jc.value_indices0() in keep]


@dataclass(frozen=True)
class OrderingStep:
    """One row of the implied-ordering computation."""

    ell: int
    r: int                    # 1-based position in the sorted J+ list
    s: int                    # 1-based position in the sorted J- list
    i_r: int | None           # next J+ index, None when exhausted
    j_s: int | None           # next J- index, None when exhausted
    v_min: Fraction | None    # greedy value for i_r
    v_max: Fraction | None    # greedy value for j_s
    chosen: int
    assigned: Fraction


@dataclass(frozen=True)
class ImpliedOrderingTrace:
    ordering: tuple[int, ...]
    greedy_result: JCircuit
    steps: tuple[OrderingStep, ...]
    matches: bool  # greedy_result equals the input J-circuit


def implied_ordering(xbar: JCircuit, signs: SignPartition) -> ImpliedOrderingTrace:
    """Reconstruct an ordering of J whose greedy run reproduces xbar(J).

    J+ is consumed in increasing order of xbar value, J- in decreasing order.
    Each step takes the next J+ index when its greedy value agrees with xbar
    (or J- is exhausted), except that once a J+ disagreement diverts us to J-,
    we stay on J- for as long as its greedy values keep agreeing with xbar.
    Without that run rule the interleaving can flip back to J+ one step too
    early on inputs where both pointers happen to agree.
    """
    _check_signs(signs, xbar.J)
    domain = xbar.domain
    n = domain.n
    val_of = xbar.assignment()
    plus = sorted(signs.plus, key=lambda j: val_of[j])
    minus = sorted(signs.minus, key=lambda j: val_of[j], reverse=True)
    p, q = len(plus), len(minus)

    succ = [-1] * n
    used = [False] * n
    vals = domain.values

    def greedy_value(j, want_max):
        rng = range(n - 1, -1, -1) if want_max else range(n)
        for k in rng:
            if not used[k] and not kernels.creates_cycle(succ, j - 1, k):
                return k
        return None

    r = s = 0
    in_minus_run = False
    ordering = []
    assigned = {}
    steps = []
    for ell in range(1, p + q + 1):
        kmin = greedy_value(plus[r], False) if r < p else None
        kmax = greedy_value(minus[s], True) if s < q else None
        if (kmin is None and r < p) or (kmax is None and s < q):
            raise InputError("greedy step infeasible")  # pragma: no cover
        if in_minus_run and s < q and vals[kmax] == val_of[minus[s]]:
            take_plus = False
        elif r < p and (s >= q or vals[kmin] == val_of[plus[r]]):
            take_plus = True
            in_minus_run = False
        elif s < q:
            take_plus = False
            in_minus_run = True
        else:
            take_plus = True
        if take_plus:
            j, k = plus[r], kmin
        else:
            j, k = minus[s], kmax
        steps.append(OrderingStep(
            ell=ell, r=r + 1, s=s + 1,
            i_r=plus[r] if r < p else None,
            j_s=minus[s] if s < q else None,
            v_min=vals[kmin] if kmin is not None else None,
            v_max=vals[kmax] if kmax is not None else None,
            chosen=j, assigned=vals[k],
        ))
        if take_plus:
            r += 1
        else:
            s += 1
        succ[j - 1] = k
        used[k] = True
        ordering.append(j)
        assigned[j] = vals[k]

    result = JCircuit(domain, xbar.J, tuple(assigned[j] for j in xbar.J))
    return ImpliedOrderingTrace(
        ordering=tuple(ordering),
        greedy_result=result,
        steps=tuple(steps),
        matches=result.values == xbar.values,
    )
