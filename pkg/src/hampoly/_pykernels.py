"""Pure-Python kernels for the index-space inner loops.

Everything combinatorial about circuits depends only on vertex/value indices,
never on the numeric domain values, so the hot loops run over small ints:
vertices are 0..n-1 and a partial successor assignment is an int list with -1
for unassigned.  ``hampoly.kernels`` prefers the compiled twin of this module
(`hampoly._ckernels`) and falls back to these definitions.
"""

from __future__ import annotations


def creates_cycle(succ, j, k):
    """True iff adding edge j -> k closes a directed cycle (self-loops count)."""
    t = k
    while True:
        if t == j:
            return True
        t = succ[t]
        if t < 0:
            return False


def is_acyclic(n, js, vals):
    """Check that assigning vals to vertices js is distinct and cycle-free."""
    succ = [-1] * n
    used = [False] * n
    for j, k in zip(js, vals):
        if used[k] or creates_cycle(succ, j, k):
            return False
        succ[j] = k
        used[k] = True
    return True


def j_circuit_tuples(n, js):
    """All distinct-value, cycle-free assignments to js, in lexicographic order."""
    m = len(js)
    out = []
    succ = [-1] * n
    used = [False] * n
    vals = [0] * m

    def rec(i):
        if i == m:
            out.append(tuple(vals))
            return
        j = js[i]
        for k in range(n):
            if used[k] or creates_cycle(succ, j, k):
                continue
            succ[j] = k
            used[k] = True
            vals[i] = k
            rec(i + 1)
            succ[j] = -1
            used[k] = False

    rec(0)
    return out


def greedy_tuple(n, order, minus):
    """One greedy run: assign each vertex in `order` the smallest (largest, when
    the matching entry of `minus` is true) unused value that keeps the partial
    assignment cycle-free.  Returns values aligned with `order`, or None if some
    step has no feasible value."""
    succ = [-1] * n
    used = [False] * n
    out = []
    for j, neg in zip(order, minus):
        rng = range(n - 1, -1, -1) if neg else range(n)
        for k in rng:
            if not used[k] and not creates_cycle(succ, j, k):
                succ[j] = k
                used[k] = True
                out.append(k)
                break
        else:
            return None
    return tuple(out)


def pareto_min(tuples, minus):
    """Filter to the undominated tuples: no other tuple is <= componentwise
    (>= on `minus` positions).  Returns them in lexicographic order."""
    sign = [-1 if neg else 1 for neg in minus]
    keyed = []
    for t in tuples:
        tt = tuple(s * v for s, v in zip(sign, t))
        keyed.append((sum(tt), tt, t))
    keyed.sort()
    # A strictly dominating tuple has a strictly smaller signed sum, so only the
    # minimal elements seen so far can dominate the current candidate.
    kept = []
    for _, tt, t in keyed:
        for kt, _ in kept:
            for a, b in zip(kt, tt):
                if a > b:
                    break
            else:
                break
        else:
            kept.append((tt, t))
    return sorted(t for _, t in kept)
