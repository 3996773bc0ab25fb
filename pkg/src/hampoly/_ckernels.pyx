# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled twin of hampoly._pykernels (same functions, same semantics)."""

from libc.stdlib cimport malloc, free


cdef inline bint _creates_cycle(int* succ, int j, int k) nogil:
    cdef int t = k
    while True:
        if t == j:
            return True
        t = succ[t]
        if t < 0:
            return False


def creates_cycle(succ, int j, int k):
    """True iff adding edge j -> k closes a directed cycle (self-loops count)."""
    cdef int t = k
    while True:
        if t == j:
            return True
        t = succ[t]
        if t < 0:
            return False


def is_acyclic(int n, js, vals):
    """Check that assigning vals to vertices js is distinct and cycle-free."""
    cdef int* succ = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> malloc(n * sizeof(int))
    cdef int i, j, k
    cdef bint ok = True
    try:
        for i in range(n):
            succ[i] = -1
            used[i] = 0
        for i in range(len(js)):
            j = js[i]
            k = vals[i]
            if used[k] or _creates_cycle(succ, j, k):
                ok = False
                break
            succ[j] = k
            used[k] = 1
        return ok
    finally:
        free(succ)
        free(used)


def j_circuit_tuples(int n, js):
    """All distinct-value, cycle-free assignments to js, in lexicographic order."""
    cdef int m = len(js)
    cdef int* succ = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> malloc(n * sizeof(int))
    cdef int* jarr = <int*> malloc(m * sizeof(int))
    cdef int* vals = <int*> malloc(m * sizeof(int))
    cdef int* kpos = <int*> malloc((m + 1) * sizeof(int))
    cdef int i, j, k, depth
    out = []
    try:
        for i in range(n):
            succ[i] = -1
            used[i] = 0
        for i in range(m):
            jarr[i] = js[i]
        if m == 0:
            return [()]
        # iterative backtracking; kpos[depth] is the next value to try there
        depth = 0
        kpos[0] = 0
        while depth >= 0:
            if depth == m:
                out.append(tuple([vals[i] for i in range(m)]))
                depth -= 1
                j = jarr[depth]
                k = vals[depth]
                succ[j] = -1
                used[k] = 0
                continue
            j = jarr[depth]
            k = kpos[depth]
            while k < n and (used[k] or _creates_cycle(succ, j, k)):
                k += 1
            if k >= n:
                depth -= 1
                if depth >= 0:
                    j = jarr[depth]
                    k = vals[depth]
                    succ[j] = -1
                    used[k] = 0
                continue
            kpos[depth] = k + 1
            succ[j] = k
            used[k] = 1
            vals[depth] = k
            depth += 1
            kpos[depth] = 0
        return out
    finally:
        free(succ)
        free(used)
        free(jarr)
        free(vals)
        free(kpos)


def greedy_tuple(int n, order, minus):
    """One greedy run: assign each vertex in `order` the smallest (largest, when
    the matching entry of `minus` is true) unused value that keeps the partial
    assignment cycle-free.  Returns values aligned with `order`, or None if some
    step has no feasible value."""
    cdef int m = len(order)
    cdef int* succ = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> malloc(n * sizeof(int))
    cdef int i, j, k, step
    cdef bint neg, found
    out = []
    try:
        for i in range(n):
            succ[i] = -1
            used[i] = 0
        for step in range(m):
            j = order[step]
            neg = minus[step]
            found = False
            if neg:
                k = n - 1
                while k >= 0:
                    if not used[k] and not _creates_cycle(succ, j, k):
                        found = True
                        break
                    k -= 1
            else:
                k = 0
                while k < n:
                    if not used[k] and not _creates_cycle(succ, j, k):
                        found = True
                        break
                    k += 1
            if not found:
                return None
            succ[j] = k
            used[k] = 1
            out.append(k)
        return tuple(out)
    finally:
        free(succ)
        free(used)


def pareto_min(tuples, minus):
    """Filter to the undominated tuples: no other tuple is <= componentwise
    (>= on `minus` positions).  Returns them in lexicographic order."""
    cdef int m = len(minus)
    cdef int i, c, total
    cdef bint dominated, leq
    sign = [-1 if neg else 1 for neg in minus]
    keyed = []
    for t in tuples:
        tt = tuple([sign[c] * t[c] for c in range(m)])
        total = 0
        for c in range(m):
            total += tt[c]
        keyed.append((total, tt, t))
    keyed.sort()
    kept = []
    for _, tt, t in keyed:
        dominated = False
        for kt, _ in kept:
            leq = True
            for c in range(m):
                if kt[c] > tt[c]:
                    leq = False
                    break
            if leq:
                dominated = True
                break
        if not dominated:
            kept.append((tt, t))
    return sorted([t for _, t in kept])
