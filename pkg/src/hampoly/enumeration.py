"""Brute-force oracles and dimension machinery.

All circuits of a domain, all J-circuits on an index set, completion of a
J-circuit to a full circuit by chain linking, and the dimension of the circuit
polytope (by exact affine rank of the enumerated vertex set, or by the witness
construction for large n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .caps import Caps, resolve
from .core import Circuit, Domain, JCircuit
from .errors import InputError, ResourceLimitError
from .rank import AffineRankAccumulator, affine_rank


@lru_cache(maxsize=None)
def circuit_successor_tuples(n):
    """Successor-index vectors of all circuits on n vertices, ordered
    lexicographically by tour (0, then a permutation of 1..n-1)."""
    out = []
    for rest in itertools.permutations(range(1, n)):
        tour = (0,) + rest
        succ = [0] * n
        for i in range(n):
            succ[tour[i]] = tour[(i + 1) % n]
        out.append(tuple(succ))
    return tuple(out)


@lru_cache(maxsize=4)
def _circuits(domain: Domain):
    vals = domain.values
    return tuple(
        Circuit(domain, tuple(vals[k] for k in succ))
        for succ in circuit_successor_tuples(domain.n)
    )


def enumerate_circuits(domain: Domain, caps: Caps | None = None):
    """All (n-1)! circuits, lexicographic by tour."""
    caps = resolve(caps)
    n = domain.n
    if n > caps.circuits:
        raise ResourceLimitError(
            f"circuit enumeration capped at n <= {caps.circuits} (got n = {n})"
        )
    return list(_circuits(domain))


def enumerate_j_circuits(domain: Domain, J, caps: Caps | None = None):
    """All J-circuits on the given index set, lexicographic by value tuple."""
    caps = resolve(caps)
    n = domain.n
    js = tuple(sorted(set(J)))
    if js and (js[0] < 1 or js[-1] > n):
        raise InputError(f"indices must lie in 1..{n}")
    if len(js) > caps.j:
        raise ResourceLimitError(
            f"J-circuit enumeration capped at |J| <= {caps.j} (got {len(js)})"
        )
    if n > caps.circuits:
        raise ResourceLimitError(
            f"J-circuit enumeration capped at n <= {caps.circuits} (got n = {n})"
        )
    vals = domain.values
    return [
        JCircuit(domain, js, tuple(vals[k] for k in t))
        for t in kernels.j_circuit_tuples(n, [j - 1 for j in js])
    ]


@dataclass(frozen=True)
class ChainGraph:
    """The vertex-disjoint maximal paths induced by a partial successor
    assignment, plus the chain of vertices it leaves untouched."""

    n: int
    chains: tuple[tuple[int, ...], ...]  # 0-based vertex paths, linking order

    @classmethod
    def from_j_circuit(cls, jc: JCircuit) -> "ChainGraph":
        n = jc.domain.n
        succ = [-1] * n
        has_in = [False] * n
        for j, k in zip(jc.J, jc.value_indices0()):
            succ[j - 1] = k
            has_in[k] = True
        paths = []
        for h in range(n):
            # heads of assigned paths: an out-edge but no in-edge
            if succ[h] >= 0 and not has_in[h]:
                path = [h]
                t = h
                while succ[t] >= 0:
                    t = succ[t]
                    path.append(t)
                paths.append(tuple(path))
        unused = tuple(
            v for v in range(n) if succ[v] < 0 and not has_in[v]
        )
        paths.sort()  # ascending head index; the unused chain goes last
        if unused:
            paths.append(unused)
        return cls(n, tuple(paths))


def complete_j_circuit(jc: JCircuit) -> Circuit:
    """A circuit agreeing with jc on J: link the chain-graph paths end-to-start
    and close the cycle."""
    graph = ChainGraph.from_j_circuit(jc)
    tour_idx = [v for chain in graph.chains for v in chain]
    n = jc.domain.n
    succ = [0] * n
    for i in range(n):
        succ[tour_idx[i]] = tour_idx[(i + 1) % n]
    vals = jc.domain.values
    return Circuit(jc.domain, tuple(vals[k] for k in succ))


def dimension_witnesses(domain: Domain):
    """n affinely independent circuits: the cyclic shifts of v_2..v_n after v_1,
    plus the first of those with v_{n-1} and v_n swapped."""
    n = domain.n
    if n < 4:
        raise InputError("dimension witnesses need n >= 4")
    vals = domain.values
    out = []
    rest = list(vals[1:])
    for s in range(n - 1):
        tour = [vals[0]] + rest[s:] + rest[:s]
        out.append(_circuit_from_tour(domain, tour))
    swapped = [vals[0]] + rest[:-2] + [rest[-1], rest[-2]]
    out.append(_circuit_from_tour(domain, swapped))
    return out


def _circuit_from_tour(domain, tour):
    n = domain.n
    x = [None] * n
    for i, v in enumerate(tour):
        x[domain.index0(v)] = tour[(i + 1) % n]
    return Circuit(domain, tuple(x))


def polytope_dimension(domain: Domain, caps: Caps | None = None) -> int:
    """Dimension of the circuit polytope: n-2 for n in {2,3}, n-1 for n >= 4.
    Computed from the enumerated vertex set when the cap allows, otherwise from
    the witness construction."""
    caps = resolve(caps)
    n = domain.n
    if n <= caps.circuits:
        acc = AffineRankAccumulator()
        for c in enumerate_circuits(domain, caps):
            acc.add(c.x)
            if acc.rank == n:  # dimension can't exceed n-1 (affine hull eq.)
                break
        return acc.rank - 1
    if n >= 4:
        if affine_rank(c.x for c in dimension_witnesses(domain)) != n:
            raise RuntimeError("witness rank check failed")  # pragma: no cover
        return n - 1
    raise ResourceLimitError(f"n = {n} above circuit cap and witness path needs n >= 4")
