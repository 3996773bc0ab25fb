"""Domain types and successor-representation basics.

A circuit over domain values v_1 < ... < v_n is the vector x where x_i is the
value labelling the vertex visited immediately after vertex v_i.  Indices are
1-based at the API surface; the kernels work 0-based.  All values are exact
rationals and every type here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import InputError


def rational(x) -> Fraction:
    """Exact conversion; decimal strings like "6.25" parse exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        # repr round-trips, so this reads 2.6 as 13/5 rather than its binary value
        return Fraction(str(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse rational: {x!r}") from None
    raise InputError(f"cannot convert {type(x).__name__} to rational")


@dataclass(frozen=True)
class Domain:
    """The ordered tuple of n distinct nonnegative rational values."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(rational(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) < 2:
            raise InputError("domain needs at least two values")
        if values[0] < 0:
            raise InputError("domain values must be nonnegative")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise InputError("domain values must be strictly increasing")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(values)})

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def integers(cls, n: int) -> "Domain":
        """The standard domain u = (1, ..., n)."""
        return cls(tuple(Fraction(i) for i in range(1, n + 1)))

    @classmethod
    def parse(cls, items: Iterable) -> "Domain":
        return cls(tuple(rational(v) for v in items))

    def is_integers(self) -> bool:
        return all(v == i for i, v in enumerate(self.values, start=1))

    def index0(self, value) -> int:
        """0-based index of a domain value."""
        v = rational(value)
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"{v} is not a domain value") from None

    def value(self, index1: int) -> Fraction:
        """Value at a 1-based index."""
        if not 1 <= index1 <= self.n:
            raise InputError(f"index {index1} out of range 1..{self.n}")
        return self.values[index1 - 1]


def _check_indices(J: Iterable[int], n: int) -> tuple[int, ...]:
    js = tuple(sorted(J))
    if len(js) != len(set(js)):
        raise InputError("duplicate indices")
    if js and not (1 <= js[0] and js[-1] <= n):
        raise InputError(f"indices must lie in 1..{n}")
    return js


def is_circuit(assignment: Sequence, domain: Domain) -> bool:
    """True iff the assignment is a permutation of the domain values forming a
    single n-cycle under the successor interpretation."""
    n = domain.n
    if len(assignment) != n:
        raise InputError(f"assignment has length {len(assignment)}, expected {n}")
    vals = [rational(v) for v in assignment]
    if set(vals) != set(domain.values):
        return False
    succ = [domain.index0(v) for v in vals]
    # single n-cycle: walking n-1 steps from vertex 0 must not revisit it early
    t = 0
    for _ in range(n - 1):
        t = succ[t]
        if t == 0:
            return False
    return succ[t] == 0


def is_j_circuit(partial: Mapping[int, object], domain: Domain) -> bool:
    """True iff the partial assignment has distinct values and closes no cycle
    (self-loops included)."""
    n = domain.n
    js = _check_indices(partial.keys(), n)
    vals = [domain.index0(partial[j]) for j in js]
    if len(set(vals)) != len(vals):
        return False
    return kernels.is_acyclic(n, [j - 1 for j in js], vals)


@dataclass(frozen=True)
class Circuit:
    domain: Domain
    x: tuple[Fraction, ...]

    def __post_init__(self):
        x = tuple(rational(v) for v in self.x)
        object.__setattr__(self, "x", x)
        if not is_circuit(x, self.domain):
            raise InputError(f"not a circuit: {x}")

    def successor_indices(self) -> tuple[int, ...]:
        """0-based successor map."""
        return tuple(self.domain.index0(v) for v in self.x)

    def restrict(self, J: Iterable[int]) -> "JCircuit":
        js = _check_indices(J, self.domain.n)
        return JCircuit(self.domain, js, tuple(self.x[j - 1] for j in js))


@dataclass(frozen=True)
class JCircuit:
    """A partial assignment on index set J that closes no cycle."""

    domain: Domain
    J: tuple[int, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        js = _check_indices(self.J, self.domain.n)
        if js != tuple(self.J):
            raise InputError("J must be sorted ascending")
        vals = tuple(rational(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != len(js):
            raise InputError("values and J differ in length")
        if not is_j_circuit(dict(zip(js, vals)), self.domain):
            raise InputError(f"not a J-circuit: J={js}, values={vals}")

    def assignment(self) -> dict[int, Fraction]:
        return dict(zip(self.J, self.values))

    def value_indices0(self) -> tuple[int, ...]:
        return tuple(self.domain.index0(v) for v in self.values)


@dataclass(frozen=True)
class SignPartition:
    """Split of an index set into plus (minimize) and minus (maximize) parts."""

    plus: frozenset[int]
    minus: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))
        if self.plus & self.minus:
            raise InputError("plus and minus overlap")

    @property
    def J(self) -> frozenset[int]:
        return self.plus | self.minus

    def covers(self, J: Iterable[int]) -> bool:
        return self.J == set(J)

    @classmethod
    def all_plus(cls, J: Iterable[int]) -> "SignPartition":
        return cls(frozenset(J), frozenset())


def circuit_from_permutation(tour: Sequence, domain: Domain) -> Circuit:
    """Circuit whose successor map follows the tour order cyclically.  The tour
    must be a permutation of the domain values starting at v_1."""
    n = domain.n
    vals = [rational(v) for v in tour]
    if len(vals) != n or set(vals) != set(domain.values):
        raise InputError("tour is not a permutation of the domain values")
    if vals[0] != domain.values[0]:
        raise InputError("tour must start at the smallest domain value")
    x = [None] * n
    for i, v in enumerate(vals):
        x[domain.index0(v)] = vals[(i + 1) % n]
    return Circuit(domain, tuple(x))


def permutation_from_circuit(c: Circuit) -> tuple[Fraction, ...]:
    """Inverse of circuit_from_permutation; the tour starts at v_1."""
    succ = c.successor_indices()
    tour = []
    t = 0
    for _ in range(c.domain.n):
        tour.append(c.domain.values[t])
        t = succ[t]
    return tuple(tour)
