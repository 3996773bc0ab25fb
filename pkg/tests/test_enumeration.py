import math

import pytest

from hampoly.caps import Caps
from hampoly.core import Domain, JCircuit, is_circuit, is_j_circuit
from hampoly.enumeration import (
    complete_j_circuit,
    dimension_witnesses,
    enumerate_circuits,
    enumerate_j_circuits,
    polytope_dimension,
)
from hampoly.errors import InputError, ResourceLimitError
from hampoly.rank import affine_rank


def test_circuit_counts():
    for n in range(2, 9):
        d = Domain.integers(n)
        cs = enumerate_circuits(d)
        assert len(cs) == math.factorial(n - 1)
        assert len({c.x for c in cs}) == len(cs)


def test_small_circuit_sets():
    d2 = Domain.integers(2)
    assert [c.x for c in enumerate_circuits(d2)] == [(2, 1)]
    d3 = Domain.integers(3)
    assert {c.x for c in enumerate_circuits(d3)} == {(2, 3, 1), (3, 1, 2)}


def test_circuit_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_circuits(Domain.integers(11))
    # caps are overridable
    assert len(enumerate_circuits(Domain.integers(4), Caps(circuits=4))) == 6
    with pytest.raises(ResourceLimitError):
        enumerate_circuits(Domain.integers(5), Caps(circuits=4))


def test_j_circuit_enumeration():
    d7 = Domain.integers(7)
    assert len(enumerate_j_circuits(d7, {1})) == 6
    assert len(enumerate_j_circuits(Domain.integers(4), {1, 2})) == 6
    # independent brute force over raw tuples
    import itertools
    jcs = enumerate_j_circuits(d7, {1, 3, 4})
    naive = [t for t in itertools.permutations(d7.values, 3)
             if is_j_circuit(dict(zip((1, 3, 4), t)), d7)]
    assert [jc.values for jc in jcs] == sorted(naive)


def test_j_circuit_cap():
    d = Domain.integers(8)
    with pytest.raises(ResourceLimitError):
        enumerate_j_circuits(d, {1, 2, 3, 4, 5, 6, 7})


def test_completion_examples():
    d3 = Domain.integers(3)
    assert complete_j_circuit(JCircuit(d3, (1, 2), (2, 3))).x == (2, 3, 1)
    d5 = Domain.integers(5)
    assert complete_j_circuit(JCircuit(d5, (), ())).x == (2, 3, 4, 5, 1)


def test_completion_extends_every_j_circuit():
    d = Domain.integers(6)
    for J in [(1,), (2, 5), (1, 3, 4), (2, 3, 4, 6)]:
        for jc in enumerate_j_circuits(d, J):
            c = complete_j_circuit(jc)
            assert is_circuit(c.x, d)
            assert c.restrict(J).values == jc.values


def test_dimension_witnesses():
    d4 = Domain.integers(4)
    ws = dimension_witnesses(d4)
    assert ws[0].x == (2, 3, 4, 1)
    # last witness follows the tour (v1, v2, v4, v3)
    assert ws[-1].x == (2, 4, 1, 3)
    for n in range(4, 10):
        ws = dimension_witnesses(Domain.integers(n))
        assert len(ws) == n
        assert len({w.x for w in ws}) == n
        assert affine_rank(w.x for w in ws) == n
    with pytest.raises(InputError):
        dimension_witnesses(Domain.integers(3))


def test_polytope_dimension():
    assert polytope_dimension(Domain.integers(2)) == 0
    assert polytope_dimension(Domain.integers(3)) == 1
    for n in range(4, 9):
        assert polytope_dimension(Domain.integers(n)) == n - 1
    # witness path beyond the enumeration cap
    assert polytope_dimension(Domain.integers(12)) == 11
    # non-uniform domain
    assert polytope_dimension(Domain.parse([2, 4, 5])) == 1
