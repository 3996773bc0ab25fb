import itertools

import pytest

from hampoly.core import Domain, JCircuit, SignPartition
from hampoly.errors import InputError, ResourceLimitError
from hampoly.greedy import (
    dominates,
    greedy_j_circuit,
    implied_ordering,
    undominated_bruteforce,
    undominated_j_circuits,
)

D7 = Domain.integers(7)


def all_sign_partitions(J):
    J = tuple(J)
    for mask in range(2 ** len(J)):
        minus = frozenset(j for k, j in enumerate(J) if mask >> k & 1)
        yield SignPartition(frozenset(J) - minus, minus)


def test_greedy_single_orderings():
    sp = SignPartition.all_plus({1, 3, 4})
    assert greedy_j_circuit(D7, {1, 3, 4}, sp, (1, 3, 4)).values == (2, 1, 3)
    assert greedy_j_circuit(D7, {1, 3, 4}, sp, (4, 3, 1)).values == (3, 2, 1)
    mixed = SignPartition(frozenset({1, 3}), frozenset({4}))
    for ordering in itertools.permutations((1, 3, 4)):
        assert greedy_j_circuit(D7, {1, 3, 4}, mixed, ordering).values == (2, 1, 7)


def test_greedy_input_checks():
    sp = SignPartition.all_plus({1, 3})
    with pytest.raises(InputError):
        greedy_j_circuit(D7, {1, 3}, sp, (1, 4))
    with pytest.raises(InputError):
        greedy_j_circuit(D7, {1, 3}, SignPartition.all_plus({1, 4}), (1, 3))


def test_dominates():
    sp = SignPartition.all_plus({3})
    a = JCircuit(D7, (3,), (1,))
    b = JCircuit(D7, (3,), (2,))
    assert dominates(a, b, sp) and not dominates(b, a, sp)
    spm = SignPartition(frozenset(), frozenset({4}))
    assert dominates(JCircuit(D7, (4,), (7,)), JCircuit(D7, (4,), (5,)), spm)
    sp3 = SignPartition.all_plus({1, 3, 4})
    x = JCircuit(D7, (1, 3, 4), (2, 1, 3))
    y = JCircuit(D7, (1, 3, 4), (2, 4, 1))
    assert not dominates(x, y, sp3) and not dominates(y, x, sp3)
    assert dominates(x, x, sp3)  # reflexive
    with pytest.raises(InputError):
        dominates(x, JCircuit(D7, (1, 3), (2, 1)), sp3)


def test_undominated_reference_table():
    sp = SignPartition.all_plus({1, 3, 4})
    und = undominated_j_circuits(D7, {1, 3, 4}, sp)
    assert {jc.values for jc in und} == {(2, 1, 3), (2, 4, 1), (4, 1, 2), (3, 2, 1)}
    mixed = SignPartition(frozenset({1, 3}), frozenset({4}))
    assert [jc.values for jc in undominated_j_circuits(D7, {1, 3, 4}, mixed)] \
        == [(2, 1, 7)]
    assert [jc.values for jc in
            undominated_j_circuits(D7, {3}, SignPartition.all_plus({3}))] == [(1,)]


def test_undominated_outputs_are_undominated():
    d = Domain.integers(6)
    for J in [(2, 5), (1, 2, 3), (1, 4, 5, 6)]:
        for sp in all_sign_partitions(J):
            und = undominated_j_circuits(d, J, sp)
            pool = undominated_bruteforce(d, J, sp)
            assert {jc.values for jc in und} == {jc.values for jc in pool}


def test_ordering_cap():
    d = Domain.integers(10)
    with pytest.raises(ResourceLimitError):
        undominated_j_circuits(d, range(1, 9), SignPartition.all_plus(range(1, 9)))


def test_implied_ordering_table1():
    from hampoly.core import Circuit
    xbar = Circuit(D7, (2, 3, 4, 7, 6, 1, 5)).restrict((1, 3, 4, 5, 6, 7))
    sp = SignPartition(frozenset({1, 3, 6, 7}), frozenset({4, 5}))
    tr = implied_ordering(xbar, sp)
    assert tr.ordering == (6, 1, 3, 4, 5, 7)
    assert tr.matches and tr.greedy_result.values == xbar.values


def test_implied_ordering_pure_sign_cases():
    sp = SignPartition.all_plus({1, 3, 4})
    for jc in undominated_j_circuits(D7, {1, 3, 4}, sp):
        tr = implied_ordering(jc, sp)
        # sorted by increasing value
        vals = jc.assignment()
        assert list(tr.ordering) == sorted(jc.J, key=lambda j: vals[j])
        assert tr.matches
    spm = SignPartition(frozenset(), frozenset({2, 5, 6}))
    for jc in undominated_j_circuits(D7, {2, 5, 6}, spm):
        tr = implied_ordering(jc, spm)
        vals = jc.assignment()
        assert list(tr.ordering) == sorted(jc.J, key=lambda j: -vals[j])
        assert tr.matches


def test_implied_ordering_dominated_input_flagged():
    # (2, 3) on J = {3, 4} is dominated by (1, 2) under (J, {})
    sp = SignPartition.all_plus({3, 4})
    jc = JCircuit(D7, (3, 4), (2, 3))
    tr = implied_ordering(jc, sp)
    assert not tr.matches


def test_implied_ordering_reproduces_undominated_grid():
    for n in (5, 6):
        d = Domain.integers(n)
        for J in itertools.combinations(range(1, n + 1), 3):
            for sp in all_sign_partitions(J):
                for jc in undominated_bruteforce(d, J, sp):
                    assert implied_ordering(jc, sp).matches
