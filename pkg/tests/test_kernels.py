"""The compiled kernels and the pure-Python fallback must agree exactly."""

import itertools
import random

import pytest

from hampoly import _pykernels, kernels

try:
    from hampoly import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="extension not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
def test_j_circuit_tuples_parity():
    for n in range(2, 7):
        for m in range(0, min(n, 4) + 1):
            for js in itertools.combinations(range(n), m):
                assert _ckernels.j_circuit_tuples(n, list(js)) \
                    == _pykernels.j_circuit_tuples(n, list(js))


@needs_ext
def test_greedy_parity():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(2, 8)
        m = rng.randint(1, n - 1)
        order = rng.sample(range(n), m)
        minus = [rng.random() < 0.5 for _ in range(m)]
        assert _ckernels.greedy_tuple(n, order, minus) \
            == _pykernels.greedy_tuple(n, order, minus)


@needs_ext
def test_pareto_parity():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(2, 6)
        m = rng.randint(1, min(n, 4))
        js = rng.sample(range(n), m)
        tuples = _pykernels.j_circuit_tuples(n, js)
        minus = [rng.random() < 0.5 for _ in range(m)]
        assert _ckernels.pareto_min(tuples, minus) \
            == _pykernels.pareto_min(tuples, minus)


@needs_ext
def test_acyclic_parity():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(2, 7)
        m = rng.randint(1, n)
        js = rng.sample(range(n), m)
        vals = [rng.randrange(n) for _ in range(m)]
        assert _ckernels.is_acyclic(n, js, vals) == _pykernels.is_acyclic(n, js, vals)
