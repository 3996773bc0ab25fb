"""Kernel backend selection: compiled extension if built, pure Python otherwise.

Set HAMPOLY_KERNEL=python to force the fallback (used by the benchmark and for
debugging).
"""

import os

if os.environ.get("HAMPOLY_KERNEL") == "python":
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

creates_cycle = _impl.creates_cycle
is_acyclic = _impl.is_acyclic
j_circuit_tuples = _impl.j_circuit_tuples
greedy_tuple = _impl.greedy_tuple
pareto_min = _impl.pareto_min
