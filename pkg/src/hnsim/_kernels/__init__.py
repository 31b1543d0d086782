"""Hot bit-basis kernels: compiled extension if built, numpy fallback otherwise.

``hnsim._kernels.BACKEND`` reports which implementation was selected;
``benchmarks/bench_kernels.py`` compares the two.
"""

try:
    from ._core import BACKEND, annihilate, enumerate_states, hamiltonian_coo, opdm
except ImportError:  # extension not built
    from ._python import BACKEND, annihilate, enumerate_states, hamiltonian_coo, opdm

from . import _python as python_impl

__all__ = ["BACKEND", "enumerate_states", "hamiltonian_coo", "opdm", "annihilate", "python_impl"]
