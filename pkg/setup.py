"""Build script: compiles the bit-basis kernels when Cython is available.

The package works without the extension (a vectorized numpy fallback is
selected at import time); the compiled core speeds up Hamiltonian assembly
and one-particle density-matrix accumulation on large sectors.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hnsim._kernels._core",
                ["src/hnsim/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
