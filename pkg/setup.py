"""Build script for the optional compiled kernels.

The package works without the extension (a pure-numpy implementation of the
same kernels is selected at import time), so a missing compiler or a missing
Cython is downgraded to a warning rather than a build failure.
"""

import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "tritab._kernels._cy",
                ["src/tritab/_kernels/_cy.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    warnings.warn("Cython not available; building without compiled kernels")
    extensions = []

setup(ext_modules=extensions)
