"""Build the optional compiled search kernels.

The package is fully functional without the extension (a pure-Python twin
of every kernel is selected at import time); set LINKAGE_KIT_NO_EXT=1 to
skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LINKAGE_KIT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "linkage_kit._speedups",
                    sources=["src/linkage_kit/_speedups.pyx"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
