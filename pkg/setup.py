"""Build script: compiles the optional GF(p) speedup extension.

The package is fully functional without the extension (a pure-Python
twin of every kernel ships alongside it); a failed compile therefore
only costs speed, never features.
"""

import sys

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("diagcomp._gfp_cy", ["src/diagcomp/_gfp_cy.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    print("Cython not available; building pure-Python diagcomp", file=sys.stderr)
    extensions = []

setup(ext_modules=extensions)
