"""Selection of the GF(p) kernel backend.

The hot loops over prime fields (dense characteristic polynomials,
principal-minor subset sums, exhaustive last-column enumeration) run on
plain machine integers.  Two interchangeable backends implement them:

* ``diagcomp._gfp_cy`` — Cython extension, used when it was compiled and
  the modulus is small enough that residue products fit in 64 bits;
* ``diagcomp._gfp_py`` — pure Python, always available, any modulus.

Both produce bit-identical results; ``benchmarks/bench_kernels.py``
compares their speed.  Set the environment variable
``DIAGCOMP_PURE_PYTHON=1`` before import to force the pure backend.
"""

import os

from . import _gfp_py as pure

# Compiled kernels hold residues in unsigned 64-bit words, so products of
# two residues must stay below 2^64.
COMPILED_MODULUS_LIMIT = 2**31

if os.environ.get("DIAGCOMP_PURE_PYTHON"):
    compiled = None
else:
    try:
        from . import _gfp_cy as compiled
    except ImportError:
        compiled = None


def using_compiled() -> bool:
    return compiled is not None


def backend_name() -> str:
    return "compiled" if compiled is not None else "pure-python"


def for_modulus(p: int):
    """The backend module to use for arithmetic mod p."""
    if compiled is not None and p < COMPILED_MODULUS_LIMIT:
        return compiled
    return pure
