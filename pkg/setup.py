"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (atomxr.kernels falls back to the
pure-Python implementation at import time), so a failed or skipped build is
not fatal.  Set ATOMXR_NO_EXT=1 to skip compilation entirely.

-ffp-contract=off keeps the compiled kernels bit-identical to the pure
Python fallback: fused multiply-adds would round differently and break the
byte-identical-trace guarantee.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ATOMXR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "atomxr.kernels._native",
                    sources=["src/atomxr/kernels/_native.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
