"""Builds the optional compiled traversal core.

The package works without it: kanmorph.kernels falls back to the pure
Python twin when the extension is missing or KANMORPH_PURE=1 is set.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KANMORPH_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("kanmorph._traverse", ["src/kanmorph/_traverse.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
