"""Build script: compiles the optional Cython kernel.

Set BARIC_NO_EXT=1 to skip the extension entirely; the package then runs on
the pure-Python kernel selected at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BARIC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("baric._poly_cy", ["src/baric/_poly_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
