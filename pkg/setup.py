"""Build script: compiles the optional speedup extension when Cython is present.

The package works without the extension; heckeposet.kernels falls back to the
pure-Python implementations at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/heckeposet/_kernels_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
