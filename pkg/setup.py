"""Build script for the optional compiled kernel.

The package works without the extension (a pure-Python fallback is
selected at import time), so a missing compiler or Cython only costs
speed, not functionality.
"""

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("stirlingperms._core", ["src/stirlingperms/_core.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
