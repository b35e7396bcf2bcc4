import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EQBREAKS_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/eqbreaks/_speedups.pyx"],
            language_level=3,
        )
    except ImportError:
        # Build without the compiled kernel; the pure-Python fallback is
        # selected automatically at import time.
        pass

setup(ext_modules=ext_modules)
