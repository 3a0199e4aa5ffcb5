import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GMFLOWS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gmflows.kernel._speedups", ["src/gmflows/kernel/_speedups.pyx"])],
            compiler_directives={"language_level": 3, "boundscheck": False},
        )
    except ImportError:
        # No Cython: the pure-Python kernel is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
