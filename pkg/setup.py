import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("IDEALDEP_PURE_BUILD") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("idealdep._kernel._speed", ["src/idealdep/_kernel/_speed.pyx"])],
            language_level="3",
        )
    except ImportError:
        # no Cython: install with the pure-Python kernel only
        ext_modules = []

setup(ext_modules=ext_modules)
