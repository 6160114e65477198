import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LFIGUARD_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lfiguard._core", ["src/lfiguard/_core.pyx"])],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback in lfiguard._core_py covers every kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
