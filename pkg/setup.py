import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HALFCUBE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "halfcube._elim",
                    ["src/halfcube/_elim.pyx"],
                    language="c++",
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        # no Cython: install the pure-Python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
