"""Build script: compiles the optional fast-kernel extension.

The extension is marked optional; if Cython or a C compiler is missing the
install still succeeds and the package falls back to the pure-Python kernels.
Set BIBLIOFIT_SKIP_EXT=1 to skip the compilation step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BIBLIOFIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "bibliofit._fastkernels",
                    ["src/bibliofit/_fastkernels.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
