"""Build script for the optional compiled solver kernel.

The package is fully functional without the extension: ``temprel.kernels``
falls back to the numpy implementation when ``temprel._kernels`` is absent.
Set TEMPREL_SKIP_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TEMPREL_SKIP_EXT", "") not in ("1", "true"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "temprel._kernels",
                    ["src/temprel/_kernels.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
