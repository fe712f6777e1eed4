"""Build script: compiles the optional fast kernels.

Set LAGUERRE_DD_NO_EXT=1 to skip the extension entirely; the package then
runs on the pure-Python kernel fallback.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LAGUERRE_DD_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "laguerre_dd.backends._fastcore",
                    ["src/laguerre_dd/backends/_fastcore.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
