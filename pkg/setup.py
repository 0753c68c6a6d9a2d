"""Build script.

The compiled F_2 elimination core is optional: set HWGROUPS_PURE_BUILD=1
to skip it, or let the build fall back silently when Cython is absent.
The package works either way; see hwgroups._f2 for backend selection.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HWGROUPS_PURE_BUILD") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hwgroups._f2core", ["src/hwgroups/_f2core.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
