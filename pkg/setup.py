"""Build the optional compiled straightening kernel.

Without Cython or a C compiler the package installs pure-Python only.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("QYANGIAN_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qyangian/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
