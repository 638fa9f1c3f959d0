"""Build script.

The compiled kernel (`sqfree_nbhd._kernels`) is optional: if Cython or a C
compiler is unavailable, the build falls back to the pure-Python kernels and
the package still works.  Set SQFREE_NBHD_PURE=1 to skip the extension on
purpose.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building sqfree_nbhd._kernels failed ({exc!r}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("SQFREE_NBHD_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sqfree_nbhd._kernels",
                    ["src/sqfree_nbhd/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
