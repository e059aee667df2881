"""Build script for the optional compiled scan kernel.

The kernel is a plain Cython extension with no external dependencies. If
Cython or a C toolchain is missing the build degrades to the pure-Python
wheel; the package then selects its numpy fallback at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

KERNEL_SOURCE = "src/flateta/_countkern.pyx"


class OptionalBuildExt(build_ext):
    """Try to build the extension, fall back to pure Python on failure."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernel skipped ({exc}); the numpy fallback will be used")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("flateta._countkern", [KERNEL_SOURCE])],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available; the numpy fallback will be used")
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
