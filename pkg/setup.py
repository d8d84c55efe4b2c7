"""Build hook for the optional compiled kernels.

The package is pure Python plus one Cython extension.  If Cython or a C
compiler is unavailable the install still succeeds and the pure backend
in momsos._kernels.pure is used at runtime.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernels skipped ({exc}); pure backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernels skipped ({exc}); pure backend will be used")


ext_modules = []
if cythonize is not None and not os.environ.get("MOMSOS_NO_EXT"):
    ext_modules = cythonize(
        [Extension("momsos._kernels._speedups", ["src/momsos/_kernels/_speedups.pyx"])],
        compiler_directives={"language_level": 3, "embedsignature": True},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
