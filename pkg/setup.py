"""Build script: compiles the optional native kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any compiler or Cython failure downgrades to a pure-Python
install instead of aborting.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, bad toolchain, ...
            print(f"textrisk: native kernel build skipped ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"textrisk: building {ext.name} failed ({exc}); "
                  "falling back to pure Python", file=sys.stderr)


def native_extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"textrisk: Cython/NumPy unavailable ({exc}); "
              "skipping native kernels", file=sys.stderr)
        return []
    ext = Extension(
        "textrisk._native",
        ["src/textrisk/_native.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=native_extensions(), cmdclass={"build_ext": optional_build_ext})
