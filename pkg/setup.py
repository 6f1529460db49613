"""Build script: compiles the optional numeric kernel extension.

The package is fully functional without the extension; ``qlorentz._kernels``
falls back to the pure-Python twin when the compiled module is missing.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("qlorentz: Cython not available, skipping compiled kernels", file=sys.stderr)
        return []
    ext = Extension(
        "qlorentz._kernels._core",
        ["src/qlorentz/_kernels/_core.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
