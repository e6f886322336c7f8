"""Build script: compiles the optional C++ search kernel.

The package works without the extension (a pure-Python fallback is selected at
import time), so any compilation problem downgrades to a warning instead of
failing the install.
"""
import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available, building without the compiled kernel",
              file=sys.stderr)
        return []
    ext = Extension(
        "prymsearch._kernel",
        ["src/prymsearch/_kernel.pyx"],
        language="c++",
        extra_compile_args=["-O2", "-std=c++11"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions())
