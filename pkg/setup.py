"""Build the optional compiled routing kernel.

The package works without it (a pure-Python twin is selected at import);
building the extension just makes the exact search much faster.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/immkit/_routing.pyx"],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
