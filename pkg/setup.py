"""Build script: compiles the optional mod-p elimination kernel.

The package works without the extension (a pure-Python fallback is
selected at import time), so the extension is marked optional and a
failed compile does not abort installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "gmalie._modp",
                ["src/gmalie/_modp.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
