"""Build script.

The package is pure Python.  If Cython is available, the finite-field
matrix kernel is additionally compiled to `hypermono.algebra._fqcore`;
`hypermono.algebra.fq` falls back to the pure-Python twin when the
compiled module is missing, so failure to build the extension is never
fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hypermono/algebra/_fqcore.pyx"],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"hypermono: skipping Cython kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
