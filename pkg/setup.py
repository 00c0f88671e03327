"""Build script.

The finite-ring sweep kernels have an optional Cython implementation.  When
Cython (and a C compiler) are available the extension is built; otherwise the
package installs anyway and falls back to the pure-Python kernel at import
time (see radclean.oracle).
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("radclean._sweeps_c", ["src/radclean/_sweeps_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
