"""Build the optional compiled enumeration kernel.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("gcstructures._kernels", ["src/gcstructures/_kernels.pyx"], extra_compile_args=["-O3"])],
        language_level=3,
        quiet=True,
    )
except ImportError:  # pragma: no cover - depends on the build host
    pass

setup(ext_modules=ext_modules)
