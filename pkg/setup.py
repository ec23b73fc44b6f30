"""Build script for the optional compiled kernel.

The package works without the extension; distribution code falls back to a
NumPy implementation of the same kernels when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "focksplit._kernels",
                ["src/focksplit/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
