"""Build hook for the optional compiled kernel.

A plain ``pip install`` works without Cython or a C compiler; the package
then runs on the pure-Python kernels. When Cython is importable the
extension is compiled and picked up automatically at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "doptsnf.kernels._speedups",
                ["src/doptsnf/kernels/_speedups.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
