"""Build the optional compiled kernels.

The package is fully functional without the extension; _ckernels only
accelerates the brute-force scans.  If Cython or a C compiler is missing
the install degrades to the pure-Python kernels.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/farkas/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
