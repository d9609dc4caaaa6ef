import os

from setuptools import Extension, setup

# The compiled kernel is an optional fast path; the package falls back to the
# pure Python implementation in abelcorr._kernels.pure when it is absent.
ext_modules = []
if os.environ.get("ABELCORR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "abelcorr._kernels._core",
            sources=["src/abelcorr/_kernels/_core.pyx"],
            extra_compile_args=["-O3"],
        )
        ext.optional = True
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
