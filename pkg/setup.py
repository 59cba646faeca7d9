from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rankloci._kernels", ["src/rankloci/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only, backend.py falls back to _pykernels.
    ext_modules = []

setup(ext_modules=ext_modules)
