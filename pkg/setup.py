from setuptools import setup, Extension

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in hampoly._pykernels when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hampoly._ckernels", ["src/hampoly/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
