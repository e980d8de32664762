from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("thueplane._kernels", ["src/thueplane/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # The package works without the compiled kernel; a pure-Python
    # implementation is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
