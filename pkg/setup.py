import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rendezvous.engine._speedups",
                ["src/rendezvous/engine/_speedups.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # pure-Python install; the engine falls back to the interpreted kernels
    ext_modules = []

setup(ext_modules=ext_modules)
