from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "skillplan.solver._mckp",
                sources=["src/skillplan/solver/_mckp.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # The package still works without the compiled kernel; the solver
    # falls back to the pure-Python implementation at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
