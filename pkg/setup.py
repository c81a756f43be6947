from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ads2dirac._kernels._impl_cy",
                ["src/ads2dirac/_kernels/_impl_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # pure-Python install; the package falls back to ads2dirac._kernels._impl_py
    ext_modules = []

setup(ext_modules=ext_modules)
