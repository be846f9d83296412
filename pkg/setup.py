import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("RICHCLUB_SKIP_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "richclub._kernels",
        ["src/richclub/_kernels.pyx"],
        language="c++",
        extra_compile_args=["-O3", "-std=c++14"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
