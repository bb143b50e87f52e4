from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ktiling._ckernels",
                ["src/ktiling/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython, or the .pyx failed to translate
    print(f"building without the compiled kernels: {exc}")

setup(ext_modules=ext_modules)
