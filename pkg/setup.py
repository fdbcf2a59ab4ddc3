import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off: the kd-tree kernels must produce bit-identical squared
# distances to the numpy fallback and the brute-force oracle; fused
# multiply-adds would round differently and break tie-order equivalence.
extensions = [
    Extension(
        "tailgeo.spatial._kdtree",
        ["src/tailgeo/spatial/_kdtree.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
