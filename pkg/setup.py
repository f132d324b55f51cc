"""Build script for the optional compiled pair-scan kernel.

The package is pure Python except for one hot loop (the exhaustive
interval-pair supremum search).  If Cython is unavailable the build
falls back to the numpy implementation selected at import time, so
the extension is best-effort: failures here must not block install.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sharpweights._kernels._scan_fast",
                ["src/sharpweights/_kernels/_scan_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
