"""Builds the compiled extension with the pybind11 setuptools helpers.

The CMake build remains the canonical path for the CLI and the test
suites; this exists so the Python package installs with plain pip.
"""

import glob
import os
import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    env = os.environ.get("EIGEN3_INCLUDE_DIR")
    if env:
        return env
    try:
        out = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True, text=True, check=True,
        ).stdout.strip()
        if out.startswith("-I"):
            return out.split()[0][2:]
    except (OSError, subprocess.CalledProcessError):
        pass
    return "/usr/include/eigen3"


ext = Pybind11Extension(
    "infoconv._core",
    sorted(glob.glob("src/*.cpp")) + ["bindings/pybind_module.cpp"],
    include_dirs=["include", eigen_include()],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
