# This code is part of piqec.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Builds the _core extension through the project's CMake configuration."""

import os
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = os.path.abspath(os.path.dirname(__file__))
        # get_ext_fullpath ends in piqec/_core.<abi>.so; the package directory
        # above it is where CMake must stage the module.
        stage_dir = os.path.dirname(os.path.abspath(self.get_ext_fullpath(ext.name)))
        build_temp = os.path.abspath(self.build_temp)
        os.makedirs(build_temp, exist_ok=True)
        configure = [
            "cmake",
            "-S", source_dir,
            "-B", build_temp,
            "-DCMAKE_BUILD_TYPE=Release",
            "-DPIQEC_BUILD_TESTS=OFF",
            "-DPIQEC_BUILD_CLI=OFF",
            f"-DPIQEC_PYTHON_STAGE_DIR={stage_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, check=True)
        build = ["cmake", "--build", build_temp, "--target", "_core",
                 "--parallel"]
        subprocess.run(build, check=True)


setup(
    ext_modules=[CMakeExtension("piqec._core")],
    cmdclass={"build_ext": CMakeBuild},
)
