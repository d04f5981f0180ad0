# CMake-driving build_ext: the extension is produced by the same CMake tree
# as the CLI and tests, then dropped into the wheel's package directory.

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSKBUILD=ON",
        ]
        try:
            import pybind11
            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        source_dir = Path(__file__).resolve().parent
        subprocess.run(["cmake", str(source_dir), *cmake_args],
                       cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_graphvn",
             f"-j{os.cpu_count() or 2}"],
            cwd=build_dir, check=True)


setup(
    ext_modules=[CMakeExtension("graphvn._graphvn")],
    cmdclass={"build_ext": CMakeBuild},
)
