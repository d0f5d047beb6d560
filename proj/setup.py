"""Builds the pybind11 extension by driving the project's CMake tree."""

import shutil
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
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        out.parent.mkdir(parents=True, exist_ok=True)
        source = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "logres_py", "-j4"],
            cwd=build_dir,
            check=True,
        )
        built = sorted(build_dir.glob("_core.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core extension module")
        shutil.copy2(built[0], out)


setup(
    ext_modules=[CMakeExtension("logres._core")],
    cmdclass={"build_ext": CMakeBuild},
)
