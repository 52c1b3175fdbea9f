import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Drives the CMake build and drops the _core module into the package."""

    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        out_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={os.environ.get('QRKG_BUILD_TYPE', 'Release')}",
            "-DQRKG_BUILD_PYTHON=ON",
            "-DQRKG_BUILD_TESTS=OFF",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
        ]
        subprocess.run(["cmake", "-S", str(source_dir), "-B", str(build_dir)] + cmake_args,
                       check=True)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
                       check=True)


setup(
    ext_modules=[CMakeExtension("qrkg._core")],
    cmdclass={"build_ext": CMakeBuild},
)
