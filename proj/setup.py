"""Build shim: delegates the extension build to the project's CMake tree.

The canonical build system is CMake (it also builds the CLI and the C++
test suite); this file only teaches setuptools to drive it so that
``pip install -e . --no-build-isolation`` works.
"""

import pathlib
import shutil
import subprocess

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = pathlib.Path(__file__).resolve().parent
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_dir),
             "-DCMAKE_BUILD_TYPE=Release"],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_shlie",
             "--parallel"],
            check=True,
        )
        built = next((build_dir / "python" / "shlie").glob("_shlie.*.so"))
        dest = pathlib.Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built, dest)


setup(
    ext_modules=[CMakeExtension("shlie._shlie")],
    cmdclass={"build_ext": CMakeBuild},
)
