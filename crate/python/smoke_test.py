#!/usr/bin/env python3
"""Build the kgraphkit_py extension module and exercise it end to end."""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

LOOP = """\
rank 1
vertex v
edge f color=0 range=v source=v
"""

TWO_PIECES = """\
rank 1
vertex v
vertex w
"""


def build_module(workdir: Path) -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "kgraphkit-py"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "debug" / "libkgraphkit_py.so"
    if not built.exists():  # macOS names the artifact differently
        built = ROOT / "target" / "debug" / "libkgraphkit_py.dylib"
    target = workdir / "kgraphkit_py.so"
    shutil.copyfile(built, target)
    return target


def main() -> int:
    workdir = Path(tempfile.mkdtemp(prefix="kgraphkit-py-"))
    build_module(workdir)
    sys.path.insert(0, str(workdir))
    import kgraphkit_py

    assert kgraphkit_py.shape(LOOP) == (1, 1, 1), kgraphkit_py.shape(LOOP)
    assert kgraphkit_py.per(LOOP) == [[1]], kgraphkit_py.per(LOOP)
    assert kgraphkit_py.verdict(LOOP) == "periodic", kgraphkit_py.verdict(LOOP)
    assert kgraphkit_py.summand_count(LOOP) == 1
    assert kgraphkit_py.summand_count(TWO_PIECES) == 2

    try:
        kgraphkit_py.shape("rank 1\nedge f color=0 range=v source=v\n")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid graph was accepted")

    print("python smoke test: PASS")
    return 0


if __name__ == "__main__":
    sys.exit(main())
