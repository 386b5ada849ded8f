#!/usr/bin/env python3
"""Smoke test for the jacobi_stirling_py extension module.

Builds the cdylib with cargo if needed, loads it, and checks a handful of
known values end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def ensure_module():
    """Build the extension and expose it under its importable name."""
    lib = ROOT / "target" / "release" / "libjacobi_stirling_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "--release", "-p", "jacobi-stirling-python"],
            cwd=ROOT,
            check=True,
        )
    staging = ROOT / "target" / "python"
    staging.mkdir(parents=True, exist_ok=True)
    dest = staging / "jacobi_stirling_py.so"
    if not dest.exists() or lib.stat().st_mtime > dest.stat().st_mtime:
        shutil.copy2(lib, dest)
    sys.path.insert(0, str(staging))


def main():
    ensure_module()
    import jacobi_stirling_py as js

    # triangle cells
    rows = js.js_second(4)
    assert rows[3][2] == [5, 3], rows[3][2]
    assert rows[4][2] == [21, 24, 7], rows[4][2]
    assert js.js_first(3)[3][2] == [-5, -3]
    assert js.triangle("LS", 3)[3][2] == 8
    assert js.triangle("V", 4)[4][2] == 966
    assert js.triangle("v", 4)[4][1] == -12916

    # coefficient families and the closed form
    assert js.coefficients("a", 4, 2) == [21, 24, 7]
    assert js.coefficients("b", 3, 2) == [5, 3]
    assert js.coefficients("d", 4, 2) == [4, 10, 7]
    assert js.explicit_js(4, 2) == [21, 24, 7]
    assert js.eval_js(4, 2, -1) == 4
    assert js.rebase([21, 24, 7], 1) == [4, 10, 7]

    # statistics and model counts
    assert js.records([5, 7, 4, 8, 6, 2, 3, 1, 9]) == (4, 3)
    assert js.signed_partition_counts(3, 2) == [5, 3]
    assert js.d_model_counts(3, 2) == [2, 3]
    assert js.quasiperm_pair_count(3, 2, 1) == 3
    assert js.partition_triple_count(4, 2, 0) == 21
    assert js.first_kind_counts(3, 2) == [5, 3]
    assert js.u_pair_count(4, 2) == 49
    assert js.odd_partition_count(2, 1) == 10
    assert js.riordan_complex_count(2, 1) == 10

    # correspondences
    cells = js.phi([[1, 4, 6], [2, 5], [3]], 6)
    assert cells == [(4, 1), (5, 2), (6, 4)], cells
    assert js.phi_inverse(cells, 6) == [[1, 4, 6], [2, 5], [3]]
    p1, p2, p3 = js.signed_to_triple(4, [3], [[1, -1, -3, 4], [2, -2, -4]])
    assert p1 == [[1, 3, 4], [2]], p1
    assert p2 == [[1, 3], [2, 4]], p2
    assert p3 == [[1], [2], [3], [4]], p3

    # full verification at a small size
    results = js.verify("all", 4)
    failed = [name for name, passed, _ in results if not passed]
    assert not failed, failed
    assert len(results) >= 20

    bad = False
    try:
        js.triangle("QQ", 3)
    except ValueError:
        bad = True
    assert bad, "unknown kinds must raise ValueError"

    print(f"smoke test passed: {len(results)} verification checks, "
          f"module version {js.__version__}")


if __name__ == "__main__":
    main()
