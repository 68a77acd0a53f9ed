#!/usr/bin/env python3
"""Smoke test for the nuchi_py extension module.

Builds the cdylib with cargo if needed, loads it, and exercises the main
entry points: realizing groups, building nu(G) and chi(G), and a filtered
verification run.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    lib = ROOT / "target" / "release" / "libnuchi_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "--release", "-p", "nuchi-py"],
            cwd=ROOT,
            check=True,
        )
    tmp = Path(tempfile.mkdtemp(prefix="nuchi_py_"))
    shutil.copy2(lib, tmp / "nuchi_py.so")
    sys.path.insert(0, str(tmp))
    import nuchi_py

    return nuchi_py


def main():
    nuchi = load_module()

    entries = nuchi.corpus_entries()
    names = [name for name, _, _ in entries]
    assert "z2xz2xz2" in names and "m27" in names, names
    print(f"corpus: {len(entries)} entries")

    g = nuchi.Group.builtin("z2xz2xz2")
    assert g.order() == 8 and g.is_abelian()
    chi = g.build_chi()
    assert chi.chi_order == 1024, chi
    assert chi.d_fingerprint()["abelian_invariants"] == [2, 2, 2, 2], chi.d_fingerprint()
    assert chi.chi_fingerprint()["nilpotency_class"] == 3
    print(f"chi(Z2^3): {chi!r}")

    nu = g.build_nu()
    assert nu.nu_order == 2**15 and nu.tensor_order == 2**9, nu
    print(f"nu(Z2^3): {nu!r}")

    m27 = nuchi.Group.builtin("m27")
    assert m27.is_powerful(3) and m27.is_potent(3)
    assert m27.exponent() == 9

    q8 = nuchi.Group.from_presentation(
        "name: q8\norder: 8\ngens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a"
    )
    assert not q8.is_powerful(2)
    print(f"{q8!r}: powerful(2) = False as expected")

    report = json.loads(nuchi.verify(filter="abelian and p=3 and not slow"))
    assert report["schema"] == 1
    groups = [e["group"] for e in report["entries"]]
    assert "z9xz3" in groups, groups
    bad = [
        (e["group"], c["check_id"])
        for e in report["entries"]
        for c in e["checks"]
        if c["verdict"] == "fail"
    ]
    assert not bad, bad
    print(f"verify(abelian, p=3): {len(report['entries'])} entries, all checks pass")
    print("smoke test OK")


if __name__ == "__main__":
    main()
