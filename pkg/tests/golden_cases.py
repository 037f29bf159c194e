"""Commands whose output is pinned under ``src/homkernel/golden``.

Run this file to regenerate the stored files after an intended change.
"""

import contextlib
import io

CASES = [
    ["example", "h2"],
    ["example", "a4"],
    ["example", "ut2"],
    ["example", "gl(2)"],
    ["example", "superspace-module(1,1)"],
    ["verify", "a4"],
    ["verify", "h2"],
    ["verify", "a4-broken", "--as", "hom-algebra"],
    ["derive-lie", "a4"],
    ["derive-lie", "ut2"],
    ["derive-lie", "gl(2)"],
    ["derive-lie", "superspace(1,1)"],
    ["center", "a4"],
    ["center", "ut2"],
    ["center", "triv-abelian(3)"],
    ["invariants", "a4"],
    ["invariants", "superspace-module(1,1)"],
    ["envelope", "triv-abelian(2)", "--max-degree", "2"],
    ["envelope", "a4", "--max-degree", "2"],
    ["biproduct", "gl(2)", "--max-degree", "2"],
]


def run_quiet(argv):
    from homkernel.cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    for case in CASES:
        code, _, err = run_quiet(case + ["--write-golden"])
        print(code, err.strip())
