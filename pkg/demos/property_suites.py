"""
Running the property suites
===========================

Every structural fact the package relies on is packaged as a named
check with an explicit coverage regime.  The same battery backs the
test suite and the `spinor-forge props` subcommand; here it runs
in-process for two sizes.
"""

from spinor_forge.props import run_suites

for n in (2, 5):
    print(f"--- n = {n} ---")
    for result in run_suites(n):
        status = "ok  " if result.ok else "FAIL"
        print(f"{status} {result.check}: {result.detail}")
    print()
