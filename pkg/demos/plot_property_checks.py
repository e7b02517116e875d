"""
Randomized property checks
==========================

The verification harness samples frames and points, evaluates each numerical
property and folds the per-sample slack into one report. The same seed gives
the same JSON on any machine and any thread count.
"""

import json

from proxframe.verify import run_suite

for name in ("firm_nonexpansive", "h_zero", "single_valued"):
    for rep in run_suite(name, seed=0, samples=100):
        flag = "PASS" if rep.passed else "FAIL"
        print(f"{flag}  {rep.name:28s} worst margin {rep.measured:+.2e} over {rep.samples} samples")

###############################################################################
# Reports serialize directly.

print(json.dumps(run_suite("h_zero", seed=0, samples=20)[0].to_dict(), indent=2))
