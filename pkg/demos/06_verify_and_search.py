# Suite verification over the catalog and constrained model search.
#
# The equivalence suites encode classical characterization theorems for
# pi-t-simple and pi-inverse ordered semigroups; on finite models every
# battery must agree internally, so any DISCREPANCY verdict indicates an
# implementation bug.  This is the project's own test oracle.

from ordsgp import THEOREM_IDS, lz2, run_suite, search_model, structure_key, verify

# %% One structure, one suite: LZ2 fails the right pi-inverse gate of thm8
# while condition (1) holds and (4) fails, showing the gate is necessary.
report = verify(lz2(), "thm8")
print("thm8 on LZ2:", report.verdict)
for cond in report.conditions:
    print(f"  condition {cond['index']}: {cond['holds']}")

# %% Every suite over every structure of order <= 2: all verdicts are
# either 'equivalent' or 'hypothesis_not_met'.
suite = run_suite("all", max_order=2)
print("\norder <= 2 totals:", suite.totals)
print("suites:", list(THEOREM_IDS))

# %% Model search: the earliest left simple structure that is not right
# simple is the two-element left-zero semigroup.
res = search_model(satisfy=["left-simple"], violate=["right-simple"], max_order=2)
print("\nleft-simple, not right-simple:", structure_key(res.structure))

# %% Asymmetry of the pi-inverse notions: the right-zero pair is right
# pi-inverse but not left pi-inverse.
res = search_model(satisfy=["right-pi-inverse"], violate=["left-pi-inverse"], max_order=3)
print("right-pi-inverse, not left-pi-inverse:", structure_key(res.structure))

# %% Exhaustion is a definite answer too: left simple and right simple
# together force simplicity on finite models.
res = search_model(satisfy=["left-simple", "right-simple"], violate=["simple"], max_order=3)
print("left+right simple but not simple:", "none up to order 3" if not res.found else res)
