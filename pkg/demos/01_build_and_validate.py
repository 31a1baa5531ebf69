# Building and validating finite ordered semigroups.
#
# A structure is an n x n multiplication table plus an n x n boolean order
# matrix; validate() either returns the structure or a report naming every
# broken axiom with a witness.

import json

from ordsgp import FIXTURES, ValidationReport, structure_key, validate

# %% The named fixtures: five two-element-or-smaller workhorses.
for name, build in FIXTURES.items():
    S = build()
    print(f"{name}: key={structure_key(S)} table={S.table}")

# %% A valid structure: the two-element chain semilattice (min, 0 <= 1).
S = validate([[0, 0], [0, 1]], [[True, True], [False, True]])
print("\nsemilattice validates:", structure_key(S))

# %% The left-zero table tolerates the chain order too: x*0 <= x*1 collapses
# to x <= x, and 0*x <= 1*x to 0 <= 1.
S = validate([[0, 0], [1, 1]], [[True, True], [False, True]])
print("left-zero with a chain order:", structure_key(S))

# %% A broken table: 0*0 = 1 makes (0*0)*1 = 0 but 0*(0*1) = 1.
report = validate([[1, 0], [0, 0]], [[True, False], [False, True]])
assert isinstance(report, ValidationReport)
print("\nnon-associative example:")
for v in report.violations:
    print(f"  {v.axiom} fails at {v.witness}")

# %% A broken order: the two-element group rejects 0 <= 1 because
# multiplying by 1 swaps the elements.
report = validate([[0, 1], [1, 0]], [[True, True], [False, True]])
print("\ngroup with a chain order:")
for v in report.violations:
    print(f"  {v.axiom} fails at {v.witness}")

# %% JSON round trip: the same dict format the CLI consumes and emits.
S = FIXTURES["N2"]()
payload = json.dumps(S.to_dict())
print("\nJSON form of N2:", payload)
