# The closure and ideal calculus, Green's relations, and their starred
# refinements on the fixture structures.

from ordsgp import (
    downward_closure,
    green,
    lz2,
    n2,
    ordered_idempotents,
    ordered_inverses,
    power_profile,
    principal_ideal,
    regularity_profile,
    rz2,
    sl2,
    starred,
    subset_product,
)

# %% Downward closures: (A] collects everything under a member of A.
S = sl2()
print("SL2 ({1}] =", downward_closure(S, S.subset([1])).elements())
print("SL2 (S{0}] =", subset_product(S, S.subset([0, 1]), S.subset([0])).elements())

# %% Principal ideals: L(a) = (a u Sa], R(a) = (a u aS], and friends.
for fixture, name in ((lz2(), "LZ2"), (rz2(), "RZ2")):
    for a in fixture.elements():
        left = principal_ideal(fixture, a, "left").elements()
        right = principal_ideal(fixture, a, "right").elements()
        print(f"{name}: L({a})={left} R({a})={right}")

# %% Green's relations compare principal ideals; H refines L and R.
print("\nLZ2 green L:", green(lz2(), "L").to_lists())
print("RZ2 green L:", green(rz2(), "L").to_lists())
print("SL2 green H:", green(sl2(), "H").to_lists())

# %% Power profiles bound every exponent quantifier: the power sequence
# cycles, so its distinct values exhaust all powers.
N = n2()
prof = power_profile(N, 1)
print(f"\nN2 powers of 1: index={prof.index} period={prof.period} values={prof.powers}")

# %% Regularity: in N2 the generator itself is not regular but its square is.
reg = regularity_profile(N)
print("N2 smallest regular powers:", reg.smallest_regular_power)
print("N2 ordered idempotents:", ordered_idempotents(N).elements())
print("N2 inverses of 1:", ordered_inverses(N, 1).elements())
print("LZ2 inverses of 0:", ordered_inverses(lz2(), 0).elements())

# %% Starred relations act on smallest regular powers: N2 collapses to one
# L*-class because both elements power down to 0.
print("\nN2 starred L*:", starred(N, "L").to_lists())
print("RZ2 starred R*:", starred(rz2(), "R").to_lists())
