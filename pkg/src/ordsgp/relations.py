"""Green's relations, starred relations, ordered idempotents and inverses."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    PredicateResult,
    SubsetMask,
    _above,
    _close,
    _prod,
    _sas,
    bits_iter,
    power_profile,
)


class Partition:
    """Equivalence classes over the carrier, with canonical class ids.

    Class ids follow first occurrence, so the class containing element 0 is
    class 0 and ids increase with each class's smallest member.
    """

    __slots__ = ("n", "class_of", "classes")

    def __init__(self, n, labels):
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        relabel = {}
        class_of = []
        for x in range(n):
            lab = labels[x]
            if lab not in relabel:
                relabel[lab] = len(relabel)
            class_of.append(relabel[lab])
        masks = [0] * len(relabel)
        for x, c in enumerate(class_of):
            masks[c] |= 1 << x
        self.n = n
        self.class_of = tuple(class_of)
        self.classes = tuple(masks)

    @classmethod
    def singletons(cls, n):
        return cls(n, tuple(range(n)))

    @classmethod
    def one_class(cls, n):
        return cls(n, (0,) * n)

    @property
    def num_classes(self):
        return len(self.classes)

    def same(self, a, b):
        return self.class_of[a] == self.class_of[b]

    def mask_of(self, a):
        return self.classes[self.class_of[a]]

    def refines(self, other):
        """True iff every class of self sits inside one class of other."""
        return all(
            c & ~other.classes[other.class_of[(c & -c).bit_length() - 1]] == 0
            for c in self.classes
        )

    def meet(self, other):
        return Partition(self.n, tuple(zip(self.class_of, other.class_of)))

    def to_lists(self):
        return [list(bits_iter(c)) for c in self.classes]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.class_of == other.class_of

    def __hash__(self):
        return hash(self.class_of)

    def __repr__(self):
        return f"Partition({self.to_lists()})"


GREEN_KINDS = ("L", "R", "J", "H")


def _ideal_mask(S, a, kind):
    bit = 1 << a
    if kind == "L":
        return _close(S, bit | _prod(S, S.full, bit))
    if kind == "R":
        return _close(S, bit | _prod(S, bit, S.full))
    sa = _prod(S, S.full, bit)
    as_ = _prod(S, bit, S.full)
    return _close(S, bit | sa | as_ | _prod(S, sa, S.full))


def green(S, kind):
    """Green's relation L, R, J (equal principal ideals) or H = L meet R."""
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown Green relation {kind!r}")

    def build():
        if kind == "H":
            return green(S, "L").meet(green(S, "R"))
        return Partition(S.order, tuple(_ideal_mask(S, a, kind) for a in S.elements()))

    return S.cached(("green", kind), build)


def ordered_idempotents(S):
    """All e with e <= e*e."""
    def build():
        bits = 0
        for e in S.elements():
            if S.leq[e][S.table[e][e]]:
                bits |= 1 << e
        return SubsetMask(S.order, bits)

    return S.cached(("E",), build)


def _inverses_bits(S, a):
    def build():
        bits = 0
        table = S.table
        for b in S.elements():
            if S.leq[a][table[table[a][b]][a]] and S.leq[b][table[table[b][a]][b]]:
                bits |= 1 << b
        return bits

    return S.cached(("V", a), build)


def ordered_inverses(S, a):
    """V(a) = {b : a <= a*b*a and b <= b*a*b}."""
    return SubsetMask(S.order, _inverses_bits(S, a))


@dataclass(frozen=True)
class RegularityProfile:
    """Per-element regularity flags and smallest regular powers.

    ``witness[a]`` is the least x with a^m <= a^m * x * a^m at
    m = ``smallest_regular_power[a]``.  Finiteness guarantees the power
    exists: some power is a multiplicative idempotent, hence regular.
    """

    regular: tuple
    completely_regular: tuple
    intra_regular: tuple
    smallest_regular_power: tuple
    witness: tuple

    def regular_bits(self):
        return sum(1 << a for a, r in enumerate(self.regular) if r)


def _regular_value(S, v):
    """First x with v <= v*x*v, or None."""
    table = S.table
    for x in S.elements():
        if S.leq[v][table[table[v][x]][v]]:
            return x
    return None


def regularity_profile(S):
    def build():
        regular, completely, intra, smallest, witness = [], [], [], [], []
        table = S.table
        for a in S.elements():
            regular.append(_regular_value(S, a) is not None)
            a2 = table[a][a]
            completely.append(_above(S, a, _prod(S, _prod(S, 1 << a2, S.full), 1 << a2)))
            intra.append(_above(S, a, _sas(S, a2)))
            for m, v in power_profile(S, a).exponents():
                x = _regular_value(S, v)
                if x is not None:
                    smallest.append(m)
                    witness.append(x)
                    break
            else:
                raise AssertionError(f"element {a} has no regular power")
        return RegularityProfile(
            tuple(regular), tuple(completely), tuple(intra), tuple(smallest), tuple(witness)
        )

    return S.cached(("regprofile",), build)


def smallest_regular_power(S, a):
    return regularity_profile(S).smallest_regular_power[a]


def regular_power_value(S, a):
    """a^m for the smallest m making a^m regular."""
    return power_profile(S, a).value(smallest_regular_power(S, a))


def starred(S, kind):
    """Starred relation: compare smallest regular powers under Green's relation.

    a ~ b iff a^m and b^n are Green-related, where m and n are the least
    exponents with a^m and b^n regular; H* is the meet of L* and R*.
    """
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown starred relation {kind!r}")

    def build():
        if kind == "H":
            return starred(S, "L").meet(starred(S, "R"))
        base = green(S, kind)
        return Partition(
            S.order, tuple(base.class_of[regular_power_value(S, a)] for a in S.elements())
        )

    return S.cached(("starred", kind), build)


def is_rho_unique(S, partition, subset):
    """All members of subset fall in a single class of the partition."""
    members = list(S.subset(subset))
    for i in range(1, len(members)):
        if not partition.same(members[0], members[i]):
            return PredicateResult(
                False, counterexample={"pair": (members[0], members[i])}
            )
    return PredicateResult(True, witnesses=({"members": members},))
