"""Finite ordered semigroups: carrier, validation, closures, ideals, powers.

An ordered semigroup here is an associative multiplication table on the
carrier {0, ..., n-1} together with a partial order that multiplication
preserves on both sides.  Carriers are dense 0-based integers and subsets
are int bitmasks, so every set operation is a couple of machine words.
"""

from __future__ import annotations

from dataclasses import dataclass


def bits_iter(mask):
    """Yield the set bit positions of an int mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SubsetMask:
    """Subset of a fixed carrier {0, ..., n-1}, backed by an int bitmask."""

    __slots__ = ("n", "bits")

    def __init__(self, n, bits=0):
        if bits < 0 or bits >> n:
            raise ValueError(f"bitmask {bits:#x} does not fit a carrier of size {n}")
        self.n = n
        self.bits = bits

    @classmethod
    def from_elements(cls, n, elements):
        bits = 0
        for x in elements:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside carrier of size {n}")
            bits |= 1 << x
        return cls(n, bits)

    def elements(self):
        return list(bits_iter(self.bits))

    def _match(self, other):
        if not isinstance(other, SubsetMask) or other.n != self.n:
            raise ValueError("subset masks refer to different carriers")
        return other

    def __contains__(self, x):
        return 0 <= x < self.n and bool(self.bits >> x & 1)

    def __iter__(self):
        return bits_iter(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __or__(self, other):
        return SubsetMask(self.n, self.bits | self._match(other).bits)

    def __and__(self, other):
        return SubsetMask(self.n, self.bits & self._match(other).bits)

    def __sub__(self, other):
        return SubsetMask(self.n, self.bits & ~self._match(other).bits)

    def issubset(self, other):
        return not (self.bits & ~self._match(other).bits)

    def __eq__(self, other):
        return isinstance(other, SubsetMask) and (self.n, self.bits) == (other.n, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits))

    def __repr__(self):
        return f"SubsetMask({self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the witness tuple that breaks it."""

    axiom: str
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()

    def __post_init__(self):
        assert self.ok == (not self.violations)


@dataclass(frozen=True)
class PredicateResult:
    """Outcome of a decidable condition: a verdict plus evidence.

    ``witnesses`` holds one dict per universally quantified input with the
    satisfying exponents / mediating elements; ``counterexample`` names the
    first failing input in lexicographic order.  ``data`` carries structured
    evidence such as a kernel, a subsemigroup, or a decomposition partition.
    """

    holds: bool
    witnesses: tuple = ()
    counterexample: dict | None = None
    data: dict | None = None

    def __post_init__(self):
        assert self.holds == (self.counterexample is None)

    def __bool__(self):
        return self.holds

    def to_dict(self):
        out = {"holds": self.holds}
        if self.witnesses:
            out["witness"] = self.witnesses[0]
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.data is not None:
            out["data"] = self.data
        return out


def _normalize(table, leq):
    """Shape- and range-check raw input; returns canonical tuples."""
    tab = tuple(tuple(row) for row in table)
    n = len(tab)
    if n < 1:
        raise ValueError("empty carrier: need at least one element")
    for i, row in enumerate(tab):
        if len(row) != n:
            raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"table entry ({i},{j}) = {v!r} outside carrier 0..{n - 1}")
    lm = tuple(tuple(bool(v) for v in row) for row in leq)
    if len(lm) != n or any(len(row) != n for row in lm):
        raise ValueError(f"order matrix is not {n}x{n}")
    return tab, lm


def _violations(tab, lm, first_only=False):
    """All broken axioms with witnesses, in a fixed deterministic order."""
    n = len(tab)
    rng = range(n)
    found = []

    def emit(axiom, witness):
        found.append(Violation(axiom, witness))
        return first_only

    for a in rng:
        for b in rng:
            ab = tab[a][b]
            for c in rng:
                if tab[ab][c] != tab[a][tab[b][c]]:
                    if emit("associativity", (a, b, c)):
                        return found
    for a in rng:
        if not lm[a][a]:
            if emit("reflexivity", (a,)):
                return found
    for a in rng:
        for b in rng:
            if a != b and lm[a][b] and lm[b][a]:
                if emit("antisymmetry", (a, b)):
                    return found
    for a in rng:
        for b in rng:
            if lm[a][b]:
                for c in rng:
                    if lm[b][c] and not lm[a][c]:
                        if emit("transitivity", (a, b, c)):
                            return found
    for a in rng:
        for b in rng:
            if lm[a][b] and a != b:
                for x in rng:
                    if not lm[tab[x][a]][tab[x][b]]:
                        if emit("left-compatibility", (a, b, x)):
                            return found
                    if not lm[tab[a][x]][tab[b][x]]:
                        if emit("right-compatibility", (a, b, x)):
                            return found
    return found


class OrderedSemigroup:
    """Validated finite ordered semigroup.

    ``table[i][j]`` is the product i*j and ``leq[i][j]`` means i <= j.
    Instances are immutable; derived data (ideals, relations, profiles)
    is cached per instance, so sharing across threads is safe once built.
    """

    __slots__ = ("order", "table", "leq", "above", "below", "full", "_cache")

    def __init__(self, table, leq):
        tab, lm = _normalize(table, leq)
        bad = _violations(tab, lm, first_only=True)
        if bad:
            v = bad[0]
            raise ValueError(f"not an ordered semigroup: {v.axiom} fails at {v.witness}")
        n = len(tab)
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", tab)
        object.__setattr__(self, "leq", lm)
        above = tuple(sum(1 << j for j in range(n) if lm[i][j]) for i in range(n))
        below = tuple(sum(1 << i for i in range(n) if lm[i][j]) for j in range(n))
        object.__setattr__(self, "above", above)
        object.__setattr__(self, "below", below)
        object.__setattr__(self, "full", (1 << n) - 1)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("OrderedSemigroup is immutable")

    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.table[a][b]

    def le(self, a, b):
        return self.leq[a][b]

    def pow(self, a, m):
        """a**m for m >= 1 under the semigroup product."""
        v = a
        for _ in range(m - 1):
            v = self.table[v][a]
        return v

    def subset(self, elements=()):
        if isinstance(elements, SubsetMask):
            if elements.n != self.order:
                raise ValueError("subset mask refers to a different carrier")
            return elements
        return SubsetMask.from_elements(self.order, elements)

    def cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def __eq__(self, other):
        return (
            isinstance(other, OrderedSemigroup)
            and self.table == other.table
            and self.leq == other.leq
        )

    def __hash__(self):
        return hash((self.table, self.leq))

    def __repr__(self):
        return f"OrderedSemigroup({structure_key(self)!r})"

    def to_dict(self):
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "leq": [list(row) for row in self.leq],
        }


def validate(table, leq):
    """Check all ordered-semigroup axioms.

    Returns a validated :class:`OrderedSemigroup` when every axiom holds,
    otherwise a :class:`ValidationReport` listing every violated axiom with
    a witness.  Malformed input (wrong shape, out-of-range entry) raises
    ``ValueError`` instead of being reported.
    """
    tab, lm = _normalize(table, leq)
    violations = tuple(_violations(tab, lm))
    if violations:
        return ValidationReport(False, violations)
    return OrderedSemigroup(tab, lm)


def structure_key(S):
    """Compact deterministic identifier of the exact table and order."""
    t = "".join(str(v) for row in S.table for v in row)
    o = "".join("1" if v else "0" for row in S.leq for v in row)
    return f"n{S.order}:{t}:{o}"


def structure_from_key(key):
    """Rebuild a structure from its :func:`structure_key` string."""
    try:
        head, t, o = key.split(":")
        n = int(head.removeprefix("n"))
        table = [[int(t[i * n + j]) for j in range(n)] for i in range(n)]
        leq = [[o[i * n + j] == "1" for j in range(n)] for i in range(n)]
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed structure key {key!r}") from exc
    return OrderedSemigroup(table, leq)


def structure_to_dict(S):
    return S.to_dict()


def structure_from_dict(d):
    """Build a structure from the JSON dict format.

    The format is ``{"order": n, "table": [[...]], "leq": [[bool, ...], ...]}``
    with row i, column j giving i*j and i <= j respectively.  Returns the
    validated structure or a :class:`ValidationReport`; raises ``ValueError``
    on malformed payloads.
    """
    if not isinstance(d, dict):
        raise ValueError("structure payload must be a JSON object")
    missing = {"order", "table", "leq"} - set(d)
    if missing:
        raise ValueError(f"structure payload missing keys: {sorted(missing)}")
    table, leq = d["table"], d["leq"]
    if not isinstance(table, (list, tuple)) or not isinstance(leq, (list, tuple)):
        raise ValueError("table and leq must be arrays")
    if d["order"] != len(table):
        raise ValueError(f"order field {d['order']!r} disagrees with table size {len(table)}")
    return validate(table, leq)


# -- closure and ideal calculus ------------------------------------------

def _close(S, bits):
    out = 0
    for a in bits_iter(bits):
        out |= S.below[a]
    return out


def _prod(S, abits, bbits):
    out = 0
    table = S.table
    for a in bits_iter(abits):
        row = table[a]
        for b in bits_iter(bbits):
            out |= 1 << row[b]
    return out


def _above(S, x, bits):
    """True iff x lies under some member of bits, i.e. x in (bits]."""
    return bool(bits & S.above[x])


def _sa(S, a):
    """(Sa] as a bitmask, cached."""
    return S.cached(("Sa", a), lambda: _close(S, _prod(S, S.full, 1 << a)))


def _as(S, a):
    """(aS] as a bitmask, cached."""
    return S.cached(("aS", a), lambda: _close(S, _prod(S, 1 << a, S.full)))


def _sas(S, a):
    """(SaS] as a bitmask, cached."""
    return S.cached(("SaS", a), lambda: _close(S, _prod(S, _prod(S, S.full, 1 << a), S.full)))


def downward_closure(S, A):
    """(A]: every element lying below some member of A."""
    A = S.subset(A)
    return SubsetMask(S.order, _close(S, A.bits))


def subset_product(S, A, B):
    """Elementwise product set {a*b : a in A, b in B}, not downward-closed."""
    A, B = S.subset(A), S.subset(B)
    return SubsetMask(S.order, _prod(S, A.bits, B.bits))


PRINCIPAL_KINDS = ("left", "right", "two_sided", "bi")


def principal_ideal(S, a, kind):
    """Principal left/right/two-sided/bi-ideal generated by a."""
    bit = 1 << a
    if kind == "left":
        bits = bit | _prod(S, S.full, bit)
    elif kind == "right":
        bits = bit | _prod(S, bit, S.full)
    elif kind == "two_sided":
        sa = _prod(S, S.full, bit)
        as_ = _prod(S, bit, S.full)
        bits = bit | sa | as_ | _prod(S, sa, S.full)
    elif kind == "bi":
        bits = bit | _prod(S, _prod(S, bit, S.full), bit)
    else:
        raise ValueError(f"unknown ideal kind {kind!r}")
    return SubsetMask(S.order, _close(S, bits))


@dataclass(frozen=True)
class PowerProfile:
    """Eventual cycle of the power sequence a, a^2, a^3, ...

    ``powers`` lists the pairwise distinct values a^1 .. a^(index+period-1);
    a^(index+period) equals a^index, so these values exhaust every power.
    """

    element: int
    index: int
    period: int
    powers: tuple

    @property
    def max_exponent(self):
        return self.index + self.period - 1

    def value(self, m):
        """Value of a^m for any exponent m >= 1."""
        if m <= len(self.powers):
            return self.powers[m - 1]
        return self.powers[self.index - 1 + (m - self.index) % self.period]

    def exponents(self):
        """(m, a^m) for each distinct power, in increasing exponent order."""
        return tuple(enumerate(self.powers, start=1))


def power_profile(S, a):
    """Index, period, and distinct values of the power sequence of a."""
    def build():
        seen = {a: 1}
        powers = [a]
        v = a
        while True:
            v = S.table[v][a]
            if v in seen:
                index = seen[v]
                period = len(powers) + 1 - index
                return PowerProfile(a, index, period, tuple(powers))
            seen[v] = len(powers) + 1
            powers.append(v)

    return S.cached(("pp", a), build)


def joint_power_exponents(S, specs):
    """Yield (m, values) for m = 1, 2, ... until the value tuple repeats.

    ``specs`` is a sequence of (element, stride, offset) triples; entry k of
    the tuple at step m is element_k ** (stride_k * m + offset_k).  Each step
    multiplies entry k by the fixed factor element_k ** stride_k, so the
    tuple sequence is the orbit of a deterministic map and the first repeat
    starts an exact cycle.  A quantifier over a shared exponent m is
    therefore decided by scanning just the yielded steps.
    """
    steps = tuple(S.pow(x, c) for x, c, _ in specs)
    cur = tuple(S.pow(x, c + d) for x, c, d in specs)
    seen = set()
    m = 1
    while cur not in seen:
        seen.add(cur)
        yield m, cur
        cur = tuple(S.table[v][step] for v, step in zip(cur, steps))
        m += 1


def restrict(S, bits):
    """Substructure induced on a product-closed subset.

    Returns (sub, elems) where elems maps new labels (ascending) back to the
    original carrier.  Raises ``ValueError`` when the subset is empty or not
    closed under the product.
    """
    elems = tuple(bits_iter(bits))
    if not elems:
        raise ValueError("cannot restrict to the empty subset")
    pos = {x: i for i, x in enumerate(elems)}
    try:
        table = [[pos[S.table[a][b]] for b in elems] for a in elems]
    except KeyError as exc:
        raise ValueError(f"subset not closed under product: hit {exc.args[0]}") from None
    leq = [[S.leq[a][b] for b in elems] for a in elems]
    return OrderedSemigroup(table, leq), elems


# -- named fixtures -------------------------------------------------------

def _discrete(n):
    return [[i == j for j in range(n)] for i in range(n)]


def t1():
    """One-element semigroup."""
    return OrderedSemigroup([[0]], _discrete(1))


def lz2():
    """Two-element left-zero semigroup (x*y = x), discrete order."""
    return OrderedSemigroup([[0, 0], [1, 1]], _discrete(2))


def rz2():
    """Two-element right-zero semigroup (x*y = y), discrete order."""
    return OrderedSemigroup([[0, 1], [0, 1]], _discrete(2))


def sl2():
    """Two-element chain semilattice (x*y = min, 0 <= 1)."""
    return OrderedSemigroup([[0, 0], [0, 1]], [[True, True], [False, True]])


def n2():
    """Two-element null semigroup (all products 0), discrete order."""
    return OrderedSemigroup([[0, 0], [0, 0]], _discrete(2))


FIXTURES = {"T1": t1, "LZ2": lz2, "RZ2": rz2, "SL2": sl2, "N2": n2}
