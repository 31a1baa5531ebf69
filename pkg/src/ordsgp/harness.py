"""Equivalence suites, hypothesis gating, suite reports, and model search.

Each suite evaluates a battery of conditions on one structure.  For an
equivalence suite the verdict is ``equivalent`` when all condition truth
values agree, ``DISCREPANCY`` when they do not while the hypothesis holds,
and ``hypothesis_not_met`` otherwise.  Law and implication suites demand
that every condition hold once the hypothesis (antecedent) does.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .congruences import (
    cor_cpr_conditions,
    cor_hstar_conditions,
    semilattice_decomposition,
    theorem8_conditions,
)
from .core import OrderedSemigroup, structure_key
from .predicates import (
    PREDICATES,
    _conj,
    _pi_inverse_side_all_powers,
    left_pi_inverse_def,
    left_pi_t_simple_direct,
    lemma3_predicate,
    lemma7_predicate,
    lstar_unique_idempotent,
    named_predicate,
    pi_inverse_def,
    pi_t_simple_direct,
    right_pi_inverse_def,
    right_pi_t_simple_direct,
    structure_predicate,
    theorem2_conditions,
    theorem4_conditions,
    theorem5_conditions,
    theorem51_conditions,
    theorem6_condition,
)
from .enumeration import (
    EXHAUSTIVE_TABLE_CAP,
    enumerate_compatible_orders,
    enumerate_tables,
    sample_structures,
)

WORKERS_ENV = "ORDSGP_WORKERS"

VERDICT_EQUIVALENT = "equivalent"
VERDICT_HYPOTHESIS = "hypothesis_not_met"
VERDICT_DISCREPANCY = "DISCREPANCY"


def _suite_thm2(S):
    return list(enumerate(theorem2_conditions(S), start=1))


def _suite_thm4(S):
    return list(enumerate(theorem4_conditions(S), start=1))


def _diag_thm4(S):
    plain = [c.holds for c in theorem4_conditions(S)]
    complete = [c.holds for c in theorem4_conditions(S, complete_only=True)]
    return {"complete_reading_agrees": plain == complete}


def _suite_thm5(S):
    return list(enumerate(theorem5_conditions(S), start=1))


def _diag_thm5(S):
    default = [c.holds for c in theorem5_conditions(S)]
    strict = [c.holds for c in theorem5_conditions(S, all_powers=True)]
    return {"readings_agree": default == strict}


def _suite_thm6(S):
    return [(1, right_pi_inverse_def(S)), (2, theorem6_condition(S))]


def _diag_thm6(S):
    strict = _pi_inverse_side_all_powers(S, "left")
    return {"strict_reading_agrees": strict.holds == right_pi_inverse_def(S).holds}


def _suite_thm7_open(S):
    c1 = _conj(
        ("left_simple", structure_predicate(S, "left-simple")),
        ("pi_regular", structure_predicate(S, "pi-regular")),
    )
    return [(1, c1), (2, lstar_unique_idempotent(S))]


def _suite_thm8(S):
    return list(enumerate(theorem8_conditions(S), start=1))


def _diag_thm8(S):
    plain = theorem8_conditions(S)[2]
    complete = semilattice_decomposition(
        S,
        lambda sub: right_pi_t_simple_direct(sub).holds,
        cache_key="right-pi-t-simple",
        complete_only=True,
    )
    return {"complete_reading_agrees": plain.holds == complete.holds}


def _suite_thm51(S):
    return list(enumerate(theorem51_conditions(S), start=1))


def _suite_thm_wc(S):
    return [(1, left_pi_t_simple_direct(S))]


def _suite_lemma3(S):
    return [(1, lemma3_predicate(S))]


def _suite_lemma7(S):
    return [(1, lemma7_predicate(S))]


def _suite_cor1(S):
    t = theorem2_conditions(S)
    return [(1, t[7]), (2, t[4]), (3, t[3]), (4, t[5]), (5, t[6])]


def _suite_cor_pi_inverse(S):
    both = _conj(
        ("left_pi_inverse", left_pi_inverse_def(S)),
        ("right_pi_inverse", right_pi_inverse_def(S)),
    )
    return [(1, pi_inverse_def(S)), (2, both)]


def _suite_cor_pi_t_simple(S):
    return [(1, pi_t_simple_direct(S))]


def _suite_cor_hstar(S):
    return list(enumerate(cor_hstar_conditions(S), start=1))


def _diag_cor_hstar(S):
    plain = cor_hstar_conditions(S)[2]
    complete = semilattice_decomposition(
        S,
        lambda sub: pi_t_simple_direct(sub).holds,
        cache_key="pi-t-simple",
        complete_only=True,
    )
    return {"complete_reading_agrees": plain.holds == complete.holds}


def _suite_cor_cpr(S):
    return list(enumerate(cor_cpr_conditions(S), start=1))


def _hyp_none(S):
    return {}


def _hyp_regular(S):
    return {"regular": structure_predicate(S, "regular").holds}


def _hyp_pi_regular(S):
    return {"pi_regular": structure_predicate(S, "pi-regular").holds}


def _hyp_right_pi_inverse(S):
    return {"right_pi_inverse": right_pi_inverse_def(S).holds}


def _hyp_thm_wc(S):
    return {
        "right_weakly_commutative": structure_predicate(S, "right-weakly-commutative").holds,
        "right_archimedean": structure_predicate(S, "right-archimedean").holds,
        "lstar_unique_idempotent": lstar_unique_idempotent(S).holds,
    }


def _hyp_cor_pi_t_simple(S):
    return {
        "right_pi_inverse": right_pi_inverse_def(S).holds,
        "left_pi_t_simple": left_pi_t_simple_direct(S).holds,
    }


def _hyp_pi_inverse(S):
    return {"pi_inverse": pi_inverse_def(S).holds}


def _hyp_cor_cpr(S):
    return {
        "right_pi_inverse": right_pi_inverse_def(S).holds,
        "left_pi_regular": structure_predicate(S, "left-pi-regular").holds,
    }


# (kind, hypothesis, conditions, diagnostics): kind "equivalence" wants all
# condition booleans equal, "law" and "implication" want them all true.
_SUITES = {
    "thm2": ("equivalence", _hyp_none, _suite_thm2, None),
    "thm4": ("equivalence", _hyp_none, _suite_thm4, _diag_thm4),
    "thm5": ("equivalence", _hyp_pi_regular, _suite_thm5, _diag_thm5),
    "thm6": ("equivalence", _hyp_none, _suite_thm6, _diag_thm6),
    "thm7-open": ("equivalence", _hyp_regular, _suite_thm7_open, None),
    "thm8": ("equivalence", _hyp_right_pi_inverse, _suite_thm8, _diag_thm8),
    "thm51": ("equivalence", _hyp_regular, _suite_thm51, None),
    "thm-wc": ("implication", _hyp_thm_wc, _suite_thm_wc, None),
    "lemma3": ("law", _hyp_none, _suite_lemma3, None),
    "lemma7": ("law", _hyp_right_pi_inverse, _suite_lemma7, None),
    "cor1": ("equivalence", _hyp_none, _suite_cor1, None),
    "cor-pi-inverse": ("equivalence", _hyp_none, _suite_cor_pi_inverse, None),
    "cor-pi-t-simple": ("implication", _hyp_cor_pi_t_simple, _suite_cor_pi_t_simple, None),
    "cor-hstar": ("equivalence", _hyp_pi_inverse, _suite_cor_hstar, _diag_cor_hstar),
    "cor-cpr": ("equivalence", _hyp_cor_cpr, _suite_cor_cpr, None),
}

THEOREM_IDS = tuple(_SUITES)


@dataclass(frozen=True)
class EquivalenceReport:
    theorem: str
    structure_key: str
    hypothesis: dict
    conditions: tuple
    verdict: str
    diagnostics: dict

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "structure_key": self.structure_key,
            "hypothesis": dict(self.hypothesis),
            "conditions": [dict(c) for c in self.conditions],
            "verdict": self.verdict,
            "diagnostics": dict(self.diagnostics),
        }


def _condition_entry(index, result):
    entry = {"index": index, "holds": result.holds, "witness": None, "counterexample": None}
    if result.witnesses:
        entry["witness"] = result.witnesses[0]
    elif result.data is not None:
        entry["witness"] = result.data
    if result.counterexample is not None:
        entry["counterexample"] = result.counterexample
    return entry


def verify(S, theorem_id):
    """Evaluate one suite on one structure and render the verdict."""
    try:
        kind, hyp_fn, cond_fn, diag_fn = _SUITES[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}") from None
    hypothesis = hyp_fn(S)
    conditions = cond_fn(S)
    diagnostics = diag_fn(S) if diag_fn else {}
    met = all(hypothesis.values())
    if kind == "equivalence":
        ok = len({res.holds for _, res in conditions}) == 1
    else:
        ok = all(res.holds for _, res in conditions)
    if not met:
        verdict = VERDICT_HYPOTHESIS
    elif ok:
        verdict = VERDICT_EQUIVALENT
    else:
        verdict = VERDICT_DISCREPANCY
    return EquivalenceReport(
        theorem_id,
        structure_key(S),
        hypothesis,
        tuple(_condition_entry(i, res) for i, res in conditions),
        verdict,
        diagnostics,
    )


def _resolve_ids(theorems):
    if theorems in (None, "all"):
        return THEOREM_IDS
    if isinstance(theorems, str):
        theorems = (theorems,)
    ids = tuple(theorems)
    for tid in ids:
        if tid not in _SUITES:
            raise ValueError(f"unknown theorem id {tid!r}")
    return ids


def iter_catalog(max_order, sample_count=10_000, sample_seed=0):
    """The verification catalog: every structure (all compatible orders) up
    to order 3, plus at order 4 the discrete-order structures exhaustively
    and a seeded sample of non-discrete ones."""
    if max_order > EXHAUSTIVE_TABLE_CAP:
        raise ValueError(f"verification catalog capped at order {EXHAUSTIVE_TABLE_CAP}")
    for n in range(1, min(max_order, 3) + 1):
        for table in enumerate_tables(n):
            for leq in enumerate_compatible_orders(table):
                yield OrderedSemigroup(table, leq)
    if max_order >= 4:
        discrete = tuple(tuple(i == j for j in range(4)) for i in range(4))
        for table in enumerate_tables(4):
            yield OrderedSemigroup(table, discrete)
        yield from sample_structures(4, sample_count, sample_seed)


@dataclass(frozen=True)
class SuiteReport:
    config: dict
    structures: int
    totals: dict
    by_theorem: dict
    discrepancies: tuple
    diagnostics: dict
    runtime_seconds: float

    def to_dict(self, include_runtime=False):
        out = {
            "config": dict(self.config),
            "structures": self.structures,
            "totals": dict(self.totals),
            "by_theorem": {tid: dict(counts) for tid, counts in self.by_theorem.items()},
            "discrepancies": [dict(d) for d in self.discrepancies],
            "diagnostics": dict(self.diagnostics),
        }
        if include_runtime:
            out["runtime_seconds"] = self.runtime_seconds
        return out

    def table(self):
        """Human-readable per-suite verdict table."""
        width = max(len(tid) for tid in self.by_theorem)
        header = f"{'suite':<{width}}  {'equivalent':>10}  {'gated':>7}  {'DISCREPANCY':>11}"
        lines = [header, "-" * len(header)]
        for tid, counts in self.by_theorem.items():
            lines.append(
                f"{tid:<{width}}  {counts[VERDICT_EQUIVALENT]:>10}  "
                f"{counts[VERDICT_HYPOTHESIS]:>7}  {counts[VERDICT_DISCREPANCY]:>11}"
            )
        return "\n".join(lines)


def effective_workers(workers=None):
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "1")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, workers)


def _verify_chunk(payload):
    ids, chunk = payload
    out = []
    for table, leq in chunk:
        S = OrderedSemigroup(table, leq)
        for tid in ids:
            report = verify(S, tid)
            disagreements = tuple(
                name for name, agree in report.diagnostics.items() if not agree
            )
            out.append(
                (
                    tid,
                    report.verdict,
                    report.to_dict() if report.verdict == VERDICT_DISCREPANCY else None,
                    disagreements,
                )
            )
    return out


def run_suite(
    theorems="all",
    max_order=3,
    sample_count=10_000,
    sample_seed=0,
    workers=None,
    fail_fast=False,
):
    """Run suites over the verification catalog.

    The report is independent of the worker count: structures are processed
    in catalog order and merged deterministically.  Wall-clock time lives
    only in ``runtime_seconds``, which the canonical serialization omits.
    """
    ids = _resolve_ids(theorems)
    workers = effective_workers(workers)
    started = time.perf_counter()
    totals = {VERDICT_EQUIVALENT: 0, VERDICT_HYPOTHESIS: 0, VERDICT_DISCREPANCY: 0}
    by_theorem = {tid: dict(totals) for tid in ids}
    discrepancies = []
    reading_disagreements = {}
    structures = 0

    catalog = iter_catalog(max_order, sample_count, sample_seed)
    if workers == 1:
        def results():
            for S in catalog:
                chunk = ((S.table, S.leq),)
                yield _verify_chunk((ids, chunk))
    else:
        def results():
            def chunks():
                batch = []
                for S in catalog:
                    batch.append((S.table, S.leq))
                    if len(batch) == 64:
                        yield ids, tuple(batch)
                        batch = []
                if batch:
                    yield ids, tuple(batch)

            with ProcessPoolExecutor(max_workers=workers) as pool:
                yield from pool.map(_verify_chunk, chunks())

    stop = False
    for chunk_result in results():
        structures += len(chunk_result) // len(ids)
        for tid, verdict, report, disagreements in chunk_result:
            totals[verdict] += 1
            by_theorem[tid][verdict] += 1
            if report is not None:
                discrepancies.append(report)
            for name in disagreements:
                key = f"{tid}.{name}"
                reading_disagreements[key] = reading_disagreements.get(key, 0) + 1
            if verdict == VERDICT_DISCREPANCY and fail_fast:
                stop = True
        if stop:
            break

    config = {
        "theorems": list(ids),
        "max_order": max_order,
        "sample_count": sample_count if max_order >= 4 else 0,
        "sample_seed": sample_seed if max_order >= 4 else 0,
        "fail_fast": fail_fast,
    }
    return SuiteReport(
        config,
        structures,
        totals,
        by_theorem,
        tuple(discrepancies),
        {"reading_disagreements": reading_disagreements},
        time.perf_counter() - started,
    )


@dataclass(frozen=True)
class SearchResult:
    structure: OrderedSemigroup | None
    checked: int
    satisfy: tuple
    violate: tuple
    details: dict

    @property
    def found(self):
        return self.structure is not None

    def to_dict(self):
        out = {
            "found": self.found,
            "checked": self.checked,
            "satisfy": list(self.satisfy),
            "violate": list(self.violate),
            "details": dict(self.details),
        }
        if self.structure is not None:
            out["structure"] = self.structure.to_dict()
        return out


def search_model(satisfy=(), violate=(), max_order=3):
    """First structure, in catalog order, satisfying every named predicate
    in ``satisfy`` and violating every one in ``violate``."""
    if max_order > EXHAUSTIVE_TABLE_CAP:
        raise ValueError(f"model search capped at order {EXHAUSTIVE_TABLE_CAP}")
    satisfy = tuple(satisfy)
    violate = tuple(violate)
    for name in satisfy + violate:
        if name.replace("_", "-") not in PREDICATES:
            raise ValueError(f"unknown predicate name {name!r}")
    checked = 0
    for n in range(1, max_order + 1):
        for table in enumerate_tables(n):
            for leq in enumerate_compatible_orders(table):
                S = OrderedSemigroup(table, leq)
                checked += 1
                details = {}
                ok = True
                for name in satisfy:
                    res = named_predicate(S, name)
                    details[name] = res.to_dict()
                    if not res.holds:
                        ok = False
                        break
                if ok:
                    for name in violate:
                        res = named_predicate(S, name)
                        details[f"not:{name}"] = res.to_dict()
                        if res.holds:
                            ok = False
                            break
                if ok:
                    return SearchResult(S, checked, satisfy, violate, details)
    return SearchResult(None, checked, satisfy, violate, {})
