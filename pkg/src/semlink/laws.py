"""Commutation law suites with deterministic, seed-reproducible reports.

Each suite draws its structures from a seeded PCG64 generator (or from a
user-supplied model), runs the relevant two-path checks, and renders a
plain-text report that is byte-identical for identical seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from . import homomorphism as hm
from . import sampling as sp
from . import veclogic as vl
from .model import Model, denote
from .terms import pretty

MAX_SHOWN_FAILURES = 5

LAWS = ("function", "relation", "sets", "chain", "formula")


@dataclass
class LawReport:
    law: str
    seed: int
    trials: int
    checks: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"law: {self.law}",
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"checks: {self.checks}",
            f"failures: {len(self.failures)}",
        ]
        for f in self.failures[:MAX_SHOWN_FAILURES]:
            lines.append(f"counterexample: {f}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def run_law(law: str, seed: int, trials: int, model: "Model | None" = None) -> LawReport:
    if law not in LAWS:
        raise ValueError(f"unknown law {law!r}, expected one of {', '.join(LAWS)}")
    rng = sp.make_rng(seed)
    runner = {
        "function": _law_function,
        "relation": _law_relation,
        "sets": _law_sets,
        "chain": _law_chain,
        "formula": _law_formula,
    }[law]
    checks, failures = runner(rng, trials, model)
    return LawReport(law, seed, trials, checks, failures)


# ---------------------------------------------------------------------------
# function lift commutation


def _law_function(rng, trials, model) -> tuple[int, list[str]]:
    checks, failures = 0, []
    if model is not None and model.functions:
        fam = hm.LiftFamily.for_model(model)
        names = sorted(model.functions)
        for t in range(trials):
            name = names[t % len(names)]
            fn = model.functions[name]
            lifted = hm.lifted_model_function(model, name, fam)
            src = hm.product_map(fam.entity, fn.arity)
            for args in sorted(fn.table):
                checks += 1
                key = args[0] if fn.arity == 1 else args
                got = lifted(hm.map_element(src, key))
                want = hm.map_element(fam.entity, fn.table[args])
                if not np.array_equal(got, want):
                    failures.append(
                        f"trial {t}: function {name} at {list(args)}: "
                        f"lifted {got.tolist()} expected {want.tolist()}")
        return checks, failures
    for t in range(trials):
        ds = int(rng.integers(1, 6))
        dt = int(rng.integers(1, 6))
        src = hm.build_domain_map(range(ds), tag="src")
        tgt = hm.build_domain_map(range(dt), tag="tgt")
        if t % 3 == 2:
            src = hm.product_map(src, 2)
        table = sp.random_function_table(rng, src.elements, tgt.elements)
        lifted = hm.lift_function(table, src, tgt)
        for a in src.elements:
            checks += 1
            got = lifted(hm.map_element(src, a))
            want = hm.map_element(tgt, table[a])
            if not np.array_equal(got, want):
                failures.append(
                    f"trial {t}: element {a!r}: lifted {got.tolist()} "
                    f"expected {want.tolist()}")
    return checks, failures


def sweep_unary_function_lifts(max_dim: int = 5) -> tuple[int, list[str]]:
    """Every total unary function between every pair of domain sizes up to
    max_dim, checked at every point of its source domain."""
    checks, failures = 0, []
    for ds in range(1, max_dim + 1):
        src = hm.build_domain_map(range(ds), tag=f"src{ds}")
        for dt in range(1, max_dim + 1):
            tgt = hm.build_domain_map(range(dt), tag=f"tgt{dt}")
            for combo in iproduct(range(dt), repeat=ds):
                table = dict(enumerate(combo))
                lifted = hm.lift_function(table, src, tgt)
                for a in range(ds):
                    checks += 1
                    got = lifted(hm.map_element(src, a))
                    want = hm.map_element(tgt, combo[a])
                    if not np.array_equal(got, want):
                        failures.append(
                            f"table {combo} from {ds} to {dt} at {a}: "
                            f"lifted {got.tolist()} expected {want.tolist()}")
    return checks, failures


# ---------------------------------------------------------------------------
# relation biconditional


def _relation_instance_failures(label: str, tuples: set, m: hm.DomainMap,
                                arity: int) -> tuple[int, list[str]]:
    lifted = hm.lift_relation(tuples, m, arity)
    checks, failures = 0, []
    for tup in iproduct(m.elements, repeat=arity):
        checks += 1
        direct = 1 if tup in tuples else 0
        got = lifted([hm.map_element(m, a) for a in tup])
        if got != direct:
            failures.append(
                f"{label}: tuple {list(tup)}: lifted {got} extensional {direct}")
    # off-image arguments must come out false, not raise
    checks += 1
    zero = np.zeros(m.dim, dtype=np.int64)
    if lifted([zero] * arity) != 0:
        failures.append(f"{label}: off-image argument did not evaluate to 0")
    return checks, failures


def _law_relation(rng, trials, model) -> tuple[int, list[str]]:
    checks, failures = 0, []
    if model is not None and model.relations:
        fam = hm.LiftFamily.for_model(model)
        names = sorted(model.relations)
        for t in range(trials):
            name = names[t % len(names)]
            rel = model.relations[name]
            c, f = _relation_instance_failures(
                f"trial {t}: relation {name}", set(rel.tuples), fam.entity, rel.arity)
            checks += c
            failures += f
        return checks, failures
    for t in range(trials):
        d = int(rng.integers(1, 5))
        arity = int(rng.integers(1, 4))
        m = hm.build_domain_map(range(d), tag="dom")
        tuples = {args for args in iproduct(m.elements, repeat=arity)
                  if rng.integers(2) == 1}
        c, f = _relation_instance_failures(f"trial {t}", tuples, m, arity)
        checks += c
        failures += f
    return checks, failures


def all_relation_masks(d: int, arity: int) -> np.ndarray:
    """Membership masks of every relation of the given arity over d elements."""
    ntup = d ** arity
    if ntup > 30:
        raise ValueError(f"2^{ntup} relations is too many to enumerate")
    ints = np.arange(1 << ntup, dtype=np.uint64)
    shifts = np.arange(ntup, dtype=np.uint64)
    return ((ints[:, None] >> shifts[None, :]) & 1).astype(np.int8)


# ---------------------------------------------------------------------------
# set operations


def _law_sets(rng, trials, model) -> tuple[int, list[str]]:
    elements = model.entities if model is not None else tuple(f"x{i}" for i in range(6))
    m = hm.build_domain_map(elements, tag="set-domain")
    checks, failures = 0, []
    for t in range(trials):
        e1 = sp.random_subset(rng, elements)
        e2 = sp.random_subset(rng, elements)
        report = hm.check_set_ops(e1, e2, m)
        checks += 3
        for label, ok in (("union", report.union_ok),
                          ("intersection", report.intersection_ok),
                          ("difference", report.difference_ok)):
            if not ok:
                failures.append(
                    f"trial {t}: {label} of {sorted(e1)} and {sorted(e2)} does not commute")
        for a in elements:
            checks += 1
            chi, chi_lifted = hm.characteristic(e1, m, a)
            if chi != chi_lifted:
                failures.append(
                    f"trial {t}: characteristic of {a!r} in {sorted(e1)}: "
                    f"{chi} vs {chi_lifted}")
        ind = hm.indicator_vector(e1, m)
        want = np.array([1 if a in e1 else 0 for a in elements], dtype=np.int64)
        checks += 1
        if not np.array_equal(ind, want):
            failures.append(
                f"trial {t}: indicator of {sorted(e1)} is {ind.tolist()}, "
                f"expected {want.tolist()}")
    return checks, failures


# ---------------------------------------------------------------------------
# composition chains


def _law_chain(rng, trials, model) -> tuple[int, list[str]]:
    checks, failures = 0, []
    unary = sorted(n for n, fn in (model.functions.items() if model else ())
                   if fn.arity == 1)
    for t in range(trials):
        length = int(rng.integers(1, 6))
        if model is not None and unary:
            fam = hm.LiftFamily.for_model(model)
            maps = [fam.entity] * (length + 1)
            names = [unary[int(rng.integers(len(unary)))] for _ in range(length)]
            tables = [{a: model.functions[n].table[(a,)] for a in model.entities}
                      for n in names]
        else:
            sizes = sp.random_chain_sizes(rng, length)
            maps = [hm.build_domain_map(range(s), tag=f"d{i}")
                    for i, s in enumerate(sizes)]
            tables = [sp.random_function_table(rng, maps[i].elements,
                                               maps[i + 1].elements)
                      for i in range(length)]
        report = hm.check_composition_chain(tables, maps)
        checks += report.checks
        if not report.ok:
            a, got, want = report.counterexample
            failures.append(
                f"trial {t}: chain of length {length} at {a!r}: "
                f"lifted {got} expected {want}")
    return checks, failures


# ---------------------------------------------------------------------------
# dual-route formula evaluation


def _law_formula(rng, trials, model) -> tuple[int, list[str]]:
    checks, failures = 0, []
    fixed = model
    if fixed is not None and not fixed.relations:
        raise ValueError("model declares no relations, cannot build formulas")
    for t in range(trials):
        m = fixed if fixed is not None else sp.random_model(
            rng, n_entities=int(rng.integers(2, 5)))
        fam = hm.LiftFamily.for_model(m)
        formula = sp.random_formula(rng, m.signature(), budget=6)
        bit = denote(formula, m, {}).bit
        vec = hm.lift_logical_connective(formula, m, {}, fam)
        checks += 1
        if vl.project_truth(vec) != bit:
            failures.append(
                f"trial {t}: {pretty(formula)}: extensional {bit} "
                f"vector route {vec.tolist()}")
    return checks, failures
