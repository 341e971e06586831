"""Verification suites: exhaustive sweeps comparing closed forms with the oracle.

Every suite yields one record per check. A record carries ``ok`` set to
True, False, or None (skipped).
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from .abelian import GroupSpec, brute_force_closure, contains, subgroup_from_generators
from .components import ComponentDescriptor, HypFlag, Kind, components
from .invariants import (
    closed_form_count,
    dk_check,
    n_matrix,
    partial_closed_form_count,
    sp_delta,
    theta_kernel_equals_mon,
)
from .monodromy import framed_component_count, generator_set, partial_component_count
from .report import SCHEMA
from .stratum import Signature, format_signature, predicates, violations
from .sweep import enumerate_signatures


def _sig(sig):
    return format_signature(sig)


def master_identity(max_sings=5, max_deg=9, genus=None):
    for sig in enumerate_signatures(max_sings, max_deg, genus):
        for comp in components(sig):
            rec = {"check": "master-identity", "signature": _sig(sig), "component": comp.label()}
            if comp.hyperelliptic is HypFlag.UNKNOWN:
                yield {**rec, "ok": None, "reason": "unknown hyperelliptic status"}
                continue
            closed, oracle = closed_form_count(comp), framed_component_count(comp)
            yield {**rec, "closed_form": closed, "oracle": oracle, "ok": closed == oracle}


def dk(max_sings=6, max_deg=12):
    for sig in enumerate_signatures(max_sings, max_deg, genus=0):
        if -1 in sig.degrees:
            continue
        for k in range(len(sig)):
            res = dk_check(sig, k)
            yield {"check": "dk", "signature": _sig(sig), "k": k + 1, "dk": res.dk,
                   "expected": res.epsilon_k * res.product_Nki, "ok": res.equal}


def theta_kernel(max_sings=5, max_deg=9):
    for sig in enumerate_signatures(max_sings, max_deg, genus=0):
        if -1 in sig.degrees:
            continue
        (comp,) = components(sig)
        yield {"check": "theta-kernel", "signature": _sig(sig), "ok": theta_kernel_equals_mon(comp)}


HYPERELLIPTIC_SHAPES = ("n,n,p,p", "n,n,2p", "2n,p,p", "2n,2p", "n,n,-1,-1", "2n,-1,-1")


def hyperelliptic_shapes(max_value=8):
    """Valid instances of each hyperelliptic shape with their expected counts, deduplicated."""
    seen = set()
    for n in range(1, max_value + 1):
        for p in range(-2, -max_value - 1, -1):
            table = [
                ("n,n,p,p", (n, n, p, p), (n + 1) * abs(p + 1)),
                ("n,n,2p", (n, n, 2 * p), n + 1),
                ("2n,p,p", (2 * n, p, p), abs(p + 1)),
                ("2n,2p", (2 * n, 2 * p), 1),
                ("n,n,-1,-1", (n, n, -1, -1), n + 1),
                ("2n,-1,-1", (2 * n, -1, -1), 1),
            ]
            for shape, degrees, expected in table:
                if degrees in seen or violations(degrees):
                    continue
                seen.add(degrees)
                yield shape, Signature(degrees), expected


def hyperelliptic(max_value=8):
    for shape, sig, expected in hyperelliptic_shapes(max_value):
        comp = ComponentDescriptor(sig, Kind.HYPERELLIPTIC, HypFlag.YES)
        oracle = framed_component_count(comp)
        listed = any(c.is_hyperelliptic for c in components(sig))
        yield {"check": "hyperelliptic", "shape": shape, "signature": _sig(sig), "genus": sig.genus,
               "listed": listed, "oracle": oracle, "expected": expected,
               "closed_form": closed_form_count(comp), "ok": oracle == expected == closed_form_count(comp)}


def parity(max_sings=5, max_deg=9):
    """Generators preserve Sp, and the index is exactly 2 or 2N where the parity obstruction bites."""
    for sig in enumerate_signatures(max_sings, max_deg):
        preds = predicates(sig)
        if not preds.odd_degree_count or preds.has_simple_pole:
            continue
        for comp in components(sig):
            rec = {"check": "parity", "signature": _sig(sig), "component": comp.label()}
            if comp.hyperelliptic is HypFlag.UNKNOWN:
                yield {**rec, "ok": None, "reason": "unknown hyperelliptic status"}
                continue
            bad = [name for name, g in generator_set(comp).elements if sp_delta(sig, g)]
            index = framed_component_count(comp)
            if sig.genus >= 1 and not comp.is_hyperelliptic:
                expected = 2
            elif sig.genus == 0 and preds.odd_degree_count >= 3:
                expected = 2 * n_matrix(sig).total
            else:
                expected = None
            ok = not bad and (expected is None or index == expected)
            yield {**rec, "odd_generators": bad, "oracle": index, "expected": expected, "ok": ok}


def partial(max_sings=5, max_deg=9):
    for sig in enumerate_signatures(max_sings, max_deg):
        r = len(sig)
        for comp in components(sig):
            if comp.hyperelliptic is HypFlag.UNKNOWN:
                yield {"check": "partial", "signature": _sig(sig), "component": comp.label(),
                       "ok": None, "reason": "unknown hyperelliptic status"}
                continue
            full = framed_component_count(comp)
            for size in range(r + 1):
                for marked in itertools.combinations(range(r), size):
                    count = partial_component_count(comp, marked)
                    expected = partial_closed_form_count(comp, marked)
                    ok = full % count == 0 and (expected is None or count == expected)
                    if size == r:
                        ok = ok and count == full
                    yield {"check": "partial", "signature": _sig(sig), "component": comp.label(),
                           "marked": [i + 1 for i in marked], "count": count,
                           "expected": expected, "ok": ok}


def random_group_specs(count=1000, max_order=10**4, seed=0):
    """Seeded random groups of order at most ``max_order`` with random generator lists."""
    rng = random.Random(seed)
    for _ in range(count):
        moduli = []
        order = 1
        for _ in range(rng.randint(1, 5)):
            m = rng.randint(1, max(1, min(30, max_order // order)))
            moduli.append(m)
            order *= m
        spec = GroupSpec(tuple(moduli))
        gens = [tuple(rng.randrange(m) for m in moduli) for _ in range(rng.randint(0, 4))]
        yield spec, gens, rng


def oracle(count=1000, max_order=10**4, seed=0, samples=100):
    for n, (spec, gens, rng) in enumerate(random_group_specs(count, max_order, seed)):
        sub = subgroup_from_generators(spec, gens)
        closure = brute_force_closure(spec, gens)
        index_ok = sub.index * len(closure) == spec.order
        members = [tuple(rng.randrange(m) for m in spec.moduli) for _ in range(samples)]
        disagreements = [x for x in members if contains(sub, x) != (x in closure)]
        yield {"check": "oracle", "case": n, "moduli": list(spec.moduli), "gens": [list(g) for g in gens],
               "index": sub.index, "closure": len(closure), "order": spec.order,
               "membership_disagreements": len(disagreements), "ok": index_ok and not disagreements}


SUITES = {
    "master-identity": master_identity,
    "dk": dk,
    "theta-kernel": theta_kernel,
    "hyperelliptic": hyperelliptic,
    "parity": parity,
    "partial": partial,
    "oracle": oracle,
}


def summarize(suite: str, records, keep_failures: int = 20) -> dict:
    tally = Counter()
    failures = []
    for rec in records:
        tally[{True: "pass", False: "fail", None: "skipped"}[rec["ok"]]] += 1
        if rec["ok"] is False and len(failures) < keep_failures:
            failures.append(rec)
    return {"schema": SCHEMA, "suite": suite, "pass": tally["pass"], "fail": tally["fail"],
            "skipped": tally["skipped"], "failures": failures}
