"""Per-signature reports: closed-form counts next to the monodromy oracle."""

from __future__ import annotations

from .abelian import DEFAULT_CLOSURE_BOUND, brute_force_closure
from .components import HypFlag, components
from .errors import AtlasError, InvalidSignatureError
from .invariants import closed_form_count, partial_closed_form_count
from .monodromy import frame_group, generator_set, mon, partial_component_count
from .stratum import Signature, format_signature, h_values, parse_signature, predicates

SCHEMA = "stratum-atlas/1"
HNF_ONLY = "hnf-only"


def component_report(component, marked=None, oracle_bound: int = DEFAULT_CLOSURE_BOUND) -> dict:
    """Report for one component; ``marked`` is a 0-based index list."""
    out = {"component": component.to_json(), "label": component.label()}
    if component.hyperelliptic is HypFlag.UNKNOWN:
        out.update(status="skipped", reason="unknown hyperelliptic status",
                   closed_form=None, oracle=None, closure=None, match=None)
        return out
    gens = generator_set(component)
    sub = mon(component)
    spec = gens.group.spec
    closed = closed_form_count(component)
    if spec.order <= oracle_bound:
        closure_index = spec.order // len(brute_force_closure(spec, gens.vectors(), oracle_bound))
    else:
        closure_index = HNF_ONLY
    out.update(
        generators=gens.names(),
        closed_form=closed,
        oracle=sub.index,
        closure=closure_index,
        match=closed == sub.index,
        closure_agrees=closure_index == HNF_ONLY or closure_index == sub.index,
    )
    ok = out["match"] and out["closure_agrees"]
    if marked is not None:
        count = partial_component_count(component, marked)
        expected = partial_closed_form_count(component, marked)
        out["partial"] = {
            "marked": [i + 1 for i in sorted(set(marked))],
            "count": count,
            "closed_form": expected,
            "match": None if expected is None else expected == count,
        }
        ok = ok and expected in (None, count)
    out["status"] = "ok" if ok else "mismatch"
    return out


def signature_report(sig: Signature, marked=None, oracle_bound: int = DEFAULT_CLOSURE_BOUND) -> dict:
    if marked is not None:
        for i in marked:
            if not 0 <= i < len(sig):
                raise AtlasError(f"marked index {i + 1} out of range for {sig}")
    comps = [component_report(c, marked, oracle_bound) for c in components(sig)]
    status = "mismatch" if any(c["status"] == "mismatch" for c in comps) else "ok"
    return {
        "schema": SCHEMA,
        "signature": format_signature(sig),
        "genus": sig.genus,
        "valid": True,
        "predicates": predicates(sig)._asdict(),
        "hor": list(frame_group(sig).spec.moduli),
        "h": h_values(sig),
        "components": comps,
        "status": status,
    }


def analyze(text: str, marked=None, oracle_bound: int = DEFAULT_CLOSURE_BOUND) -> dict:
    """Parse and report; invalid input yields a report with ``valid: False``."""
    try:
        sig = parse_signature(text)
    except InvalidSignatureError as exc:
        return {"schema": SCHEMA, "signature": text, "valid": False,
                "errors": list(exc.violations), "status": "invalid"}
    except AtlasError as exc:
        return {"schema": SCHEMA, "signature": text, "valid": False,
                "errors": [str(exc)], "status": "invalid"}
    return signature_report(sig, marked, oracle_bound)


CSV_FIELDS = ["signature", "genus", "component", "hyperelliptic", "closed_form", "oracle", "closure", "match", "status"]


def csv_rows(report: dict):
    if not report.get("valid"):
        yield {"signature": report["signature"], "status": "invalid"}
        return
    for comp in report["components"]:
        yield {
            "signature": report["signature"],
            "genus": report["genus"],
            "component": comp["label"],
            "hyperelliptic": comp["component"]["hyperelliptic"],
            "closed_form": comp["closed_form"],
            "oracle": comp["oracle"],
            "closure": comp["closure"],
            "match": comp["match"],
            "status": comp["status"],
        }


def text_lines(report: dict):
    if not report.get("valid"):
        yield f"{report['signature']}: invalid ({', '.join(report['errors'])})"
        return
    yield f"H({report['signature']})  genus {report['genus']}  Hor = " + " x ".join(
        f"Z/{m}" for m in report["hor"]
    )
    for comp in report["components"]:
        flag = comp["component"]["hyperelliptic"]
        if comp["status"] == "skipped":
            yield f"  {comp['label']:<16} hyperelliptic={flag:<7} skipped: {comp['reason']}"
            continue
        line = (f"  {comp['label']:<16} hyperelliptic={flag:<7} framed components: "
                f"closed form {comp['closed_form']}, oracle {comp['oracle']}, closure {comp['closure']}"
                f"  [{comp['status']}]")
        yield line
        if "partial" in comp:
            p = comp["partial"]
            yield f"    marked {p['marked']}: {p['count']} (closed form {p['closed_form']})"
