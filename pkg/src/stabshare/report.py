"""Report assembly shared by the CLI and the HTTP service.

All functions return plain dicts with a frozen key layout (documented in the
README); serialization is deterministic given (input, seed, version), so
reports never carry timestamps.  Density-class counts are emitted as decimal
strings because they outgrow JSON's safe integer range.
"""

from __future__ import annotations

import json

from ._version import __version__
from .codefile import emit_code_file
from .gv import AsymptoticQuery, GVQuery, gv_asymptotic, gv_check, witness_search
from .oracle import DensityOracle
from .scheme import (
    Scheme,
    classify,
    classify_quantum,
    count_density_classes,
    exact_thresholds,
)
from .symplectic import all_subsets, normalize_subset
from .weights import (
    check_distance_classification_bounds,
    check_threshold_weight_bounds,
    distance_profile,
)

TOOL = {"name": "stabshare", "version": __version__}


def field_payload(field) -> dict:
    return {
        "p": field.p,
        "mu": field.mu,
        "q": field.q,
        "modulus": list(field.modulus),
    }


def scheme_payload(s: Scheme) -> dict:
    return {
        "shares": s.n,
        "secret_len": s.k,
        "degenerate": s.degenerate,
        "stabilizer": [list(r) for r in s.stabilizer.rows],
        "lagrangian": [list(r) for r in s.lagrangian.rows],
        "coset_reps": [list(r) for r in s.coset_reps],
        "lagrangian_source": s.lagrangian_source,
    }


def subset_row(s: Scheme, subset) -> dict:
    subset = normalize_subset(s.n, subset)
    cls = classify(s, subset)
    classes, fiber = count_density_classes(s, subset)
    return {
        "subset": list(subset),
        "size": len(subset),
        "status": cls.status.value,
        "quantum_status": classify_quantum(s, subset).value,
        "leaked_dim": cls.leaked_dim,
        "leaked_bits": cls.leaked_bits,
        "density_classes": str(classes),
        "fiber_size": str(fiber),
    }


def distances_payload(s: Scheme, max_i: int | None = None) -> dict | None:
    if s.degenerate:
        return None
    profile = distance_profile(s, max_i)
    return {
        "privacy_distance": profile.privacy_distance,
        "reconstruction_distance": profile.reconstruction_distance,
        "privacy_weights": list(profile.privacy_weights),
        "reconstruction_weights": list(profile.reconstruction_weights),
    }


def thresholds_payload(s: Scheme) -> dict | None:
    if s.degenerate:
        return None
    t, r = exact_thresholds(s)
    return {"privacy": list(t), "reconstruction": list(r)}


def bounds_payload(s: Scheme) -> dict | None:
    if s.degenerate:
        return None
    return {
        "distance_classification": check_distance_classification_bounds(s),
        "threshold_weights": check_threshold_weight_bounds(s),
    }


def analyze_report(s: Scheme, subsets=None, max_i: int | None = None) -> dict:
    """Full access report; subsets = None means every subset of {1..n}."""
    if subsets is None:
        rows = [subset_row(s, a) for a in all_subsets(s.n)]
    else:
        rows = [subset_row(s, a) for a in subsets]
    return {
        "kind": "analyze",
        "tool": TOOL,
        "field": field_payload(s.field),
        "scheme": scheme_payload(s),
        "subsets": rows,
        "thresholds": thresholds_payload(s),
        "distances": distances_payload(s, max_i),
        "bounds": bounds_payload(s),
    }


def distances_report(s: Scheme, max_i: int | None = None) -> dict:
    return {
        "kind": "distances",
        "tool": TOOL,
        "field": field_payload(s.field),
        "scheme": scheme_payload(s),
        "distances": distances_payload(s, max_i),
    }


def simulate_report(s: Scheme) -> dict:
    """Side-by-side algebraic vs density-matrix classification of every subset."""
    oracle = DensityOracle(s)
    rows = []
    all_match = True
    for subset in all_subsets(s.n):
        cls = classify(s, subset)
        dens = oracle.classify(subset)
        oracle_leak_symbols, rem = divmod(dens.leaked_dim, s.field.mu)
        match = (
            cls.status == dens.status
            and rem == 0
            and cls.leaked_dim == oracle_leak_symbols
        )
        all_match = all_match and match
        rows.append(
            {
                "subset": list(subset),
                "size": len(subset),
                "algebraic_status": cls.status.value,
                "algebraic_leaked_dim": cls.leaked_dim,
                "info_bits": cls.leaked_bits,
                "oracle_status": dens.status.value,
                "oracle_leaked_dim": oracle_leak_symbols,
                "oracle_classes": str(dens.num_classes),
                "oracle_fiber_sizes": [str(x) for x in dens.fiber_sizes],
                "holevo_bits": dens.holevo_bits,
                "match": match,
            }
        )
    return {
        "kind": "simulate",
        "tool": TOOL,
        "field": field_payload(s.field),
        "scheme": scheme_payload(s),
        "qudit_dimension": oracle.p,
        "qudits": oracle.n,
        "adjusted_generators": list(oracle.state.adjusted_generators),
        "comparison": rows,
        "all_match": all_match,
    }


def gv_report(query: GVQuery) -> dict:
    result = gv_check(query)
    # Display over the natural denominator q^(2n) - 1; the product is exact.
    denom = query.q ** (2 * query.n) - 1
    numer = result.lhs * denom
    assert numer.denominator == 1
    return {
        "kind": "gv",
        "tool": TOOL,
        "query": {
            "q": query.q,
            "n": query.n,
            "k": query.k,
            "delta_t": query.delta_t,
            "delta_r": query.delta_r,
        },
        "holds": result.holds,
        "lhs": f"{numer.numerator}/{denom}",
        "lhs_float": float(result.lhs),
    }


def gv_asym_report(query: AsymptoticQuery) -> dict:
    eps_t, eps_r = gv_asymptotic(query)
    return {
        "kind": "gv_asym",
        "tool": TOOL,
        "query": {"q": query.q, "rate": query.rate},
        "eps_t": eps_t,
        "eps_r": eps_r,
    }


def search_report(query: GVQuery, trials: int, seed: int) -> dict:
    from .scheme import build_scheme

    witness = witness_search(query, trials, seed)
    payload = {
        "kind": "search",
        "tool": TOOL,
        "query": {
            "q": query.q,
            "n": query.n,
            "k": query.k,
            "delta_t": query.delta_t,
            "delta_r": query.delta_r,
        },
        "trials": trials,
        "seed": seed,
        "found": witness is not None,
    }
    if witness is not None:
        scheme = build_scheme(witness.stabilizer, witness.lagrangian)
        payload["trial"] = witness.trial
        payload["privacy_distance"] = witness.privacy_distance
        payload["reconstruction_distance"] = witness.reconstruction_distance
        payload["code"] = emit_code_file(scheme, comment="witness from seeded search")
    else:
        payload["trial"] = None
        payload["code"] = None
    return payload


def construct_report(kind: str, s: Scheme, params: dict) -> dict:
    return {
        "kind": "construct",
        "tool": TOOL,
        "construction": kind,
        "params": params,
        "field": field_payload(s.field),
        "scheme": scheme_payload(s),
        "code": emit_code_file(s, comment=f"{kind} construction"),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Human rendering
# ---------------------------------------------------------------------------


def _table(rows: list[dict], columns: list[tuple[str, str]]) -> str:
    headers = [title for _, title in columns]
    cells = [
        [_cell(row.get(key)) for key, _ in columns]
        for row in rows
    ]
    widths = [
        max(len(headers[i]), *(len(c[i]) for c in cells)) if cells else len(headers[i])
        for i in range(len(columns))
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    out.append("  ".join("-" * w for w in widths))
    for c in cells:
        out.append("  ".join(x.ljust(w) for x, w in zip(c, widths)))
    return "\n".join(out)


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, list):
        return "{" + ",".join(str(v) for v in value) + "}"
    return str(value)


def render_human(report: dict) -> str:
    kind = report.get("kind")
    if kind == "analyze":
        parts = [
            f"scheme: {report['scheme']['shares']} shares, "
            f"{report['scheme']['secret_len']} secret symbols over F_{report['field']['q']}"
        ]
        if report["scheme"]["degenerate"]:
            parts.append("degenerate scheme (k = 0): every subset is forbidden")
        parts.append(
            _table(
                report["subsets"],
                [
                    ("subset", "subset"),
                    ("status", "status"),
                    ("quantum_status", "quantum"),
                    ("leaked_dim", "leak"),
                    ("leaked_bits", "bits"),
                ],
            )
        )
        if report["thresholds"]:
            parts.append(
                "privacy t_i: "
                + " ".join(str(x) for x in report["thresholds"]["privacy"])
                + "   reconstruction r_i: "
                + " ".join(str(x) for x in report["thresholds"]["reconstruction"])
            )
        if report["distances"]:
            d = report["distances"]
            parts.append(
                f"privacy distance {d['privacy_distance']}, "
                f"reconstruction distance {d['reconstruction_distance']}; "
                f"weights {d['privacy_weights']} / {d['reconstruction_weights']}"
            )
        if report["bounds"]:
            ok = (
                report["bounds"]["distance_classification"]["holds"]
                and report["bounds"]["threshold_weights"]["holds"]
            )
            parts.append(f"bound checks: {'pass' if ok else 'FAIL'}")
        return "\n".join(parts) + "\n"
    if kind == "distances":
        d = report["distances"]
        if d is None:
            return "degenerate scheme (k = 0): no distance profile\n"
        return (
            f"privacy distance {d['privacy_distance']}  "
            f"reconstruction distance {d['reconstruction_distance']}\n"
            f"privacy weights {d['privacy_weights']}\n"
            f"reconstruction weights {d['reconstruction_weights']}\n"
        )
    if kind == "simulate":
        table = _table(
            report["comparison"],
            [
                ("subset", "subset"),
                ("algebraic_status", "algebraic"),
                ("oracle_status", "oracle"),
                ("algebraic_leaked_dim", "leak"),
                ("oracle_classes", "classes"),
                ("holevo_bits", "holevo"),
                ("match", "match"),
            ],
        )
        verdict = "all subsets match" if report["all_match"] else "MISMATCH DETECTED"
        return f"{table}\n{verdict}\n"
    if kind == "gv":
        status = "holds" if report["holds"] else "fails"
        return f"{status}, LHS = {report['lhs']} ({report['lhs_float']:.6g})\n"
    if kind == "gv_asym":
        return (
            f"eps_t = {report['eps_t']:.6f}  eps_r = {report['eps_r']:.6f} "
            f"(q = {report['query']['q']}, R = {report['query']['rate']})\n"
        )
    if kind == "search":
        if report["found"]:
            return (
                f"witness found at trial {report['trial']} "
                f"(distances {report['privacy_distance']}/{report['reconstruction_distance']})\n"
                + report["code"]
            )
        return f"no witness in {report['trials']} trials\n"
    if kind == "construct":
        return report["code"]
    return to_json(report)
