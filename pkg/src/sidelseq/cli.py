"""Command-line surface: single-shot analyses plus a sweep runner.

Every command prints a single JSON document (JSON lines for sweeps) whose
payload is byte-identical across reruns with the same inputs; gamma is
always echoed so results are reproducible.  Exit codes: 0 success, 2
invalid input, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from random import Random

from . import bounds as bnd
from . import complexity as cx
from . import cyclotomy as cy
from . import sequences as sq
from .field import as_prime_power, build_field, is_prime

BUDGET_ENV = "SIDELSEQ_BUDGET"


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return cx.DEFAULT_BUDGET


def _field_for(q, gamma=None):
    p, m = as_prime_power(q)
    return build_field(p, m, gamma=gamma)


def _emit(obj, out=None):
    (out or sys.stdout).write(json.dumps(obj) + "\n")


def _witness_json(witness):
    return [[pos, val] for pos, val in witness]


def _read_seq(path):
    if path is None:
        return sq.read_sequence_file(sys.stdin)
    return sq.read_sequence_file(path)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_field_info(args):
    ctx = _field_for(args.q, args.gamma)
    _emit({"q": ctx.q, "p": ctx.p, "m": ctx.m,
           "modulus": list(ctx.modulus), "gamma": ctx.gamma})
    return 0


def _cmd_gen(args):
    ctx = _field_for(args.q, args.gamma)
    seq = sq.sidelnikov_subsequence(ctx, args.d, args.l)
    if args.output:
        sq.write_sequence_file(seq, args.output)
    else:
        sq.write_sequence_file(seq, sys.stdout)
    return 0


def _cmd_lc(args):
    seq = _read_seq(args.file)
    _emit({"lc": cx.lc_via_gcd(seq)})
    return 0


def _cmd_klc(args):
    seq = _read_seq(args.file)
    budget = args.budget if args.budget is not None else default_budget()
    rep = cx.k_error_report(seq, args.k, budget)
    entry = rep.entries[args.k]
    _emit({"lc": rep.lc, "k": args.k, "lc_k": entry.lc,
           "witness": _witness_json(entry.witness)})
    return 0


def _cmd_bounds(args):
    ctx = _field_for(args.q, args.gamma)
    rep = bnd.bound_report(ctx, args.d, args.l, args.k)
    payload = {
        "q": rep.q, "gamma": rep.gamma, "d": rep.d, "l": rep.l, "k": rep.k,
        "general_bound": rep.general_bound,
        "factorization": {"s": rep.s, "r": rep.r, "v": rep.v},
        "root_exclusion_ok": rep.root_exclusion_ok,
        "reasons": list(rep.reasons),
        "klc_floor": rep.klc_floor,
        "one_error": _prediction_json(rep.one_error) if rep.one_error else None,
    }
    _emit(payload)
    return 0


def _prediction_json(pred):
    return {"A": pred.A, "B": pred.B, "b": pred.b,
            "S1_pred": pred.s1, "S1_1_pred": pred.s1_hasse,
            "prediction": pred.relation,
            "conditions": {name: ok for name, ok in pred.conditions}}


def _cmd_cyclo(args):
    ctx = _field_for(args.q, args.gamma)
    if args.closed_form:
        if args.v != 6:
            raise ValueError("closed forms exist for order 6 only")
        table = cy.cyclotomic_numbers_order6(ctx)
    else:
        table = cy.cyclotomic_numbers_bruteforce(ctx, args.v)
    if args.format == "csv":
        out = sys.stdout
        out.write("i,j,count,source\n")
        for i in range(table.v):
            for j in range(table.v):
                src = table.entry_source[i][j] if table.entry_source else "brute_force"
                out.write(f"{i},{j},{table.counts[i][j]},{src}\n")
    else:
        payload = {"q": table.q, "v": table.v, "f": table.f, "gamma": table.gamma,
                   "provenance": table.provenance,
                   "counts": [list(r) for r in table.counts]}
        if table.entry_source:
            payload["entry_source"] = [list(r) for r in table.entry_source]
            payload["mismatches"] = [list(mm) for mm in table.mismatches]
        if table.decomposition:
            dec = table.decomposition
            payload["decomposition"] = {"A": dec.A, "B": dec.B, "f": dec.f,
                                        "b": dec.b,
                                        "sign_calibrated": dec.sign_calibrated}
        _emit(payload)
    return 0


def _cmd_verify_thm2(args):
    ctx = _field_for(args.q, args.gamma)
    pred = bnd.one_error_prediction(ctx)
    seq = sq.sidelnikov_subsequence(ctx, 3, pred.l)
    s1, s11 = bnd.sequence_s_values(seq)
    svalues_match = (s1, s11) == (pred.s1, pred.s1_hasse)
    payload = {
        "q": ctx.q, "gamma": ctx.gamma, "l": pred.l,
        "A": pred.A, "B": pred.B, "b": pred.b,
        "S1": s1, "S1_pred": pred.s1,
        "S1_1": s11, "S1_1_pred": pred.s1_hasse,
        "svalues_match": svalues_match,
        "prediction": pred.relation,
    }
    match = svalues_match
    if args.full_klc:
        budget = args.budget if args.budget is not None else default_budget()
        rep = cx.k_error_report(seq, 1, budget)
        lc, lc1 = rep.lc, rep.entries[1].lc
        payload["lc"] = lc
        payload["lc1"] = lc1
        if pred.relation == "LC1=LC":
            match = match and lc1 == lc
        elif pred.relation == "LC1=l-1":
            match = match and lc1 == pred.l - 1
    payload["match"] = match
    _emit(payload)
    return 0


def _cmd_weil(args):
    ctx = _field_for(args.q, args.gamma)
    try:
        coeffs = [int(c) % ctx.q for c in args.poly.split(",")]
    except ValueError:
        raise ValueError("--poly must be a comma-separated integer list") from None
    rep = bnd.character_sum(ctx, args.d, coeffs)
    ok = bnd.weil_check(rep) if rep.lemma_applicable else None
    _emit({"q": rep.q, "d": rep.order, "f": list(rep.f), "e": rep.e,
           "counts": list(rep.counts), "zeros": rep.zeros,
           "magnitude": rep.magnitude, "weil_rhs": rep.weil_rhs,
           "applicable": rep.lemma_applicable, "weil_ok": ok})
    return 0


# ---------------------------------------------------------------------------
# sweep runner

def _config_q_values(spec):
    if isinstance(spec, list):
        return list(spec)
    if isinstance(spec, dict):
        lo = spec.get("min", 3)
        hi = spec["max"]
        out = []
        for q in range(lo, hi + 1):
            if spec.get("primes_only") and not is_prime(q):
                continue
            out.append(q)
        return out
    raise ValueError("config field 'q' must be a list or a {min,max} object")


def _config_k_values(spec):
    if isinstance(spec, list):
        return sorted(spec)
    if isinstance(spec, dict):
        return list(range(0, spec["max"] + 1))
    if isinstance(spec, int):
        return [spec]
    raise ValueError("config field 'k' must be a list, an int, or {max}")


def _config_l_values(spec, q):
    if spec == "all":
        return [l for l in range(3, q) if (q - 1) % l == 0]
    if spec == "half":
        return [(q - 1) // 2]
    if isinstance(spec, list):
        return list(spec)
    raise ValueError("config field 'l' must be 'all', 'half', or a list")


def run_sweep(config, out_fh):
    """One JSON-lines record per (q, d, l, k) tuple, in deterministic tuple
    order; returns the summary counters."""
    analyses = config.get("analyses", ["lc", "bounds"])
    budget = config.get("budget", default_budget())
    ds = config["d"] if isinstance(config["d"], list) else [config["d"]]
    ks = _config_k_values(config.get("k", [0]))
    rng = Random(config.get("seed", 1))
    summary = {"ok": 0, "skipped": 0, "budget_exceeded": 0, "bound_violations": 0}

    for q in _config_q_values(config["q"]):
        try:
            p, m = as_prime_power(q)
            if p == 2:
                raise ValueError("even characteristic")
            ctx = build_field(p, m)
        except ValueError as ex:
            summary["skipped"] += 1
            _emit({"q": q, "status": "skipped", "reason": str(ex)}, out_fh)
            continue
        for d in sorted(ds):
            if not is_prime(d) or (q - 1) % d:
                summary["skipped"] += 1
                _emit({"q": q, "d": d, "status": "skipped",
                       "reason": f"d = {d} is not a prime divisor of q-1"}, out_fh)
                continue
            for l in _config_l_values(config.get("l", "all"), q):
                if l < 1 or (q - 1) % l:
                    summary["skipped"] += 1
                    _emit({"q": q, "d": d, "l": l, "status": "skipped",
                           "reason": f"l = {l} does not divide q-1"}, out_fh)
                    continue
                seq = sq.sidelnikov_subsequence(ctx, d, l)
                for k in ks:
                    record = _sweep_record(ctx, seq, d, l, k, analyses, budget, rng)
                    summary[record["status"]] += 1
                    summary["bound_violations"] += record.get("bound_violations", 0)
                    _emit(record, out_fh)
    return summary


def _sweep_record(ctx, seq, d, l, k, analyses, budget, rng):
    t0 = time.time()
    record = {"q": ctx.q, "gamma": ctx.gamma, "d": d, "l": l, "k": k, "status": "ok"}
    violations = 0
    lc_k = None
    if "lc" in analyses:
        record["lc"] = cx.lc_via_gcd(seq)
    if "klc" in analyses:
        try:
            rep = cx.k_error_report(seq, k, budget)
            entry = rep.entries[k]
            lc_k = entry.lc
            record["lc"] = rep.lc
            record["lc_k"] = entry.lc
            record["witness"] = _witness_json(entry.witness)
        except cx.SearchBudgetError as ex:
            record["status"] = "budget_exceeded"
            record["search_space"] = ex.count
    if "bounds" in analyses:
        rep = bnd.bound_report(ctx, d, l, k)
        record["general_bound"] = rep.general_bound
        record["klc_floor"] = rep.klc_floor
        reference = lc_k if lc_k is not None else record.get("lc")
        if reference is not None:
            if not bnd.exceeds_klc_lower_bound(reference, ctx.q, l, k):
                violations += 1
            if lc_k is not None and rep.klc_floor is not None and lc_k < rep.klc_floor:
                violations += 1
    if "thm2" in analyses and d == 3 and ctx.q % 12 == 7 and l == (ctx.q - 1) // 2:
        pred = bnd.one_error_prediction(ctx)
        s1, s11 = bnd.sequence_s_values(seq)
        record["thm2"] = {"S1": s1, "S1_pred": pred.s1,
                          "S1_1": s11, "S1_1_pred": pred.s1_hasse,
                          "prediction": pred.relation,
                          "svalues_match": (s1, s11) == (pred.s1, pred.s1_hasse)}
        if not record["thm2"]["svalues_match"]:
            violations += 1
    if "weil" in analyses:
        bad = 0
        for _ in range(10):
            deg = rng.randrange(1, 5)
            coeffs = [rng.randrange(ctx.q) for _ in range(deg)] + [1]
            rep = bnd.character_sum(ctx, d, coeffs)
            if rep.lemma_applicable and not bnd.weil_check(rep):
                bad += 1
        record["weil_violations"] = bad
        violations += bad
    if violations:
        record["bound_violations"] = violations
    record["wall_time"] = round(time.time() - t0, 6)
    return record


_CSV_FIELDS = ["q", "gamma", "d", "l", "k", "status", "lc", "lc_k",
               "general_bound", "klc_floor", "bound_violations", "wall_time"]


def _write_csv(records, fh):
    fh.write(",".join(_CSV_FIELDS) + "\n")
    for rec in records:
        fh.write(",".join("" if rec.get(f) is None else str(rec.get(f))
                          for f in _CSV_FIELDS) + "\n")


def _cmd_sweep(args):
    with open(args.config) as fh:
        config = json.load(fh)
    records = []

    class _Tee:
        def write(self, line):
            records.append(json.loads(line))
            out_fh.write(line)

    with open(args.out, "w") as out_fh:
        summary = run_sweep(config, _Tee())
    if args.csv:
        with open(args.csv, "w") as fh:
            _write_csv(records, fh)
    _emit(summary)
    return 0


# ---------------------------------------------------------------------------

def _build_parser():
    ap = argparse.ArgumentParser(prog="sidelseq",
                                 description="Sidel'nikov subsequence complexity toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe F_q and its chosen generator")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.set_defaults(func=_cmd_field_info)

    p = sub.add_parser("gen", help="generate a sequence file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("lc", help="linear complexity of a sequence file")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=_cmd_lc)

    p = sub.add_parser("klc", help="exhaustive k-error linear complexity")
    p.add_argument("file", nargs="?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_klc)

    p = sub.add_parser("bounds", help="lower bounds for a parameter tuple")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("cyclo", help="cyclotomic-number table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_cyclo)

    p = sub.add_parser("verify-thm2",
                       help="check the exact one-error predictions for d=3, l=(q-1)/2")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.add_argument("--full-klc", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_verify_thm2)

    p = sub.add_parser("weil", help="exact character sum and Weil-bound check")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--poly", required=True, help="coefficients c0,c1,...")
    p.add_argument("--gamma", type=int)
    p.set_defaults(func=_cmd_weil)

    p = sub.add_parser("sweep", help="run a parameter sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_sweep)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except cx.SearchBudgetError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
