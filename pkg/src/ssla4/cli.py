"""Command line interface: ``ssla4 <command> [options]``.

Exit codes: 0 success, 2 usage error, 3 verification mismatch, 4 budget
exceeded, 1 any other library error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from math import isqrt

from . import counting, icosian, linalg, oracle, sslgen
from .errors import BudgetExceeded, InvalidArgument, SSLError

SCHEMA_VERSION = 1
EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3, 4
COUNT_HEADER = ("m", "m_squared", "f", "f_pr")


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    out: str | None = None
    options: dict = field(default_factory=dict)


class Mismatch(Exception):
    def __init__(self, payload):
        super().__init__("verification mismatch")
        self.payload = payload


# ---- commands: each returns (payload dict, text lines, csv rows or None) ----------

def cmd_count(max_m: int, primitive: bool = False, include_zero: bool = False):
    if max_m < 1:
        raise InvalidArgument("--max-m must be positive")
    f, fp = counting.f_table(max_m), counting.fpr_table(max_m)
    rows = [(m, m * m, f[m], fp[m]) for m in range(1, max_m + 1) if include_zero or f[m]]
    if primitive:
        rows = [r for r in rows if include_zero or r[3]]
    payload = {"rows": [dict(zip(COUNT_HEADER, r)) for r in rows]}
    text = [f"{'m':>6} {'m^2':>8} {'f':>8} {'f_pr':>8}"]
    text += [f"{a:>6} {b:>8} {c:>8} {d:>8}" for a, b, c, d in rows]
    return payload, text, (COUNT_HEADER, rows)


def _matrix_text(H):
    return [" ".join(f"{x:>4}" for x in r) for r in H]


def cmd_enumerate(m: int, primitive: bool = False, max_m=sslgen.DEFAULT_MAX_M):
    recs = sslgen.enumerate_ssls(m, primitive, max_m=max_m)
    payload = {"m": m, "primitive_only": primitive, "count": len(recs),
               "records": [r.to_json() for r in recs]}
    text = [f"m = {m}: {len(recs)} {'primitive ' if primitive else ''}similar sublattices of index {m * m}"]
    for k, r in enumerate(recs, 1):
        gen = " ".join(map(str, r.generator.ints())) if r.generator is not None else "-"
        text.append(f"[{k}] scale {r.scale}, generator {gen}")
        text += ["    " + line for line in _matrix_text(r.matrix.entries)]
    rows = [(r.m, r.index, r.scale, json.dumps(r.to_json()["generator"]), json.dumps(r.to_json()["hnf"]))
            for r in recs]
    return payload, text, (("m", "index", "scale", "generator", "hnf"), rows)


def cmd_verify(m: int, max_m=sslgen.DEFAULT_MAX_M, budget=None):
    """Closed form against enumeration against the oracle at index m^2."""
    if m < 1:
        raise InvalidArgument("--m must be positive")
    closed = (counting.f_closed(m), counting.fpr_closed(m))
    recs = sslgen.enumerate_ssls(m, False, max_m=max_m)
    built = (len(recs), sum(1 for r in recs if r.primitive))
    bad = [r for r in recs if not sslgen.verify_ssl(r)]
    note = None
    try:
        brute = oracle.brute_count(oracle.preset("a4"), m * m, budget)
    except BudgetExceeded as e:
        brute, note = None, f"oracle skipped (budget): {e}"
    ok = closed == built and not bad and (brute is None or brute == closed)
    status = "PASS" if ok else "FAIL"
    if ok and note:
        status = "PASS-with-note"
    payload = {"m": m, "index": m * m, "closed_form": list(closed), "construction": list(built),
               "oracle": list(brute) if brute else None, "invalid_records": len(bad),
               "status": status, "note": note}
    b = f"{brute[0]}" if brute else "skipped"
    text = [f"m = {m} (index {m * m}): closed form {closed[0]} = construction {built[0]} = oracle {b}",
            f"primitive: closed form {closed[1]}, construction {built[1]}"
            + (f", oracle {brute[1]}" if brute else ""),
            status + (f" ({note})" if note else "")]
    if not ok:
        raise Mismatch((payload, text, None))
    return payload, text, None


def _check_record(data):
    rec = sslgen.SslRecord.from_json(data)
    return rec.m, sslgen.verify_ssl(rec)


def _check_plain(Z):
    if len(Z) != 4 or any(len(r) != 4 for r in Z):
        raise InvalidArgument("matrix must be 4x4")
    det = abs(linalg.det_int(Z))
    m = isqrt(det)
    if not det or m * m != det:
        return m, sslgen.Verification(False, "det_not_square", False)
    return m, sslgen.verify_matrix(Z, m)


def cmd_verify_matrix(path: str):
    """A JSON record, a JSON list of records, a JSON matrix, or 4 lines of 4 integers."""
    with open(path, encoding="utf-8") as fh:
        raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict):
        checks = [_check_record(data)]
    elif isinstance(data, list) and data and all(isinstance(x, dict) for x in data):
        checks = [_check_record(x) for x in data]
    else:
        checks = [_check_plain(data if isinstance(data, list) else sslgen.parse_matrix_text(raw))]
    results = [{"m": m, "ok": r.ok, "reason": r.reason, "primitive": r.primitive} for m, r in checks]
    ok = all(r["ok"] for r in results)
    payload = dict(results[0]) if len(results) == 1 else {"ok": ok, "results": results}
    text = [f"{'PASS' if r['ok'] else 'FAIL'}: {r['reason']} (m = {r['m']}, primitive = {r['primitive']})"
            for r in results]
    if not ok:
        raise Mismatch((payload, text, None))
    return payload, text, None


def cmd_twists():
    maps = icosian.classify_twist_maps()
    info = icosian.symmetry_group_structure()
    a4_type = [
        [[x.to_fraction() for x in r] for r in icosian.twist_fixed_lattice(d).gram()] == icosian.A4_GRAM
        for d in maps
    ]
    payload = {
        "twist_maps": [dict(d.to_json(), fixed_lattice_is_A4=t, a2_roots=len(icosian.a2_subsystem(d)))
                       for d, t in zip(maps, a4_type)],
        "count": len(maps),
        "group_order": info["group_order"],
        "element_orders": {str(k): v for k, v in info["element_orders"].items()},
        "has_order_4": info["has_order_4"],
        "z": info["z"].to_json(),
        "z_cubed_is_minus_one": info["z_cubed_is_minus_one"],
        "T_z_order": info["T_z_order"],
        "orbit_size": info["orbit_size"],
        "orbit_containing_one": info["orbit_containing_one"],
    }
    text = [f"{len(maps)} twist maps preserving I"]
    for k, (d, t) in enumerate(zip(maps, a4_type), 1):
        text.append(f"  [{k}] a = {d.a}  witness = {d.witness}  fixed lattice A4: {t}")
    text += [
        f"group generated by inner automorphisms and the twist: order {info['group_order']}",
        "element orders: " + ", ".join(f"{k}:{v}" for k, v in info["element_orders"].items()),
        f"order 4 element present: {info['has_order_4']}",
        f"z = {info['z']}, z^3 = -1: {info['z_cubed_is_minus_one']}, T_z has order {info['T_z_order']}",
        f"orbit of L under x -> a x b: {info['orbit_size']} lattices, {info['orbit_containing_one']} contain 1",
    ]
    return payload, text, None


_SYSTEMS = {"H4": icosian.roots_H4, "A4": icosian.roots_A4, "H3": icosian.roots_H3}


def cmd_roots(system: str):
    try:
        roots = _SYSTEMS[system.upper()]()
    except KeyError:
        raise InvalidArgument(f"unknown root system {system!r}; expected H4, A4 or H3") from None
    payload = {"system": system.upper(), "count": len(roots), "roots": [r.to_json() for r in roots]}
    text = [f"{system.upper()}: {len(roots)} roots"] + [repr(r) for r in roots]
    rows = [tuple(str(c) for c in r.coords) for r in roots]
    return payload, text, (("x0", "x1", "x2", "x3"), rows)


def cmd_asymptotics(x: int, digits: int = 6):
    if x < 1:
        raise InvalidArgument("--x must be positive")
    rep = counting.asymptotic_report(x, digits)
    payload = rep.to_json()
    text = [f"rho = {rep.rho}", f"F({x}) = {rep.F}", f"rho x^2 / 2 = {rep.main_term}",
            f"ratio = {rep.ratio}"]
    return payload, text, (("x", "F", "main_term", "ratio", "rho"),
                           [(x, rep.F, str(rep.main_term), str(rep.ratio), str(rep.rho))])


def cmd_series(lattice: str, terms: int):
    if terms < 1:
        raise InvalidArgument("--terms must be positive")
    if lattice.upper() == "A4":
        seq = counting.f_via_convolution(terms)
    else:
        seq = counting.related_series(lattice, terms)
    payload = seq.to_json()
    text = [f"{seq.label} ({seq.variable})"] + [f"{n:>6} {v}" for n, v in enumerate(seq, 1)]
    return payload, text, (("n", "a_n"), list(enumerate(seq, 1)))


def cmd_oracle(gram: oracle.GramMatrix, index: int, budget=None):
    if index < 1:
        raise InvalidArgument("index must be positive")
    total, prim = oracle.brute_count(gram, index, budget)
    payload = {"gram": gram.to_json(), "index": index, "total": total, "primitive": prim}
    text = [f"index {index}: {total} similar sublattices, {prim} primitive"]
    return payload, text, (("index", "total", "primitive"), [(index, total, prim)])


# ---- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--budget-override", action="store_true",
                        help="lift the default enumeration and oracle budgets")

    p = argparse.ArgumentParser(prog="ssla4", description="Similar sublattices of the A4 root lattice.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="table of f(m) and f_pr(m)")
    c.add_argument("--max-m", type=int, default=36)
    c.add_argument("--primitive", action="store_true", help="suppress rows with f_pr(m) = 0")
    c.add_argument("--include-zero", action="store_true", help="keep rows with f(m) = 0")

    e = sub.add_parser("enumerate", parents=[common], help="list similar sublattices of index m^2")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--primitive", action="store_true")
    e.add_argument("--max-m", type=int, default=sslgen.DEFAULT_MAX_M)

    v = sub.add_parser("verify", parents=[common], help="three-way check, or check one matrix")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--matrix", metavar="FILE", help="JSON record or 4 lines of 4 integers")
    v.add_argument("--max-m", type=int, default=sslgen.DEFAULT_MAX_M)

    sub.add_parser("twists", parents=[common], help="the ten twist maps and their group")

    r = sub.add_parser("roots", parents=[common], help="list a root system")
    r.add_argument("--lattice", default="H4", help="H4, A4 or H3")

    a = sub.add_parser("asymptotics", parents=[common], help="summatory function against rho x^2/2")
    a.add_argument("--x", type=int, default=10 ** 5)
    a.add_argument("--digits", type=int, default=6)

    s = sub.add_parser("series", parents=[common], help="Dirichlet series coefficients")
    s.add_argument("--lattice", default="A4", help="A1, A2, A3, Zsquare or A4")
    s.add_argument("--terms", type=int, default=36)

    o = sub.add_parser("oracle", parents=[common], help="brute-force count for a Gram matrix")
    src = o.add_mutually_exclusive_group()
    src.add_argument("--lattice", default=None, help="preset: " + ", ".join(sorted(oracle.PRESETS)))
    src.add_argument("--gram", metavar="FILE", help="JSON array of rows, entries int or 'p/q'")
    idx = o.add_mutually_exclusive_group(required=True)
    idx.add_argument("--index", type=int)
    idx.add_argument("--m", type=int, help="use index m^2")
    return p


def config_from_args(args) -> RunConfig:
    opts = vars(args).copy()
    mm = opts.get("max_m")
    if mm is not None and mm > sslgen.DEFAULT_MAX_M and opts.get("command") != "count" \
            and not opts.get("budget_override"):
        raise InvalidArgument(f"--max-m above {sslgen.DEFAULT_MAX_M} needs --budget-override")
    return RunConfig(args.command, args.format, args.out, opts)


def dispatch(cfg: RunConfig):
    args = argparse.Namespace(**cfg.options)
    max_m = None if args.budget_override else getattr(args, "max_m", None)
    budget = float("inf") if args.budget_override else None
    cmd = args.command
    if cmd == "count":
        return cmd_count(args.max_m, args.primitive, args.include_zero)
    if cmd == "enumerate":
        return cmd_enumerate(args.m, args.primitive, max_m)
    if cmd == "verify":
        if args.matrix:
            return cmd_verify_matrix(args.matrix)
        return cmd_verify(args.m, max_m, budget)
    if cmd == "twists":
        return cmd_twists()
    if cmd == "roots":
        return cmd_roots(args.lattice)
    if cmd == "asymptotics":
        return cmd_asymptotics(args.x, args.digits)
    if cmd == "series":
        return cmd_series(args.lattice, args.terms)
    if cmd == "oracle":
        gram = oracle.GramMatrix.load(args.gram) if args.gram else oracle.preset(args.lattice or "a4")
        n = args.index if args.index is not None else args.m * args.m
        return cmd_oracle(gram, n, budget)
    raise InvalidArgument(f"unknown command {cmd}")


def render(result, fmt: str, command: str) -> str:
    payload, text, table = result
    if fmt == "json":
        return json.dumps(dict(payload, command=command, schema_version=SCHEMA_VERSION), sort_keys=True) + "\n"
    if fmt == "csv":
        if table is None:
            raise InvalidArgument(f"csv output is not available for {command}")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table[0])
        w.writerows(table[1])
        return buf.getvalue()
    return "\n".join(text) + "\n"


def _emit(s: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(s)
    else:
        sys.stdout.write(s)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        cfg = config_from_args(args)
        _emit(render(dispatch(cfg), cfg.fmt, cfg.command), cfg.out)
        return EXIT_OK
    except Mismatch as e:
        try:
            _emit(render(e.payload, args.format, args.command), args.out)
        except InvalidArgument:
            _emit(render(e.payload, "text", args.command), args.out)
        return EXIT_MISMATCH
    except BudgetExceeded as e:
        print(f"ssla4: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidArgument, OSError) as e:
        print(f"ssla4: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SSLError as e:
        print(f"ssla4: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
