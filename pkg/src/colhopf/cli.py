"""Command line entry point: ``colhopf <verb> [flags]``.

Exit status 0 when every requested check passes, 1 when one fails (the
report carries a witness), 2 on usage or size-guard errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import nullcontext
from fractions import Fraction
from math import comb, factorial

from . import equivalence as eq
from . import hopf, qsym, theta
from .compositions import count_lifted_classes, peak_compositions
from .groups import ColourGroup, parse_group
from .statistics import UnsupportedKindError, canonical_stat, image
from .universe import SizeGuardError, forced, over_limit, size_estimate

VERBS = ("classes", "check", "constants", "closure", "theta", "qsym", "odd", "dims", "hopf-axioms")


class UsageError(Exception):
    pass


def _json_default(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _report(command, params, results, ok) -> dict:
    return {"command": command, "params": params, "results": results, "verdict": "PASS" if ok else "FAIL"}


def _all_pass(results) -> bool:
    return all(r.get("verdict", "PASS") == "PASS" for r in results)


def _table_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n} is required for {args.verb}")


def _guard(args, n: int, G: ColourGroup):
    """Size guard on ``G_n``; with --force print the estimate and go on."""
    msg = over_limit(n, G)
    if msg:
        if not args.force:
            raise SizeGuardError(msg)
        est = size_estimate(n, G)
        print(f"# forcing n={n}, group {G}: {est['elements']} elements, about {est['bytes'] / 2**20:.1f} MiB",
              file=sys.stderr)


# ------------------------------------------------------------------- verbs

def cmd_classes(args, G):
    _need(args, "n")
    _guard(args, args.n, G)
    if args.relation:
        part = eq.classes(args.relation, args.n, G)
    elif args.stat:
        part = eq.fibers(args.stat, args.n, G)
    else:
        raise UsageError("classes needs --relation or --stat")
    data = part.to_json()
    params = {"relation": args.relation, "stat": args.stat, "n": args.n, "group": str(G)}
    rows = [(json.dumps(a, separators=(",", ":")), k) for k, b in enumerate(data["blocks"]) for a in b]
    results = [{"blocks": len(data["blocks"]), "partition": data}]
    return _report("classes", params, results, True), _table_csv(["element", "block"], rows)


def cmd_check(args, G):
    if args.replay:
        return _replay(args)
    params = {"group": str(G)}
    if args.coincide:
        _need(args, "n")
        _guard(args, args.n, G)
        rep = eq.check_coincidence(args.coincide, args.n, G)
    elif args.psi:
        _need(args, "n")
        _guard(args, args.n, G)
        rep = eq.check_psi(args.psi, args.n, G)
    elif args.property:
        spec = args.stat or args.relation
        if spec is None:
            raise UsageError("--property needs --stat or --relation")
        if args.m is not None:
            _need(args, "n")
            _guard(args, args.n + args.m, G)
            rep = eq.check_property(spec, args.property, args.n, args.m, G)
        else:
            total = args.nmax if args.nmax is not None else args.n
            if total is None:
                raise UsageError("--property needs --n and --m, or --nmax")
            _guard(args, total, G)
            rep = eq.check_property_upto(spec, args.property, total, G)
    elif args.relation and args.stat:
        _need(args, "n")
        _guard(args, args.n, G)
        rep = eq.check_connected(args.relation, args.stat, args.n, G)
    else:
        raise UsageError("check needs --relation with --stat, --property, --coincide, --psi or --replay")
    r = rep.to_json()
    params.update(rep.params)
    return _report("check", params, [r], rep.verdict), _table_csv(
        ["property", "verdict", "witness"], [(r["property"], r["verdict"], json.dumps(r["witness"]))])


def _replay(args):
    with open(args.replay) as fh:
        data = json.load(fh)
    reports = data["results"] if "results" in data else [data]
    results = []
    for r in reports:
        if r.get("verdict") != "FAIL":
            continue
        G = parse_group(r["params"].get("group", "triv"))
        still = eq.replay(r, G)
        results.append({"property": r["property"], "params": r["params"], "witness": r["witness"],
                        "reproduced": still, "verdict": "FAIL" if still else "PASS"})
    if not results:
        raise UsageError("no failed report with a witness to replay")
    return _report("check", {"replay": args.replay}, results, _all_pass(results)), _table_csv(
        ["property", "reproduced"], [(r["property"], r["reproduced"]) for r in results])


def cmd_constants(args, G):
    _need(args, "stat", "n")
    mode = args.mode or "internal"
    if mode == "external":
        _need(args, "m")
        degrees = (args.n, args.m)
        _guard(args, args.n + args.m, G)
    else:
        degrees = args.n
        _guard(args, args.n, G)
    try:
        T = hopf.structure_constants(args.stat, mode, degrees, G)
    except hopf.NotInSpan as exc:
        params = {"stat": args.stat, "mode": mode, "degrees": degrees, "group": str(G)}
        res = [{"verdict": "FAIL", "reason": str(exc), "witness": exc.witness}]
        return _report("constants", params, res, False), _table_csv(["verdict", "reason"], [("FAIL", str(exc))])
    params = {"stat": args.stat, "mode": mode, "degrees": list(T.degrees), "group": str(G)}
    return _report("constants", params, [T.to_json()], True), T.to_csv()


def cmd_closure(args, G):
    _need(args, "stat")
    modes = [args.mode] if args.mode else list(hopf.MODES)
    degs = [args.n] if args.n is not None else list(range(1, (args.nmax or 3) + 1))
    _guard(args, max(degs), G)
    results = []
    for mode in modes:
        for n in degs:
            if mode == "external" and n < 2:
                continue
            r = hopf.verify_closure(args.stat, mode, n, G).to_json()
            if r.get("details"):
                r["details"].pop("table", None)
            results.append(r)
    rows = [(r["params"]["mode"], r["params"]["n"], r["verdict"], (r.get("details") or {}).get("zero_one", ""))
            for r in results]
    params = {"stat": args.stat, "modes": modes, "degrees": degs, "group": str(G)}
    return _report("closure", params, results, _all_pass(results)), _table_csv(
        ["mode", "degree", "verdict", "zero_one"], rows)


def cmd_theta(args, G):
    nmax = args.nmax or 4
    scalar = Fraction(args.scalar)
    results = [
        {"check": "closed_form", **theta.check_closed_form(nmax, G, scalar)},
        {"check": "hopf_morphism", **theta.check_hopf_morphism(nmax, G, scalar)},
        {"check": "image", **theta.image_report(nmax, G, scalar)},
        {"check": "adjoint", **theta.check_adjoint(nmax, G)},
        {"check": "dual_image", **theta.dual_image_report(nmax, G)},
    ]
    params = {"nmax": nmax, "group": str(G), "scalar": str(scalar)}
    return _report("theta", params, results, _all_pass(results)), _table_csv(
        ["check", "verdict"], [(r["check"], r["verdict"]) for r in results])


def _character(args, G, nmax):
    return (qsym.zeta_eval if args.zeta == "evaluation" else qsym.zeta_q)(G, nmax)


def cmd_qsym(args, G):
    nmax = args.nmax or 3
    z = _character(args, G, nmax)
    results = [
        {"check": "duality", **qsym.verify_duality(nmax, G, args.q)},
        {"check": "multiplicative", **qsym.check_multiplicative(z)},
        {"check": "convolution_inverse", **qsym.check_inverse(z)},
    ]
    params = {"nmax": nmax, "group": str(G), "q": args.q, "zeta": args.zeta}
    return _report("qsym", params, results, _all_pass(results)), _table_csv(
        ["check", "verdict"], [(r["check"], r["verdict"]) for r in results])


def cmd_odd(args, G):
    nmax = args.nmax or 3
    if G.order ** nmax * factorial(nmax) > 10 ** 6 and not args.force:
        raise SizeGuardError(f"odd subalgebra with nmax={nmax} over {G} is too large; pass --force")
    z = _character(args, G, nmax)
    rep = qsym.odd_subalgebra(z, nmax, rule=args.rule)
    params = {"nmax": nmax, "group": str(G), "zeta": args.zeta, "rule": args.rule}
    rows = [(d["n"], d["dimension"], d["expected"], d["verdict"]) for d in rep["degrees"]]
    return _report("odd", params, [rep], rep["verdict"] == "PASS"), _table_csv(
        ["degree", "computed", "expected", "verdict"], rows)


def _base_count(kind: str, n: int) -> int:
    if kind == "D":
        return 2 ** (n - 1)
    if kind == "IP":
        return len(peak_compositions(n, "interior"))
    if kind == "EP":
        return len(peak_compositions(n, "exterior"))
    if kind == "T":
        return comb(2 * n, n) // (n + 1)
    raise UnsupportedKindError(f"no dimension formula for {kind!r}")


def expected_count(kind: str, n: int, G: ColourGroup) -> int:
    """Number of values of the (lifted) statistic on ``G_n`` by formula."""
    kind = canonical_stat(kind)
    if kind == "DESB":
        return 2 ** n
    return count_lifted_classes(n, G, lambda p: _base_count(kind, p))


def cmd_dims(args, G):
    _need(args, "stat")
    nmax = args.nmax or args.n or 4
    _guard(args, nmax, G)
    rows = []
    for n in range(1, nmax + 1):
        got = len(image(args.stat, n, G))
        want = expected_count(args.stat, n, G)
        rows.append({"n": n, "computed": got, "expected": want, "verdict": "PASS" if got == want else "FAIL"})
    params = {"stat": canonical_stat(args.stat), "nmax": nmax, "group": str(G)}
    return _report("dims", params, rows, _all_pass(rows)), _table_csv(
        ["degree", "computed", "expected", "verdict"], [tuple(r.values()) for r in rows])


def cmd_hopf_axioms(args, G):
    nmax = args.nmax or 3
    _guard(args, nmax, G)
    rep = hopf.check_hopf_axioms(nmax, G)
    params = {"nmax": nmax, "group": str(G)}
    return _report("hopf-axioms", params, [rep], rep["verdict"] == "PASS"), _table_csv(
        ["axiom", "checked"], sorted((rep.get("checked") or {}).items()))


COMMANDS = {
    "classes": cmd_classes, "check": cmd_check, "constants": cmd_constants, "closure": cmd_closure,
    "theta": cmd_theta, "qsym": cmd_qsym, "odd": cmd_odd, "dims": cmd_dims, "hopf-axioms": cmd_hopf_axioms,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colhopf", description="Coloured permutation statistics and their Hopf algebras.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--group", default="triv", help='"triv", "Z2", "Z3", "Z2xZ2", ...')
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--stat", help="D, IP, EP, T or DESB")
    p.add_argument("--relation", help='D, IP, EP, SYLV, TOY12 or a lift such as "LiftCong(IP)"')
    p.add_argument("--property", choices=("IP", "RP", "FP"))
    p.add_argument("--coincide", metavar="BASE", help="compare LiftCong and LiftBlock of a base relation")
    p.add_argument("--psi", metavar="KIND", help="check the ψ involution of kind D, IP, EP or IPG")
    p.add_argument("--mode", choices=hopf.MODES)
    p.add_argument("--scalar", default="2")
    p.add_argument("--q", type=int, help="truncation for polynomial checks")
    p.add_argument("--zeta", choices=("display", "evaluation"), default="display")
    p.add_argument("--rule", choices=("intersection", "sum"), default="intersection")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--force", action="store_true", help="override size guards")
    p.add_argument("--replay", metavar="REPORT", help="re-run only the witness of a saved failing report")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        G = parse_group(args.group)
        cm = forced() if args.force else nullcontext()
        with cm:
            report, table = COMMANDS[args.verb](args, G)
    except (UsageError, ValueError, SizeGuardError) as exc:
        parser.print_usage(sys.stderr)
        print(f"colhopf {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    text = table if args.format == "csv" else json.dumps(report, indent=2, default=_json_default) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report["verdict"] == "FAIL":
        print("FAIL", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
