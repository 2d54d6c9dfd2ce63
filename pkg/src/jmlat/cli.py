"""``jmlat`` command line.

Every subcommand prints its JSON result to stdout.  With ``--out DIR`` the
result is also written to ``DIR/<command>.json`` next to a ``manifest.json``
recording how it was produced.  Exit codes: 0 verified, 2 inconclusive,
1 error or failed verification.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bench import COLUMNS, SUITES, bench
from .certificates import dumps, recheck
from .claims import CLAIMS
from .decomposition import DEFAULT_INSTANCES, verify_decomposition
from .errors import JmlatError
from .families import FamilySpec
from .groebner import Budget, groebner_basis, ideal_equal, initial_ideal, is_groebner, audit_digest
from .joinmeet import (
    PaperBasisSpec,
    certify_radical,
    joinmeet_generators,
    paper_basis,
    parse_order,
    search_squarefree_order,
    variables_of,
)
from .lattice import Lattice, find_forbidden_sublattice, is_distributive, is_modular, verify_isomorphism
from .polyring import order_to_dict
from .structure import birkhoff, birkhoff_map, gorenstein_report, join_irreducibles, verify_divisor_isomorphism

OK, FAIL, INCONCLUSIVE = 0, 1, 2

CLAIM_ALIASES = {
    "theorem1": "l2-radical",
    "theorem2": "decomposition",
    "theorem3": "glued",
    "theorem4": "On",
    "theorem5.1": "divisor-iso",
    "theorem6.3": "On-not-gorenstein",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- helpers --------------------------------------------------------------------


class _Run:
    """Per-invocation state: inputs read, order used, budget."""

    def __init__(self, args):
        self.args = args
        self.inputs: dict[str, str] = {}
        self.order_spec = None
        self.budget = Budget(args.budget_pairs, args.budget_degree)

    def lattice(self) -> Lattice:
        path = Path(self.args.lattice)
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read lattice file {path}: {exc.strerror or exc}") from None
        self.inputs[str(path)] = hashlib.sha256(raw).hexdigest()
        try:
            return Lattice.from_json(raw.decode())
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"{path} is not lattice JSON: {exc}") from None

    def order(self, L, default="grevlex"):
        text = self.args.order or default
        order = parse_order(text, L)
        self.order_spec = {"text": text, **order_to_dict(order, variables_of(L))}
        return order


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands ---------------------------------------------------------------------


def cmd_family(run):
    a = run.args
    spec = {
        "lk": lambda: FamilySpec("Lk", a.n),
        "glued": lambda: FamilySpec("L2Glued", (a.n1, a.n2, a.kp, a.i1, a.i2)),
        "on": lambda: FamilySpec("On", (a.n,)),
        "divisor": lambda: FamilySpec("DivisorPQK", (a.p, a.q, a.k)),
    }[a.kind]()
    return OK, spec.build().to_dict()


def cmd_gb(run):
    L = run.lattice()
    order = run.order(L)
    I = joinmeet_generators(L)
    gb = groebner_basis(I, order, run.budget)
    init = initial_ideal(gb)
    check = is_groebner(gb.basis, order, keep_log=True)
    V = I.variables
    cert = {
        "schema": 1,
        "kind": "groebner",
        "lattice": L.to_dict(),
        "order": order.describe(V),
        "order_spec": order_to_dict(order, V),
        "basis": gb.strings(),
        "initial_ideal": init.strings(),
        "stats": gb.stats,
        "spair_audit": {"pairs": check.pairs_checked, "digest": audit_digest(check.log)},
    }
    if run.args.emit == "basis":
        return OK, "\n".join(cert["basis"])
    if run.args.emit == "initial":
        return OK, "\n".join(cert["initial_ideal"])
    return (OK if check.ok else FAIL), cert


_BASIS_SETS = {"paper-l2": "L2Sets", "paper-glued": "GluedSets", "paper-on": "OnGenerators"}


def cmd_verify_basis(run):
    a = run.args
    which = _BASIS_SETS[a.set]
    try:
        if which == "L2Sets":
            fam = FamilySpec("Lk", (a.n, a.m))
        elif which == "GluedSets":
            fam = FamilySpec("L2Glued", (a.n1, a.n2, a.kp, a.i1, a.i2))
        else:
            fam = FamilySpec("On", (a.n,))
    except TypeError:
        raise UsageError(f"missing family parameters for --set {a.set}") from None
    L = fam.build()
    order = run.order(L, "rank-grevlex" if which == "OnGenerators" else "grevlex")
    polys = paper_basis(PaperBasisSpec(fam, which))
    chk = is_groebner(polys, order, keep_log=True)
    generates = ideal_equal(polys, joinmeet_generators(L), order, run.budget)
    V = variables_of(L)
    cert = {
        "schema": 1,
        "kind": "basis-check",
        "family": fam.label(),
        "set": a.set,
        "lattice": L.to_dict(),
        "order_spec": order_to_dict(order, V),
        "polynomials": [p.to_str(order) for p in polys],
        "is_groebner": chk.ok,
        "generates_ideal": generates,
        "failing_pair": list(chk.failing_pair) if chk.failing_pair else None,
        "remainder": chk.remainder.to_str(order) if chk.remainder is not None else None,
        "spair_audit": {"pairs": chk.pairs_checked, "digest": audit_digest(chk.log)},
    }
    return (OK if chk.ok and generates else FAIL), cert


def cmd_radical(run):
    L = run.lattice()
    cert = certify_radical(L, run.order(L), run.budget)
    return (OK if cert.verdict == "RadicalBySquarefree" else INCONCLUSIVE), cert.to_dict()


def cmd_search_order(run):
    L = run.lattice()
    a = run.args
    rep = search_squarefree_order(L, a.strategy, samples=a.samples, seed=a.seed, budget=run.budget)
    return (OK if rep.found else INCONCLUSIVE), rep.to_dict()


def cmd_decompose(run):
    a = run.args
    key = (a.n, a.m, a.r)
    if key not in DEFAULT_INSTANCES and not a.extended:
        raise UsageError(f"{key} is outside the default instance set; pass --extended to run it")
    cert = verify_decomposition(*key, budget=run.budget)
    return (OK if cert.conclusion == "Radical" else FAIL), cert.to_dict()


def cmd_props(run):
    L = run.lattice()
    w = find_forbidden_sublattice(L)
    return OK, {
        "schema": 1,
        "kind": "properties",
        "size": len(L),
        "bottom": L.bottom,
        "top": L.top,
        "distributive": is_distributive(L),
        "modular": is_modular(L),
        "forbidden_sublattice": w.to_dict() if w else None,
    }


def cmd_birkhoff(run):
    L = run.lattice()
    P = join_irreducibles(L)
    B = birkhoff(P)
    iso = verify_isomorphism(L, B, birkhoff_map(L))
    out = {
        "schema": 1,
        "kind": "birkhoff",
        "join_irreducibles": P.to_dict(),
        "order_ideals": B.to_dict(),
        "map": birkhoff_map(L),
        "isomorphism": iso.to_dict(),
    }
    return (OK if iso.verdict else INCONCLUSIVE), out


def cmd_gorenstein(run):
    rep = gorenstein_report(run.lattice())
    if rep.verdict == "NotApplicable":
        return INCONCLUSIVE, rep.to_dict()
    return (OK if rep.rank.validate() else FAIL), rep.to_dict()


def cmd_iso_check(run):
    a = run.args
    cert = verify_divisor_isomorphism(a.k, a.p, a.q)
    return (OK if cert.verdict else FAIL), cert.to_dict()


def cmd_bench(run):
    rows = bench(run.args.suite, run.budget)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return OK, buf.getvalue().rstrip("\n")


def cmd_verify_paper(run):
    a = run.args
    name = CLAIM_ALIASES.get(a.claim, a.claim)
    fn = CLAIMS[name]
    params = {
        "l2-radical": ("n", "m"),
        "decomposition": ("n", "m", "r"),
        "glued": ("n1", "n2", "kp", "i1", "i2"),
        "On": ("n",),
        "divisor-iso": ("k", "p", "q"),
        "On-not-gorenstein": ("n",),
    }[name]
    values = [getattr(a, p) for p in params]
    if any(v is None for v in values):
        raise UsageError(f"claim {a.claim} needs --{' --'.join(params)}")
    kwargs = {"budget": run.budget} if name in ("l2-radical", "decomposition", "glued") else {}
    res = fn(*values, **kwargs)
    return (OK if res.passed else FAIL), res.to_dict()


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("run options")
    g.add_argument("--order", help="grevlex | rank-grevlex | lex | grlex | rank-lex | perm:x,y,... (smallest first)")
    g.add_argument("--budget-pairs", type=int, default=200_000, metavar="N")
    g.add_argument("--budget-degree", type=int, default=40, metavar="D")
    g.add_argument("--out", metavar="DIR", help="write the result and a run manifest here")
    g.add_argument("--recheck", action="store_true", help="replay the certificate's reductions afterwards")

    p = _Parser(prog="jmlat", description="Join-meet ideals of finite lattices: exact verification toolkit.")
    p.add_argument("--version", action="version", version=f"jmlat {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    fam = add("family", cmd_family, "emit a family lattice as JSON")
    fsub = fam.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    fsub.add_parser("lk", parents=[common]).add_argument("--n", type=_ints, required=True, help="chain lengths, e.g. 3,2")
    gl = fsub.add_parser("glued", parents=[common])
    for x in ("n1", "n2", "kp", "i1", "i2"):
        gl.add_argument(f"--{x}", type=int, required=True)
    fsub.add_parser("on", parents=[common]).add_argument("--n", type=int, required=True)
    dv = fsub.add_parser("divisor", parents=[common])
    for x in ("p", "q", "k"):
        dv.add_argument(f"--{x}", type=int, required=True)

    sp = add("gb", cmd_gb, "reduced Groebner basis of a lattice's join-meet ideal")
    sp.add_argument("--lattice", required=True)
    sp.add_argument("--emit", choices=("basis", "initial", "certificate"), default="certificate")

    sp = add("verify-basis", cmd_verify_basis, "check an explicit generator set against Buchberger's criterion")
    sp.add_argument("--set", choices=sorted(_BASIS_SETS), required=True)
    for x in ("n", "m", "n1", "n2", "kp", "i1", "i2"):
        sp.add_argument(f"--{x}", type=int)

    for name, func, help_ in (
        ("radical", cmd_radical, "radicality certificate via a squarefree initial ideal"),
        ("props", cmd_props, "distributivity, modularity and forbidden sublattices"),
        ("birkhoff", cmd_birkhoff, "join-irreducibles and the order-ideal lattice"),
        ("gorenstein", cmd_gorenstein, "pureness test of the join-irreducible poset"),
    ):
        add(name, func, help_).add_argument("--lattice", required=True)

    sp = add("search-order", cmd_search_order, "look for a variable order with squarefree initial ideal")
    sp.add_argument("--lattice", required=True)
    sp.add_argument(
        "--strategy",
        default="all-revlex",
        choices=("all-revlex", "all-permutations-revlex", "all-lex", "all-permutations-lex", "all", "sampled"),
    )
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("decompose", cmd_decompose, "verify the prime decomposition of I for L_3(n,m,r)")
    for x in ("n", "m", "r"):
        sp.add_argument(f"--{x}", type=int, required=True)
    sp.add_argument("--extended", action="store_true", help="allow instances outside the default set")

    sp = add("iso-check", cmd_iso_check, "check the O_2k <-> divisor lattice isomorphism")
    for x in ("k", "p", "q"):
        sp.add_argument(f"--{x}", type=int, required=True)

    sp = add("bench", cmd_bench, "timing table as CSV")
    sp.add_argument("--suite", choices=SUITES, required=True)

    sp = add("verify-paper", cmd_verify_paper, "run one bundled family claim")
    sp.add_argument("--claim", choices=sorted(CLAIMS) + sorted(CLAIM_ALIASES), required=True)
    for x in ("n", "m", "r", "n1", "n2", "kp", "i1", "i2", "k", "p", "q"):
        sp.add_argument(f"--{x}", type=int)
    return p


def _write_outputs(run, argv, result, code, seconds):
    out = Path(run.args.out)
    out.mkdir(parents=True, exist_ok=True)
    is_json = isinstance(result, dict)
    body = dumps(result) if is_json else result + "\n"
    name = run.args.command + (".json" if is_json else ".txt")
    (out / name).write_text(body)
    manifest = {
        "schema": 1,
        "kind": "run-manifest",
        "argv": list(argv),
        "version": __version__,
        "order_spec": run.order_spec,
        "budget": {"max_pairs": run.budget.max_pairs, "max_degree": run.budget.max_degree},
        "inputs": run.inputs,
        "output": {"file": name, "sha256": hashlib.sha256(body.encode()).hexdigest()},
        "exit_code": code,
        "outcome": {OK: "verified", FAIL: "failed", INCONCLUSIVE: "inconclusive"}[code],
        "seconds": round(seconds, 4),
    }
    (out / "manifest.json").write_text(dumps(manifest))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        run = _Run(args)
        start = time.perf_counter()
        code, result = args.func(run)
        seconds = time.perf_counter() - start
        if args.recheck and isinstance(result, dict):
            ok, why = recheck(result)
            print(f"recheck: {why}", file=sys.stderr)
            if not ok:
                code = FAIL
        sys.stdout.write(dumps(result) if isinstance(result, dict) else result + "\n")
        if args.out:
            _write_outputs(run, argv, result, code, seconds)
        return code
    except (UsageError, JmlatError, ValueError) as exc:
        print(f"jmlat: error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    raise SystemExit(main())
