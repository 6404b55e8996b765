"""Command-line front end.

Subcommands: analyze, aux, cb, fixed, chambers, stab-table, triangle,
stability, moment-check, tau, verify, export. Exit codes: 0 on success,
1 on verification failure, 2 on input errors. All sampled output embeds
the seed it was produced from.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .envelopes import (
    chambers,
    faces,
    stab_degree_table,
    torus_roots,
    triangle_split_check,
)
from .exactlinalg import frac
from .jsonio import (
    dumps_canonical,
    frac_to_json,
    quiver_from_json,
    quiver_to_json,
    rep_from_json,
)
from .quiver import DimData, node_key
from .reps import (
    check_compare_moment,
    flag_check,
    tau_charpoly,
)
from .sampling import (
    random_leg_stable_aux,
    random_scalar_moment_leg,
)
from .stability import (
    MixedSignTheta,
    check_stability_transfer,
    destabilizer_search,
    stability_report,
    verify_witness,
)
from .surgery import (
    build_add,
    build_aux,
    build_rem,
    crawley_boevey,
    default_delta,
    dim_quiver_variety,
    dim_universal_nakajima,
    half_quiver,
    hgamma_data,
    lift_stability,
)
from .torus import fixed_components, fixed_self_dual_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _load_doc(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(str(e))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: parse error at line {e.lineno}, column {e.colno}: {e.msg}")


def _load_problem(path: str):
    doc = _load_doc(path)
    try:
        return quiver_from_json(doc)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"{path}: {e}")


def _emit(payload: dict, fmt: str, lines=None):
    if fmt == "json":
        sys.stdout.write(dumps_canonical(payload))
    else:
        for line in lines if lines is not None else [dumps_canonical(payload).rstrip()]:
            print(line)


def _parse_vector(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p.strip() != "")


def _parse_window(text: str) -> tuple[int, int]:
    lo, hi = text.split("..")
    return int(lo), int(hi)


def _parse_theta(text: str, q) -> dict:
    parts = [frac(p) for p in text.split(",")]
    if len(parts) != len(q.nodes):
        raise InputError(f"theta needs {len(q.nodes)} entries")
    return dict(zip(q.nodes, parts))


# ---------------------------------------------------------------------------
# analyze / surgery commands

def cmd_analyze(args) -> int:
    q, split, dims, _, _ = _load_problem(args.file)
    payload: dict = {
        "adjacency": [list(r) for r in q.adjacency_matrix()],
        "cartan": [list(r) for r in q.cartan_matrix()],
        "symmetric": q.is_symmetric(),
    }
    lines = [
        f"nodes: {', '.join(node_key(n) for n in q.nodes)}",
        f"adjacency: {payload['adjacency']}",
        f"cartan: {payload['cartan']}",
        f"symmetric: {payload['symmetric']}",
    ]
    if not q.is_symmetric():
        lines.append("asymmetric adjacency: leg construction skipped")
        payload["note"] = "asymmetric adjacency: leg construction skipped"
        _emit(payload, args.format, lines)
        return EXIT_OK
    if dims is not None:
        aux = build_aux(q, split, dims)
        hq, hdims = half_quiver(aux)
        dim_x = dim_quiver_variety(q, dims)
        dim_n = dim_universal_nakajima(hq, hdims)
        hg = hgamma_data(q, split, dims)
        payload.update(
            {
                "dim_X": dim_x,
                "dim_H": hg.dim_h,
                "gamma_factors": list(hg.gamma_factors),
                "dim_L": hg.dim_l,
                "dim_N_aux": dim_n,
                "fiber_dim": dim_x - hg.dim_h,
                "delta_default": frac_to_json(default_delta(aux)),
                "consistency": f"{dim_x} = {dim_n} + {hg.dim_l}",
                "consistency_ok": dim_x == dim_n + hg.dim_l,
            }
        )
        lines += [
            f"dim X = {dim_x}",
            f"dim H = {hg.dim_h}, Gamma = {' x '.join(f'S_{m}' for m in hg.gamma_factors)}, dim L = {hg.dim_l}",
            f"dim N(aux) = {dim_n}",
            f"fiber dim (dim X - dim H) = {dim_x - hg.dim_h}",
            f"delta default = {frac_to_json(default_delta(aux))}",
            f"consistency: {dim_x} = {dim_n} + {hg.dim_l} ({'ok' if dim_x == dim_n + hg.dim_l else 'MISMATCH'})",
        ]
    _emit(payload, args.format, lines)
    if dims is not None and not payload.get("consistency_ok", True):
        return EXIT_FAIL
    return EXIT_OK


def _surgery_payload(args, what: str) -> dict:
    q, split, dims, _, _ = _load_problem(args.file)
    if what in ("aux", "cb") and dims is None:
        raise InputError("dimension data required")
    if what == "add":
        aq, asplit = build_add(q, split)
        return quiver_to_json(aq, asplit, dims)
    if what == "rem":
        rq, rsplit = build_rem(q, split)
        return quiver_to_json(rq, rsplit, dims)
    if what == "aux":
        aux = build_aux(q, split, dims)
        doc = quiver_to_json(aux.quiver, aux.split, DimData(aux.v, aux.d))
        doc["leg_index"] = {
            str(l): [node_key(n) for n in chain] for l, chain in aux.leg_index.items()
        }
        doc["new_node_total"] = aux.new_node_total
        doc["delta_default"] = frac_to_json(default_delta(aux))
        return doc
    if what == "cb":
        if not dims.theta:
            raise InputError("theta required for the framing absorption")
        cb = crawley_boevey(q, split, dims)
        doc = quiver_to_json(cb.quiver, cb.split)
        doc["v"] = {node_key(n): cb.v[n] for n in cb.quiver.nodes}
        doc["theta"] = {node_key(n): frac_to_json(cb.theta[n]) for n in cb.quiver.nodes}
        return doc
    raise InputError(f"unknown artifact {what!r}")


def cmd_aux(args) -> int:
    _emit(_surgery_payload(args, "aux"), "json")
    return EXIT_OK


def cmd_cb(args) -> int:
    _emit(_surgery_payload(args, "cb"), "json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# torus commands

def _candidates_for(args):
    q, split, dims, action, sigma_doc = _load_problem(args.file)
    if dims is None:
        raise InputError("dimension data required")
    if action is None:
        raise InputError("no torus action in the input file")
    sigma = _parse_vector(args.sigma) if args.sigma else sigma_doc
    if sigma is None:
        raise InputError("no cocharacter: give --sigma or a 'sigma' entry")
    window = _parse_window(args.window) if getattr(args, "window", None) else None
    cands = fixed_components(q, split, dims, action, sigma, window)
    return q, split, dims, action, sigma, cands


def _candidate_doc(cand) -> dict:
    doc = quiver_to_json(cand.quiver, cand.split, DimData(cand.v, cand.d))
    doc["name"] = cand.name()
    doc["dim_fixed"] = cand.dim_fixed()
    doc["tangent"] = [
        {"char": list(ch), "mult": m} for ch, m in sorted(cand.tangent().items())
    ]
    doc["self_dual"] = fixed_self_dual_check(cand)
    return doc


def cmd_fixed(args) -> int:
    *_, cands = _candidates_for(args)
    payload = {"count": len(cands), "candidates": [_candidate_doc(c) for c in cands]}
    lines = [f"{len(cands)} candidates"] + [
        f"  {c.name()}  dimF={c.dim_fixed()}" for c in cands
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def _roots_for(args):
    if getattr(args, "roots", None):
        roots = tuple(
            tuple(int(x) for x in part.split(",")) for part in args.roots.split(";")
        )
        rank = len(roots[0]) if roots else 0
        return roots, rank, None
    q, split, dims, action, sigma, cands = _candidates_for(args)
    return torus_roots(cands), action.rank, cands


def cmd_chambers(args) -> int:
    roots, rank, _ = _roots_for(args)
    chs = chambers(roots, rank)
    payload = {
        "roots": [list(r) for r in roots],
        "count": len(chs),
        "chambers": [
            {"signs": list(c.signs), "point": [frac_to_json(x) for x in c.point]}
            for c in chs
        ],
    }
    lines = [f"{len(chs)} chambers over {len(roots)} roots"] + [
        f"  signs={c.signs} point=({', '.join(frac_to_json(x) for x in c.point)})"
        for c in chs
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_stab_table(args) -> int:
    q, split, dims, action, sigma, cands = _candidates_for(args)
    xi = _parse_vector(args.xi) if args.xi else sigma
    table = stab_degree_table(q, split, dims, cands, xi)
    payload = {
        "dim_ambient": table.dim_ambient,
        "dim_base": table.dim_base,
        "xi": list(xi),
        "rows": [
            {
                "name": r.name,
                "dim_fixed": r.dim_fixed,
                "rank_minus": r.rank_minus,
                "rank_plus": r.rank_plus,
                "attracting_dim": frac_to_json(r.attracting_dim),
                "consistent": r.consistent,
            }
            for r in table.rows
        ],
        "pairs": [
            {
                "first": p.first,
                "second": p.second,
                "off_diagonal_bound": frac_to_json(p.off_diagonal_bound),
                "fiber_product_bound": frac_to_json(p.fiber_product_bound),
            }
            for p in table.pairs
        ],
    }
    lines = [f"dim X = {table.dim_ambient}"] + [
        f"  {r.name}: dimF={r.dim_fixed} rankN-={r.rank_minus} "
        f"attr={frac_to_json(r.attracting_dim)} consistent={r.consistent}"
        for r in table.rows
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK if all(r.consistent for r in table.rows) else EXIT_FAIL


def cmd_triangle(args) -> int:
    q, split, dims, action, sigma, cands = _candidates_for(args)
    roots = torus_roots(cands)
    chs = chambers(roots, action.rank)
    checks = failures = 0
    for cand in cands:
        for ch in chs:
            for face in faces(ch):
                checks += 1
                rpt = triangle_split_check(cand, ch, face)
                if not rpt.ok:
                    failures += 1
                    print(
                        f"FAIL {cand.name()} signs={ch.signs} zero={sorted(face.zero_set)} "
                        f"problems={rpt.problems}",
                        file=sys.stderr,
                    )
    payload = {"checks": checks, "failures": failures}
    _emit(payload, args.format, [f"triangle: {checks - failures}/{checks} pass"])
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# representation commands

def _load_rep(path: str):
    doc = _load_doc(path)
    if "quiver" not in doc or "representation" not in doc:
        raise InputError("representation file needs 'quiver' and 'representation'")
    try:
        q, split, dims, action, sigma = quiver_from_json(doc["quiver"])
        if dims is None:
            raise InputError("dimension data required")
        rep, t = rep_from_json(q, doc["representation"])
        return q, split, dims, rep, t
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"{path}: {e}")


def cmd_stability(args) -> int:
    q, split, dims, rep, _ = _load_rep(args.file)
    theta = _parse_theta(args.theta, q) if args.theta else dims.theta
    if not theta:
        raise InputError("no stability condition: give --theta or a 'theta' entry")
    payload: dict = {"theta": {node_key(n): frac_to_json(theta[n]) for n in q.nodes}}
    try:
        stable, witness = stability_report(q, dims, rep, theta)
        payload["mode"] = "exact"
        payload["stable"] = stable
        if witness is not None:
            payload["witness"] = {
                "dims": {node_key(n): witness.dims[n] for n in q.nodes},
                "basis": {
                    node_key(n): [[frac_to_json(x) for x in vec] for vec in witness.basis[n]]
                    for n in q.nodes
                },
                "pairing": frac_to_json(witness.pairing),
                "includes_framing": witness.includes_framing,
                "verified": verify_witness(q, dims, rep, theta, witness),
            }
    except MixedSignTheta:
        witness = destabilizer_search(q, dims, rep, theta, trials=args.trials, seed=args.seed)
        payload["mode"] = "search"
        payload["seed"] = args.seed
        payload["trials"] = args.trials
        if witness is None:
            payload["stable"] = None
            payload["note"] = "no destabilizer found within budget; not a stability proof"
        else:
            payload["stable"] = False
            payload["witness"] = {
                "dims": {node_key(n): witness.dims[n] for n in q.nodes},
                "basis": {
                    node_key(n): [[frac_to_json(x) for x in vec] for vec in witness.basis[n]]
                    for n in q.nodes
                },
                "pairing": frac_to_json(witness.pairing),
                "includes_framing": witness.includes_framing,
                "verified": verify_witness(q, dims, rep, theta, witness),
            }
    lines = [f"mode: {payload['mode']}", f"stable: {payload.get('stable')}"]
    if "witness" in payload:
        lines.append(f"witness dims: {payload['witness']['dims']}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_tau(args) -> int:
    q, split, dims, rep, _ = _load_rep(args.file)
    point = tau_charpoly(q, split, dims, rep)
    payload = {
        "loops": {
            str(l): [frac_to_json(c) for c in poly]
            for l, poly in point.loop_polys.items()
        },
        "nodes": {
            node_key(n): [frac_to_json(c) for c in poly]
            for n, poly in point.node_polys.items()
        },
    }
    lines = [f"loop {l}: {v}" for l, v in payload["loops"].items()] + [
        f"node {n}: {v}" for n, v in payload["nodes"].items()
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_moment_check(args) -> int:
    q, split, dims, _, _ = _load_problem(args.file)
    if dims is None:
        raise InputError("dimension data required")
    aux = build_aux(q, split, dims)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.samples):
        rep, t = _random_aux_sample(rng, aux)
        if not check_compare_moment(aux, rep, t):
            failures += 1
    payload = {"samples": args.samples, "failures": failures, "seed": args.seed}
    _emit(payload, args.format, [f"moment: {args.samples - failures}/{args.samples} pass (seed {args.seed})"])
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify suites over the built-in corpus

def _random_aux_sample(rng, aux):
    """Unconstrained rational auxiliary representation plus loop offsets."""
    from .quiver import DimData
    from .sampling import random_fraction, random_representation as _rr

    rep = _rr(rng, aux.quiver, DimData(aux.v, aux.d))
    t = {l: random_fraction(rng) for l in aux.add_split.loops}
    return rep, t


def _suite_moment(samples: int, seed: int, report):
    entries = corpus_mod.corpus()
    ok = True
    for name in corpus_mod.MOMENT_QUIVERS:
        e = entries[name]
        aux = build_aux(e.quiver, e.split, e.dims)
        rng = random.Random(seed)
        failures = 0
        for _ in range(samples):
            rep, t = _random_aux_sample(rng, aux)
            if not check_compare_moment(aux, rep, t):
                failures += 1
        report(f"moment[{name}]: {samples - failures}/{samples} pass")
        ok = ok and failures == 0
    return ok


def _suite_flag(samples: int, seed: int, report):
    ok = True
    for n in (2, 3, 4):
        rng = random.Random(seed + n)
        failures = 0
        for _ in range(samples):
            cs, ds = random_scalar_moment_leg(rng, n)
            t = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
            rpt = flag_check(n, cs, ds, t)
            if not rpt.ok:
                failures += 1
        report(f"flag[n={n}]: {samples - failures}/{samples} pass")
        ok = ok and failures == 0
    return ok


def _suite_transfer(samples: int, seed: int, report, delta=None):
    entries = corpus_mod.corpus()
    ok = True
    for name in corpus_mod.TRANSFER_QUIVERS:
        e = entries[name]
        aux = build_aux(e.quiver, e.split, e.dims)
        if delta is not None:
            lift_stability({n: 1 for n in e.quiver.nodes}, aux, delta)  # validates
        rng = random.Random(seed)
        xi = {n: Fraction(1) for n in e.quiver.nodes}
        failures = 0
        for _ in range(samples):
            rep, t = random_leg_stable_aux(rng, aux)
            rpt = check_stability_transfer(aux, rep, t, xi, delta)
            if not rpt.inclusion_ok:
                failures += 1
                report(
                    f"  VIOLATION [{name}]: lhs={rpt.lhs_stable} rhs={rpt.rhs_stable} "
                    f"lhs_witness={rpt.lhs_witness and rpt.lhs_witness.dims} "
                    f"rhs_witness={rpt.rhs_witness and rpt.rhs_witness.dims}"
                )
        report(f"transfer[{name}]: {samples - failures}/{samples} pass")
        ok = ok and failures == 0
    return ok


def _suite_triangle(report):
    entries = corpus_mod.corpus()
    ok = True
    for name in corpus_mod.ACTION_ENTRIES:
        e = entries[name]
        cands = fixed_components(e.quiver, e.split, e.dims, e.action, e.sigma, e.window)
        roots = torus_roots(cands)
        chs = chambers(roots, e.action.rank)
        checks = failures = 0
        for cand in cands:
            for ch in chs:
                for face in faces(ch):
                    checks += 1
                    if not triangle_split_check(cand, ch, face).ok:
                        failures += 1
        report(f"triangle[{name}]: {checks - failures}/{checks} pass")
        ok = ok and failures == 0
    return ok


def cmd_verify(args) -> int:
    suites = ("moment", "flag", "transfer", "triangle")
    if args.suite != "all" and args.suite not in suites:
        raise InputError(f"unknown suite {args.suite!r}; choose from {suites + ('all',)}")
    if args.delta is not None:
        # validate the override before running anything
        entries = corpus_mod.corpus()
        for name in corpus_mod.TRANSFER_QUIVERS:
            e = entries[name]
            aux = build_aux(e.quiver, e.split, e.dims)
            try:
                lift_stability({n: 1 for n in e.quiver.nodes}, aux, frac(args.delta))
            except ValueError as exc:
                raise InputError(f"delta override rejected for {name}: {exc}")
    lines: list[str] = []
    report = lines.append
    ok = True
    run = args.suite
    if run in ("moment", "all"):
        ok = _suite_moment(args.samples, args.seed, report) and ok
    if run in ("flag", "all"):
        ok = _suite_flag(args.samples, args.seed, report) and ok
    if run in ("transfer", "all"):
        delta = frac(args.delta) if args.delta is not None else None
        ok = _suite_transfer(args.samples, args.seed, report, delta) and ok
    if run in ("triangle", "all"):
        ok = _suite_triangle(report) and ok
    payload = {"suite": args.suite, "seed": args.seed, "samples": args.samples,
               "ok": ok, "log": lines}
    _emit(payload, args.format, lines + [f"verify: {'ok' if ok else 'FAILED'} (seed {args.seed})"])
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# export

def cmd_export(args) -> int:
    what = args.what
    if what in ("add", "rem", "aux", "cb"):
        payload = _surgery_payload(args, what)
    elif what == "fixed":
        *_, cands = _candidates_for(args)
        payload = {"count": len(cands), "candidates": [_candidate_doc(c) for c in cands]}
    elif what == "chambers":
        roots, rank, _ = _roots_for(args)
        chs = chambers(roots, rank)
        payload = {
            "roots": [list(r) for r in roots],
            "chambers": [
                {"signs": list(c.signs), "point": [frac_to_json(x) for x in c.point]}
                for c in chs
            ],
        }
    else:
        raise InputError(f"unknown export target {what!r}")
    text = dumps_canonical(payload)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as e:
            raise InputError(str(e))
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quiverlab",
        description="Exact computations for symmetric quiver varieties.",
    )
    ap.add_argument("--seed", type=int, default=0, help="root seed for sampled output")
    ap.add_argument("--samples", type=int, default=200, help="sample count for property suites")
    ap.add_argument("--format", choices=("json", "table"), default="table")
    # the same globals are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--samples", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="adjacency, symmetry and dimension report")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("aux", parents=[common], help="emit the leg-replaced auxiliary quiver")
    p.add_argument("file")
    p.set_defaults(func=cmd_aux)

    p = sub.add_parser("cb", parents=[common], help="emit the framing-absorbed quiver")
    p.add_argument("file")
    p.set_defaults(func=cmd_cb)

    p = sub.add_parser("fixed", parents=[common], help="fixed-component candidates for a cocharacter")
    p.add_argument("file")
    p.add_argument("--sigma", help="cocharacter, comma separated")
    p.add_argument("--window", help="weight window lo..hi")
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("chambers", parents=[common], help="chamber decomposition of the root arrangement")
    p.add_argument("file", nargs="?")
    p.add_argument("--roots", help="explicit roots, e.g. '1,0;0,1;1,-1'")
    p.add_argument("--sigma", help="cocharacter when deriving roots from the file")
    p.add_argument("--window")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("stab-table", parents=[common], help="attracting-cycle dimension and degree ledger")
    p.add_argument("file")
    p.add_argument("--sigma")
    p.add_argument("--window")
    p.add_argument("--xi", help="chamber point, comma separated; defaults to sigma")
    p.set_defaults(func=cmd_stab_table)

    p = sub.add_parser("triangle", parents=[common], help="weight-level split identity over all faces")
    p.add_argument("file")
    p.add_argument("--sigma")
    p.add_argument("--window")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("stability", parents=[common], help="stability verdict for a representation file")
    p.add_argument("file")
    p.add_argument("--theta", help="stability condition, comma separated")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("moment-check", parents=[common], help="sampled moment comparison on a quiver file")
    p.add_argument("file")
    p.set_defaults(func=cmd_moment_check)

    p = sub.add_parser("tau", parents=[common], help="characteristic-polynomial invariants of a representation")
    p.add_argument("file")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("verify", parents=[common], help="run the built-in corpus property suites")
    p.add_argument("suite", choices=("moment", "flag", "transfer", "triangle", "all"))
    p.add_argument("--delta", help="override the lifted-stability offset")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write a surgery or combinatorics artifact")
    p.add_argument("file", nargs="?")
    p.add_argument("--what", required=True,
                   choices=("add", "rem", "aux", "cb", "fixed", "chambers"))
    p.add_argument("--out")
    p.add_argument("--sigma")
    p.add_argument("--window")
    p.add_argument("--roots")
    p.set_defaults(func=cmd_export)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
