"""Command line entry point: ``cascade-kit <command> TYPE [RANK] [options]``.

Exit codes: 0 success (or certified), 1 some case Inconclusive,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import checker, diophantine, frobenius, integral_pairs, weights
from .biparabolic import StandingHypothesisError, make_biparabolic, subset_cascade
from .frobenius import NotFrobenius
from .rootsys import InvalidRootSystem, RootSystem, build_root_system, parse_type

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2

FROBENIUS_BOREL_TYPES = ["B3", "B4", "B5", "B6", "C2", "C3", "C4", "C5", "C6", "D4", "D6", "G2", "F4", "E7", "E8"]
PARTIAL_BOREL_TYPES = ["D5", "E6"]


class UsageError(ValueError):
    pass


def parse_indices(text: str | None, rank: int, name: str) -> list[int]:
    """'1,2,4' -> [1, 2, 4]; must be strictly increasing inside [1, rank]."""
    if text is None or text.strip() == "":
        return []
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"--{name}: expected comma separated integers, got {text!r}") from exc
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise UsageError(f"--{name}: indices must be strictly increasing")
    if any(not 1 <= v <= rank for v in vals):
        raise UsageError(f"--{name}: indices must lie in [1, {rank}]")
    return vals


def _root_system(args) -> RootSystem:
    letter, rank = parse_type(args.type)
    if args.rank is not None:
        if rank is not None and rank != args.rank:
            raise UsageError(f"type {args.type} already fixes the rank")
        rank = args.rank
    return build_root_system(letter, rank)


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _jsonable(x):
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Output:
    """Collects text lines, TSV rows or a JSON document for one command."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.doc: dict = {}

    def text(self, line: str = "") -> None:
        if self.fmt == "text":
            self.lines.append(line)

    def row(self, *cells) -> None:
        if self.fmt == "tsv":
            self.lines.append("\t".join(str(c) for c in cells))

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(_jsonable(self.doc), indent=2, sort_keys=True)
        return "\n".join(self.lines)


# ---------------------------------------------------------------- commands


def cmd_cascade(args, out: Output) -> int:
    rs = _root_system(args)
    idx = parse_indices(args.indices, rs.rank, "indices") if args.indices else list(range(1, rs.rank + 1))
    casc = subset_cascade(rs, idx)
    out.doc = {"type": rs.label, "indices": idx, "cascade": [list(b) for b in casc.ordered_roots]}
    out.text(f"Kostant cascade of {rs.label} on {idx}:")
    out.row("k", "root", "alpha form")
    for k, b in enumerate(casc.ordered_roots, start=1):
        out.text(f"  {k}: {weights.render_alpha(b)}")
        out.row(k, ",".join(map(str, b)), weights.render_alpha(b))
    return EXIT_OK


def _frobenius_pair(rs: RootSystem, pi1, pi2, out: Output) -> int:
    bp = make_biparabolic(rs, pi1, pi2)
    fh = frobenius.frobenius_h(bp)
    rep = frobenius.integrality_verdict(fh.h, rs, fh.bound)
    vals = list(fh.values)
    out.doc = {"type": rs.label, "pi1": list(bp.pi1), "pi2": list(bp.pi2), "h": vals,
               "integral": rep.integral, "bound": fh.bound, "within_bound": bool(rep.within_bound)}
    out.text(f"{rs.label} pi1={list(bp.pi1)} pi2={list(bp.pi2)}")
    out.text("h(alpha_i) = (" + ", ".join(_q(v) for v in vals) + ")")
    out.text(f"integral: {rep.integral}; max |h| = {_q(fh.max_abs)}; bound m = {fh.bound}")
    out.row("type", "pi1", "pi2", *[f"h(α{i})" for i in range(1, rs.rank + 1)])
    out.row(rs.label, ",".join(map(str, bp.pi1)), ",".join(map(str, bp.pi2)), *[_q(v) for v in vals])
    return EXIT_OK


def _frobenius_borel_table(out: Output) -> int:
    rows = []
    out.row("Type", "h(α_i)")
    for lab in FROBENIUS_BOREL_TYPES:
        letter, rank = parse_type(lab)
        rs = build_root_system(letter, rank)
        fh = frobenius.frobenius_h(make_biparabolic(rs, [], range(1, rs.rank + 1)))
        vals = [_q(v) for v in fh.values]
        rows.append({"type": lab, "h": vals})
        out.text(f"{lab:4s} " + " ".join(f"{v:>3s}" for v in vals))
        out.row(lab, ",".join(vals))
    out.doc = {"table": "frobenius-borels", "rows": rows}
    return EXIT_OK


def _partial_borel_table(out: Output) -> int:
    rows = []
    out.row("Type", "h(α_i) determined", "h(α_i)+h(i(α_i))")
    for lab in PARTIAL_BOREL_TYPES:
        letter, rank = parse_type(lab)
        rs = build_root_system(letter, rank)
        bv = frobenius.borel_determined_values(rs)
        det = {i: _q(v) for i, v in bv.determined.items()}
        sums = {f"{i}+{j}": None if v is None else _q(v) for (i, j), v in bv.orbit_sums.items()}
        rows.append({"type": lab, "determined": det, "orbit_sums": sums})
        out.text(f"{lab}: determined {det}; h(a)+h(i(a)) {sums}")
        out.row(lab, ";".join(f"{k}:{v}" for k, v in det.items()),
                ";".join(f"{k}:{v}" for k, v in sums.items()))
    out.doc = {"table": "partial-borels", "rows": rows}
    return EXIT_OK


def cmd_frobenius(args, out: Output) -> int:
    if args.table:
        return _frobenius_borel_table(out) if args.table == "frobenius-borels" else _partial_borel_table(out)
    if args.type is None:
        raise UsageError("frobenius needs TYPE (or --table)")
    rs = _root_system(args)
    full = list(range(1, rs.rank + 1))
    if args.borel:
        return _frobenius_pair(rs, [], full, out)
    pi1 = parse_indices(args.pi1, rs.rank, "pi1")
    pi2 = parse_indices(args.pi2, rs.rank, "pi2") if args.pi2 is not None else full
    return _frobenius_pair(rs, pi1, pi2, out)


def cmd_frobenius_sweep(args, out: Output) -> int:
    rs = _root_system(args)
    guard = checker.max_rank_guard() if args.max_rank is None else args.max_rank
    rows = frobenius.frobenius_sweep(rs, jobs=args.jobs, max_rank=max(guard, 0))
    bad_int = [r for r in rows if not r.integral]
    out_bound = [r for r in rows if not r.within_bound]
    values = sorted({v for r in rows for v in r.values})
    out.doc = {
        "type": rs.label, "frobenius_pairs": len(rows), "non_integral": len(bad_int),
        "outside_bound": [{"pi1": list(r.pi1), "pi2": list(r.pi2), "h": list(r.values), "bound": r.bound}
                          for r in out_bound],
        "values": values,
    }
    out.text(f"{rs.label}: {len(rows)} Frobenius pairs, {len(bad_int)} non-integral, "
             f"{len(out_bound)} with max |h| above the bound")
    out.text("values of h on pi: " + ", ".join(_q(v) for v in values))
    for r in out_bound:
        out.text(f"  above bound: pi1={list(r.pi1)} pi2={list(r.pi2)} h={[_q(v) for v in r.values]} m={r.bound}")
    out.row("pi1", "pi2", "h", "integral", "bound", "within_bound")
    for r in rows:
        out.row(",".join(map(str, r.pi1)), ",".join(map(str, r.pi2)), ",".join(_q(v) for v in r.values),
                r.integral, r.bound, r.within_bound)
    return EXIT_OK


def cmd_pi_z(args, out: Output) -> int:
    rs = _root_system(args)
    hs = parse_indices(args.half, rs.rank, "half")
    pz = integral_pairs.compute_pi_z(rs, hs)
    if isinstance(pz, integral_pairs.Inadmissible):
        out.doc = {"type": rs.label, "half_set": hs, "admissible": False, "reason": pz.reason}
        out.text(f"inadmissible: {pz.reason}")
        out.row("admissible", "reason")
        out.row(False, pz.reason)
        return EXIT_OK
    out.doc = {"type": rs.label, "half_set": hs, "admissible": True, "pi_z": [list(g) for g in pz.elements]}
    out.text(f"pi^Z for {rs.label}, half set {hs}:")
    out.row("root", "alpha form")
    for g in pz.elements:
        out.text("  " + weights.render_alpha(g))
        out.row(",".join(map(str, g)), weights.render_alpha(g))
    return EXIT_OK


def _need_c(rs: RootSystem) -> None:
    if rs.type_label != "C":
        raise UsageError("this command handles type C only")


def cmd_reduce(args, out: Output) -> int:
    rs = _root_system(args)
    _need_c(rs)
    pi1 = parse_indices(args.pi1, rs.rank, "pi1")
    hs = parse_indices(args.half, rs.rank - 1, "half")
    red = integral_pairs.reduce_half_set(rs, pi1, hs)
    word = integral_pairs.reduction_word(rs, pi1, hs)
    out.doc = {"type": rs.label, "pi1": pi1, "half_set": hs, "reduced": list(red), "word": word}
    out.text(f"reduced half set: {list(red)}")
    out.text("word: " + (" ".join(f"s{k}" for k in word) or "identity"))
    out.row("half_set", "reduced", "word")
    out.row(",".join(map(str, hs)), ",".join(map(str, red)), ",".join(map(str, word)))
    return EXIT_OK


def _weights_rows(rs, gens, coroot_indices, render):
    heads = ",".join(f"α{k}∨" for k in coroot_indices)
    rows = [{"generator": g.label, "weight": render(g), "weight_vector": list(g.weight),
             "pairing": list(g.pairing_vector)} for g in gens]
    return heads, rows


def cmd_weights(args, out: Output) -> int:
    rs = _root_system(args)
    _need_c(rs)
    pi1 = parse_indices(args.pi1, rs.rank, "pi1")
    hs = parse_indices(args.half, rs.rank - 1, "half")
    if args.pi2 is not None:
        pi2 = parse_indices(args.pi2, rs.rank, "pi2")
        cor = parse_indices(args.coroots, rs.rank, "coroots")
        split = [int(t) for t in args.split.split(",")] if args.split else []
        bg = weights.biparabolic_generators(rs, pi1, pi2, hs, cor, split)
        gens = bg.generators
        render = lambda g: weights.render_alpha(g.weight)
        extra = {"pi2": pi2, "pi1_z": [list(g) for g in bg.pi1_z.elements],
                 "pi2_z": [list(g) for g in bg.pi2_z.elements]}
    else:
        red = integral_pairs.reduce_half_set(rs, pi1, hs)
        if list(red) != hs:
            out.text(f"half set {hs} reduced to {list(red)}")
        cor = parse_indices(args.coroots, rs.rank, "coroots") if args.coroots else None
        tc = weights.typeC_parabolic_generators(rs, pi1, red, cor)
        gens, cor = tc.generators, list(tc.coroot_indices)
        render = lambda g: weights.render_beta_alpha(rs, g)
        extra = {"reduced": list(red), "pi_z": [list(g) for g in tc.data.pi_z_ordered],
                 "pi1_z": [list(g) for g in tc.data.pi1_z.elements]}
    heads, rows = _weights_rows(rs, gens, cor, render)
    out.doc = {"type": rs.label, "pi1": pi1, "half_set": hs, "coroots": cor, "generators": rows, **extra}
    out.row("Generator", "Weight", f"({heads})")
    out.text(f"{'Generator':10s} {'Weight':28s} ({heads})")
    for r in rows:
        pv = "(" + ",".join(map(str, r["pairing"])) + ")"
        out.row(r["generator"], r["weight"], pv)
        out.text(f"{r['generator']:10s} {r['weight']:28s} {pv}")
    return EXIT_OK


def _parse_vectors(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        vecs = tuple(tuple(int(x) for x in part.split(",") if x.strip() != "") for part in text.split(";"))
    except ValueError as exc:
        raise UsageError(f"--vectors: cannot parse {text!r}") from exc
    if not vecs or len({len(v) for v in vecs}) != 1:
        raise UsageError("--vectors: give ';'-separated vectors of one common length")
    return vecs


def cmd_hilbert(args, out: Output) -> int:
    vecs = _parse_vectors(args.vectors)
    prob = diophantine.MonoidProblem(vecs)
    basis = diophantine.hilbert_basis(prob, budget=args.budget)
    labels = [f"p{i}" for i in range(1, prob.k + 1)]
    if isinstance(basis, diophantine.BudgetExceeded):
        out.doc = {"vectors": [list(v) for v in vecs], "budget_exceeded": basis.budget,
                   "partial": [list(b) for b in basis.partial]}
        out.text(f"degree budget {basis.budget} exceeded")
        out.row("budget_exceeded", basis.budget)
        return EXIT_INCONCLUSIVE
    rep = diophantine.is_free_monoid(prob, basis)
    out.doc = {"vectors": [list(v) for v in vecs], "hilbert_basis": [list(b) for b in basis],
               "free": rep.free, "relation": None if rep.relation is None else [list(x) for x in rep.relation]}
    out.text("Hilbert basis: " + ", ".join(diophantine.monomial(labels, b) for b in basis))
    out.text(f"free: {rep.free}")
    if rep.relation:
        lhs, rhs = rep.relation
        l = "".join(f"({diophantine.monomial(labels, b)})" + (f"^{c}" if c > 1 else "") for c, b in zip(lhs, basis) if c)
        r = "".join(f"({diophantine.monomial(labels, b)})" + (f"^{c}" if c > 1 else "") for c, b in zip(rhs, basis) if c)
        out.text(f"relation: {l} = {r}")
    out.row("exponents", "monomial")
    for b in basis:
        out.row(",".join(map(str, b)), diophantine.monomial(labels, b))
    return EXIT_OK


def _verdict_text(v: checker.Verdict) -> str:
    return v.status + (f" ({v.stage})" if v.stage else "")


def cmd_check(args, out: Output) -> int:
    rs = _root_system(args)
    _need_c(rs)
    pi1 = parse_indices(args.pi1, rs.rank, "pi1")
    hs = parse_indices(args.half, rs.rank, "half")
    v = checker.check_half_set(rs, pi1, hs)
    out.doc = {"type": rs.label, "pi1": pi1, "half_set": hs, "verdict": v.to_json()}
    out.text(f"{rs.label} pi1={pi1} half set {hs}: {_verdict_text(v)}")
    w = v.witness
    if "reduced" in w and w["reduced"] != hs:
        out.text(f"  reduced to {w['reduced']}")
    if "counts" in w:
        c = w["counts"]
        out.text(f"  rl(q)={c['rl']} rl(q_Z)={c['rl_z']} dim h_Gamma={c['dim_h_gamma']}")
    if "hilbert_basis" in w:
        out.text("  invariant generators: " + ", ".join(diophantine.monomial(w["labels"], b) for b in w["hilbert_basis"]))
    out.row("type", "pi1", "half_set", "status", "stage")
    out.row(rs.label, ",".join(map(str, pi1)), ",".join(map(str, hs)), v.status, v.stage or "")
    return EXIT_INCONCLUSIVE if v.status == checker.INCONCLUSIVE else EXIT_OK


def cmd_certify(args, out: Output) -> int:
    rs = _root_system(args)
    _need_c(rs)
    n = rs.rank
    if args.all:
        pi1s = [[k + 1 for k in range(n) if m >> k & 1] for m in range((1 << n) - 1)]
    else:
        pi1s = [parse_indices(args.pi1, n, "pi1")]
    reports = [checker.integrality_sweep(rs, p, jobs=args.jobs, max_rank=args.max_rank) for p in pi1s]
    docs = []
    out.row("pi1", "reduced_half_set", "status", "stage")
    for rep in reports:
        docs.append({"pi1": list(rep.pi1), "certified": rep.certified,
                     "classes": [{"half_set": list(c), "verdict": v.to_json()}
                                 for c, v in zip(rep.classes, rep.verdicts)]})
        head = "certified" if rep.certified else f"{len(rep.inconclusive)} inconclusive"
        out.text(f"{rs.label} pi1={list(rep.pi1)}: {head}, {len(rep.classes)} reduced classes")
        for c, v in zip(rep.classes, rep.verdicts):
            out.text(f"  {list(c)}: {_verdict_text(v)}")
            out.row(",".join(map(str, rep.pi1)), ",".join(map(str, c)), v.status, v.stage or "")
    ok = all(r.certified for r in reports)
    out.doc = {"type": rs.label, "certified": ok, "reports": docs}
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def cmd_shortcut(args, out: Output) -> int:
    rs = _root_system(args)
    pi1 = parse_indices(args.pi1, rs.rank, "pi1")
    pi2 = parse_indices(args.pi2, rs.rank, "pi2") if args.pi2 is not None else list(range(1, rs.rank + 1))
    v = checker.type_a_shortcut(rs, pi1, pi2)
    out.doc = {"type": rs.label, "pi1": pi1, "pi2": pi2, "verdict": v.to_json()}
    if v.status == checker.INTEGRAL_TRIVIALLY:
        out.text("integrality holds: every component of pi1 and pi2 is of type A")
    else:
        out.text(f"not applicable: component {v.witness['component']} is of type {v.witness['type']}")
    out.row("status")
    out.row(v.status)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cascade-kit", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name, help_, type_required=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("type", nargs=None if type_required else "?", help="type letter or label, e.g. C or G2")
        sp.add_argument("rank", nargs="?", type=int)
        sp.add_argument("--format", choices=("text", "json", "tsv"), default=argparse.SUPPRESS)
        return sp

    sp = typed("cascade", "Kostant cascade of a subset of simple roots")
    sp.add_argument("--indices")
    sp.set_defaults(func=cmd_cascade)

    sp = typed("frobenius", "h for a Frobenius biparabolic", type_required=False)
    sp.add_argument("--pi1")
    sp.add_argument("--pi2")
    sp.add_argument("--borel", action="store_true", help="pi1 empty, pi2 = pi")
    sp.add_argument("--table", choices=("frobenius-borels", "partial-borels"))
    sp.set_defaults(func=cmd_frobenius)

    sp = typed("frobenius-sweep", "all Frobenius biparabolics of one type")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-rank", type=int)
    sp.set_defaults(func=cmd_frobenius_sweep)

    sp = typed("pi-z", "simple system of the integral subsystem for a half set")
    sp.add_argument("--half", required=True)
    sp.set_defaults(func=cmd_pi_z)

    sp = typed("reduce", "canonical half set under the Levi Weyl group (type C)")
    sp.add_argument("--pi1", required=True)
    sp.add_argument("--half", required=True)
    sp.set_defaults(func=cmd_reduce)

    sp = typed("weights", "generator weights and coroot pairings (type C)")
    sp.add_argument("--pi1", required=True)
    sp.add_argument("--half", required=True)
    sp.add_argument("--pi2", help="biparabolic mode; needs --coroots")
    sp.add_argument("--coroots", help="coroot labels for the pairing column")
    sp.add_argument("--split", help="orbit numbers giving two generators of equal weight")
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("hilbert", help="Hilbert basis of the zero-sum monoid")
    sp.add_argument("--vectors", required=True, help="e.g. '2;-1;-2' or '2,0;2,1'")
    sp.add_argument("--budget", type=int, default=diophantine.DEFAULT_BUDGET)
    sp.add_argument("--format", choices=("text", "json", "tsv"), default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_hilbert)

    sp = typed("check", "run the exclusion stages on one half set (type C parabolic)")
    sp.add_argument("--pi1", required=True)
    sp.add_argument("--half", required=True)
    sp.set_defaults(func=cmd_check)

    sp = typed("certify", "check every reduced half set for a type C parabolic")
    sp.add_argument("--pi1", default="")
    sp.add_argument("--all", action="store_true", help="every proper pi1")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-rank", type=int)
    sp.set_defaults(func=cmd_certify)

    sp = typed("shortcut", "integrality when all components are of type A")
    sp.add_argument("--pi1", required=True)
    sp.add_argument("--pi2")
    sp.set_defaults(func=cmd_shortcut)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except (UsageError, InvalidRootSystem, StandingHypothesisError, NotFrobenius,
            integral_pairs.NotReduced, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = out.render()
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
