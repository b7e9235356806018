"""Command-line interface: ``cliffchar <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .chartab import (
    CharacterTable,
    class_sizes_from_columns,
    dixon_character_table,
    integer_valued,
    normal_subgroups,
    table_to_csv,
)
from .classes import classes_csv, conjugacy_classes
from .cyclo import format_cyclotomic
from .matgroup import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    clifford_group,
    format_word,
    group_order_formula,
)
from .presentation import abelianization, export_presentation, sgn_character, to_gap, verify_relators
from .reference import (
    DATA_ENV,
    anchor_columns,
    compare_sparse,
    load_table,
    match_tables,
    verify_embedded_c3,
)
from .report import Report
from .repdecomp import (
    adjoint_character,
    adjoint_character_from_table,
    c1_recursion_check,
    decompose_power,
    decomposition_csv,
    decomposition_text,
    faithfulness_check,
)

log = logging.getLogger("cliffchar")

FORMAT_VERSION = 1
MAX_DECOMPOSE_M = {1: 12, 2: 8, 3: 5}


class CliError(Exception):
    pass


def _emit(args, text: str = "", data=None) -> None:
    if args.format == "json":
        payload = {"version": FORMAT_VERSION, "command": args.command}
        payload.update(data or {})
        print(json.dumps(payload, indent=2, default=str))
    elif text:
        print(text, end="" if text.endswith("\n") else "\n")


def _check_n(n: int, top: int, what: str) -> None:
    if n < 1:
        raise CliError("--n must be at least 1")
    if n > top:
        raise CliError(f"{what} supports n <= {top}")


# -- shared pipeline ------------------------------------------------------------

class Pipeline:
    """Enumeration, classes, Dixon table and reference match for n <= 2."""

    def __init__(self, n: int, cap: int = DEFAULT_CAP, prime: int | None = None):
        t0 = time.perf_counter()
        self.n = n
        self.group = clifford_group(n, cap)
        log.info("enumerated C_%d: %d elements (%.1fs)", n, len(self.group), time.perf_counter() - t0)
        self.classes = conjugacy_classes(self.group)
        log.info("conjugacy classes: %d (%.1fs)", self.classes.k, time.perf_counter() - t0)
        self.table = dixon_character_table(self.group, self.classes, prime)
        log.info("character table over GF(%d) (%.1fs)", self.table.meta["prime"], time.perf_counter() - t0)
        if n == 1:
            self.ref_id = "s4_chartab"
            self.reference = load_table(self.ref_id).payload
            words = self.reference.meta["words"]
        else:
            self.ref_id = "c2_chartab"
            self.reference = load_table(self.ref_id).payload
            words = [c.word for c in load_table("c2_classes").payload]
        self.anchors = anchor_columns(words, self.group, self.classes)
        self.match = match_tables(self.table, self.reference, self.anchors)

    def relabeled(self) -> CharacterTable:
        """Computed table in the reference row and column order."""
        t = self.table.permuted(self.match.rows, self.match.cols)
        t.labels = list(self.reference.labels)
        return t


def _c3_table() -> CharacterTable:
    t = load_table("c3_chartab").payload
    t.class_sizes = class_sizes_from_columns(t.values, t.group_order)
    return t


# -- subcommands ----------------------------------------------------------------

def cmd_order(args) -> int:
    ns = [args.n] if args.n else list(range(1, 6))
    orders = {n: group_order_formula(n) for n in ns}
    if args.format == "csv":
        _emit(args, "n,order\n" + "".join(f"{n},{o}\n" for n, o in orders.items()))
    else:
        _emit(args, "\n".join(f"{o}" if args.n else f"n={n}  |C_n| = {o}" for n, o in orders.items()),
              {"orders": {str(n): o for n, o in orders.items()}})
    return 0


def cmd_enumerate(args) -> int:
    n = args.n or 1
    t0 = time.perf_counter()
    g = clifford_group(n, args.cap)
    log.info("closure finished in %.1fs", time.perf_counter() - t0)
    expected = group_order_formula(n)
    ok = len(g) == expected
    gens = " ".join(name for name, _ in g.generators)
    text = f"C_{n}: {len(g)} elements from generators {gens}; formula {expected}: {'OK' if ok else 'MISMATCH'}"
    if args.format == "csv":
        text = f"n,elements,formula\n{n},{len(g)},{expected}\n"
    _emit(args, text, {"n": n, "elements": len(g), "formula": expected, "ok": ok,
                       "exponent": g.exponent})
    return 0 if ok else 1


def cmd_classes(args) -> int:
    n = args.n or 1
    _check_n(n, 2, "classes")
    g = clifford_group(n, args.cap)
    cd = conjugacy_classes(g)
    rows = [(c + 1, cd.sizes[c], format_word(g.word(cd.rep_ids[c])) or "e", cd.orders[c])
            for c in range(cd.k)]
    if args.format == "csv":
        _emit(args, classes_csv(cd))
    else:
        lines = [f"{len(rows)} conjugacy classes of C_{n}", f"{'class':>5} {'size':>6} {'order':>5}  representative"]
        lines += [f"{i:>5} {s:>6} {o:>5}  {w}" for i, s, w, o in rows]
        _emit(args, "\n".join(lines),
              {"n": n, "classes": [{"index": i, "size": s, "representative": w, "order": o}
                                   for i, s, w, o in rows]})
    return 0


def _table_text(t: CharacterTable) -> str:
    cells = [[format_cyclotomic(v) for v in row] for row in t.values]
    width = max(len(c) for row in cells for c in row + [str(s) for s in t.class_sizes or []])
    lab = max(len(x) for x in t.labels + ["size"])
    out = []
    if t.class_sizes:
        out.append(f"{'size':<{lab}} " + " ".join(f"{s:>{width}}" for s in t.class_sizes))
    for name, row in zip(t.labels, cells):
        out.append(f"{name:<{lab}} " + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(out)


def cmd_chartable(args) -> int:
    n = args.n or 1
    if n >= 3:
        raise CliError(f"chartable computes tables only for n <= 2; C_{n} is too large to enumerate here. "
                       "Use `cliffchar verify-c3` to check the embedded C_3 table.")
    _check_n(n, 2, "chartable")
    p = Pipeline(n, args.cap, args.prime)
    t = p.relabeled() if p.match else p.table
    verdict = (f"MATCH with reference table {p.ref_id}" if p.match
               else f"MISMATCH with reference table {p.ref_id}: {p.match.mismatch}")
    if args.format == "csv":
        _emit(args, table_to_csv(t))
        log.info(verdict)
    else:
        head = f"character table of C_{n}: {t.k} classes, |G| = {t.group_order}, prime {t.meta['prime']}"
        _emit(args, f"{head}\n{_table_text(t)}\n{verdict}",
              {"n": n, "prime": t.meta["prime"], "labels": t.labels, "class_sizes": t.class_sizes,
               "values": [[format_cyclotomic(v) for v in row] for row in t.values],
               "match": bool(p.match), "mismatch": p.match.mismatch})
    return 0 if p.match else 1


def _decompositions(args):
    """Yield (n, m, vector, table, sparse reference vector or None, notes) in reference row order."""
    n = args.n or 1
    _check_n(n, 3, "decompose")
    if n <= 2:
        p = Pipeline(n, args.cap, args.prime)
        if not p.match:
            raise CliError(f"computed table does not match the reference: {p.match.mismatch}")
        t = p.relabeled()
        chi = adjoint_character(p.group, p.classes).permuted(p.match.cols)
        ref = load_table("c1_decomp" if n == 1 else "c2_decomp")
        sparse_ref = {m: {i + 1: a for i, a in enumerate(v) if a} for m, v in ref.payload.items()}
        notes = {}
    else:
        t = _c3_table()
        chi = adjoint_character_from_table(t, [1, 10])
        log.info("C_3: conjugation character taken as chi1 + chi10")
        ref = load_table("c3_decomp")
        sparse_ref = ref.payload
        notes = ref.notes
    ms = [args.m] if args.m else sorted(ref.payload)
    for m in ms:
        if m < 1 or m > MAX_DECOMPOSE_M[n]:
            raise CliError(f"--m must be between 1 and {MAX_DECOMPOSE_M[n]} for n = {n}")
        v = decompose_power(chi, m, t)
        note = {r: s for (mm, r), s in notes.items() if mm == m}
        yield n, m, v, t, sparse_ref.get(m), note


def cmd_decompose(args) -> int:
    ok = True
    texts, records, vs = [], [], []
    for n, m, v, t, ref, notes in _decompositions(args):
        dim, want = v.dimension(t.degrees), 4 ** (n * m)
        lines = [decomposition_text(v, t.labels),
                 f"  dimension: sum v_i * deg_i = {dim}, 4^{n * m} = {want}: {'OK' if dim == want else 'FAIL'}"]
        ok &= dim == want
        rec = {"n": n, "m": m, "v": list(v.v), "dimension": dim, "dimension_ok": dim == want}
        if ref is not None:
            cmp = compare_sparse(v.support(), ref, notes, f"reference v_{m}")
            ok &= cmp.passed
            lines.append(f"  reference v_{m}: {'MATCH' if cmp.passed else 'DIFFERS'}")
            for c in cmp.checks:
                if not c.passed or "alternative" in c.detail:
                    lines.append(f"    {c.line()}")
            rec["reference_match"] = cmp.passed
            rec["reference_diff"] = [c.name + ": " + c.detail for c in cmp.failures]
        texts.append("\n".join(lines))
        records.append(rec)
        vs.append(v)
    if args.format == "csv":
        _emit(args, decomposition_csv(vs))
    else:
        _emit(args, "\n".join(texts), {"decompositions": records})
    return 0 if ok else 1


def cmd_abelianize(args) -> int:
    n = args.n or 1
    _check_n(n, 8, "abelianize")
    ab = abelianization(n)
    text = f"C_{n}^ab: invariant factors {list(ab.invariant_factors)}, free rank {ab.free_rank}, order {ab.order}"
    _emit(args, text, {"n": n, "invariant_factors": list(ab.invariant_factors),
                       "free_rank": ab.free_rank, "order": ab.order})
    return 0


def _verify_report(n: int, args) -> Report:
    report = Report(f"C_{n}")
    ab = abelianization(n)
    want = (2,) if n <= 2 else ()
    report.add(f"abelianization invariant factors {list(want)}",
               ab.invariant_factors == want and ab.free_rank == 0, f"got {list(ab.invariant_factors)}")
    if args.abelianization_only:
        return report
    report.extend(verify_relators(n))
    if n >= 3:
        try:
            sgn_character(n)
            report.add("no sign character", False, "all relators have even length")
        except ValueError as exc:
            report.add("no sign character", True, str(exc))
        report.extend(verify_embedded_c3())
        t = _c3_table()
        chi = adjoint_character_from_table(t, [1, 10])
        report.add("chi1 + chi10 has trivial kernel", faithfulness_check(chi, t.class_sizes))
        return report
    sgn = sgn_character(n)
    report.add("sign assignment respects every relator", all(v == -1 for v in sgn.values()))
    p = Pipeline(n, args.cap, args.prime)
    report.add("computed table matches reference", bool(p.match), p.match.mismatch)
    t = p.table
    report.add("character values are rational integers", integer_valued(t))
    orders = sorted(r.order for r in normal_subgroups(t) if r.is_proper_nontrivial)
    want_orders = [4, 12] if n == 1 else [16, 5760]
    report.add(f"proper nontrivial normal subgroup orders {want_orders}", orders == want_orders, f"got {orders}")
    linear = [i for i, d in enumerate(t.degrees) if d == 1]
    report.add("two degree-1 characters", len(linear) == 2, f"got {len(linear)}")
    gens = [f"h{i}" for i in range(1, n + 1)] + [f"p{i}" for i in range(1, n + 1)] + [f"z{j}" for j in range(1, n)]
    cols = anchor_columns(gens, p.group, p.classes)
    sign_rows = [i for i in linear if all(t.values[i][c] == -1 for c in cols)]
    report.add("a degree-1 character is -1 on every generator", len(sign_rows) == 1)
    chi = adjoint_character(p.group, p.classes)
    report.add("conjugation character has trivial kernel", faithfulness_check(chi, t.class_sizes))
    if n == 1:
        ref = load_table("c1_decomp").payload
        rec = all(c1_recursion_check(ref[m], ref[m + 1]) for m in range(1, 6))
        report.add("recursion v_(m+1) = F(v_m) for m = 1..5", rec)
    return report


def cmd_verify(args) -> int:
    n = args.n or 1
    _check_n(n, 5 if args.abelianization_only else 3, "verify")
    report = _verify_report(n, args)
    _emit(args, report.text(verbose=args.verbose), report.to_dict())
    return 0 if report.passed else 1


def cmd_normal_subgroups(args) -> int:
    n = args.n or 1
    _check_n(n, 3, "normal-subgroups")
    if n == 3:
        t = _c3_table()
    else:
        p = Pipeline(n, args.cap, args.prime)
        t = p.relabeled() if p.match else p.table
    recs = normal_subgroups(t)
    lines = [f"{len(recs)} normal subgroups of C_{n}"]
    for r in recs:
        tag = "proper nontrivial" if r.is_proper_nontrivial else ("trivial" if r.order == 1 else "whole group")
        lines.append(f"order {r.order:>9}  classes {sorted(c + 1 for c in r.class_index_set)}  ({tag})")
    if args.format == "csv":
        _emit(args, "order,classes,proper_nontrivial\n" + "".join(
            f"{r.order},{' '.join(str(c + 1) for c in sorted(r.class_index_set))},{int(r.is_proper_nontrivial)}\n"
            for r in recs))
    else:
        _emit(args, "\n".join(lines), {"n": n, "normal_subgroups": [
            {"order": r.order, "classes": sorted(c + 1 for c in r.class_index_set),
             "proper_nontrivial": r.is_proper_nontrivial} for r in recs]})
    return 0


def cmd_export_presentation(args) -> int:
    n = args.n or 1
    _check_n(n, 64, "export-presentation")
    _emit(args, to_gap(n) if args.gap else export_presentation(n),
          {"n": n, "text": to_gap(n) if args.gap else export_presentation(n)})
    return 0


def cmd_verify_c3(args) -> int:
    report = verify_embedded_c3()
    _emit(args, report.text(verbose=True), report.to_dict())
    return 0 if report.passed else 1


COMMANDS = {
    "order": (cmd_order, "print |C_n| from the order formula"),
    "enumerate": (cmd_enumerate, "enumerate C_n by breadth-first closure"),
    "classes": (cmd_classes, "conjugacy classes of C_n (n <= 2)"),
    "chartable": (cmd_chartable, "compute the character table of C_n (n <= 2) and match it to the reference"),
    "decompose": (cmd_decompose, "decompose tensor powers of the conjugation representation"),
    "abelianize": (cmd_abelianize, "abelianization of the presentation via Smith normal form"),
    "verify": (cmd_verify, "run the structural checks for C_n"),
    "normal-subgroups": (cmd_normal_subgroups, "normal subgroups from character kernels"),
    "export-presentation": (cmd_export_presentation, "print the presentation of C_n"),
    "verify-c3": (cmd_verify_c3, "check the embedded C_3 character table"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of qubits")
    common.add_argument("--m", type=int, help="tensor power (decompose)")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for enumeration")
    common.add_argument("--prime", type=int, help="override the Dixon prime")
    common.add_argument("--fixtures", help=f"fixture directory (also ${DATA_ENV})")
    common.add_argument("--threads", type=int, help="worker cap (computation is single-threaded)")
    common.add_argument("--abelianization-only", action="store_true", help="verify: abelianization only")
    common.add_argument("--gap", action="store_true", help="export-presentation: GAP syntax")
    common.add_argument("-v", "--verbose", action="store_true")
    common.add_argument("-q", "--quiet", action="store_true", help="no progress messages")

    parser = argparse.ArgumentParser(prog="cliffchar", description="Character tables of small Clifford groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _setup_logging(quiet: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.WARNING if quiet else logging.INFO)
    log.propagate = False


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging(args.quiet)
    if args.fixtures:
        os.environ[DATA_ENV] = args.fixtures
    if args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return 2
    if args.m is not None and args.m < 1:
        print("error: --m must be at least 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command][0](args)
    except (CliError, EnumerationCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
