"""``brickforge`` command line.

Every subcommand prints tab-delimited records (or JSON with ``--format
json``), one per (type, Coxeter word, check), and exits 0 when all pass,
1 on a verification failure and 2 on an invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Optional, Sequence

from .coxeter import CartanType, RootSystem, format_word
from .display import cluster_table, root_table, shifted_weight_table, to_tsv, weight_table
from .errors import BudgetExceeded, InvalidCartanType
from .verify import (FAIL, PASS, CheckResult, Instance, check_counterexamples, check_newton,
                     check_properties, check_tables, check_tropical, check_typecone,
                     trop_formulas)
from .words import scan_conjecture

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
MAX_RANK = 8
SKIP = "skip"

DEFAULT_BATCH = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4")
# the tropical check on F4 is only run when asked for
OPT_IN_TROPICAL = ("F4",)
CHECKS = ("tables", "typecone", "newton", "tropical", "properties")


class ConfigError(Exception):
    pass


# configuration

def _family_types(family: str, max_rank: int) -> list:
    out = []
    for r in range(1, max_rank + 1):
        try:
            out.append(str(CartanType(family, r)))
        except InvalidCartanType:
            continue
    if not out:
        raise ConfigError(f"no type of family {family} up to rank {max_rank}")
    return out


def select_types(selectors: Optional[Sequence[str]], max_rank: int) -> list:
    if not 1 <= max_rank <= MAX_RANK:
        raise ConfigError(f"--max-rank must be between 1 and {MAX_RANK}")
    if not selectors:
        return [t for t in DEFAULT_BATCH if CartanType.parse(t).rank <= max_rank]
    out = []
    for sel in selectors:
        for tok in sel.split(","):
            tok = tok.strip().upper()
            if tok.isalpha() and len(tok) == 1:
                names = _family_types(tok, max_rank)
            else:
                try:
                    t = CartanType.parse(tok)
                except InvalidCartanType as exc:
                    raise ConfigError(str(exc)) from None
                if t.rank > max_rank:
                    raise ConfigError(f"{t} exceeds the rank bound {max_rank}")
                names = [str(t)]
            out.extend(n for n in names if n not in out)
    return out


def parse_coxeter(text: str) -> tuple:
    text = text.strip()
    toks = text.split(",") if "," in text else list(text)
    try:
        return tuple(int(t) for t in toks if t.strip())
    except ValueError:
        raise ConfigError(f"cannot read Coxeter word {text!r}") from None


def instances(args) -> list:
    """(type, word) pairs in deterministic order."""
    out = []
    for t in select_types(args.type, args.max_rank):
        R = RootSystem(t)
        if args.all_coxeter:
            words = R.coxeter_elements()
        elif args.coxeter:
            c = parse_coxeter(args.coxeter)
            if sorted(c) != list(range(1, R.n + 1)):
                raise ConfigError(f"{format_word(c)} is not a Coxeter element of {t}")
            words = [c]
        else:
            words = [tuple(range(1, R.n + 1))]
        out.extend((t, c) for c in words)
    return out


# task execution

_CACHE: dict = {}


def _instance(type_name: str, c: tuple) -> Instance:
    key = (type_name, c)
    if key not in _CACHE:
        _CACHE.clear()
        _CACHE[key] = Instance(type_name, c)
    return _CACHE[key]


@contextmanager
def _budget(seconds: Optional[float]):
    if not seconds or not hasattr(signal, "setitimer"):
        yield
        return

    def expire(signum, frame):
        raise BudgetExceeded(f"time budget of {seconds} s exhausted")

    old = signal.signal(signal.SIGALRM, expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def run_task(task: tuple) -> CheckResult:
    type_name, c, check, opts = task
    timing = opts["timing"]
    try:
        with _budget(opts["budget"]):
            if check == "counterexamples":
                return check_counterexamples(opts["fixtures"], timing)
            inst = _instance(type_name, c)
            if check == "tables":
                return check_tables(inst, opts["fixtures"], timing)
            if check == "typecone":
                return check_typecone(inst, timing)
            if check == "newton":
                return check_newton(inst, timing)
            if check == "tropical":
                return check_tropical(inst, seed=opts["seed"], timing=timing,
                                      directory=opts["fixtures"])
            if check == "properties":
                return check_properties(inst, timing)
    except BudgetExceeded as exc:
        _CACHE.clear()
        return CheckResult(type_name, format_word(c), check, FAIL, f"BudgetExceeded: {exc}")
    raise ValueError(f"unknown check {check}")


def run_tasks(tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tasks))


def _options(args) -> dict:
    return {"timing": args.timing, "budget": args.budget_seconds, "seed": args.seed,
            "fixtures": _fixture_dir(args)}


def _fixture_dir(args) -> Optional[str]:
    return args.fixtures or None


def check_tasks(args, checks: Sequence[str]) -> tuple:
    """Tasks plus the results of checks skipped by the batch policy."""
    opts = _options(args)
    tasks, skipped = [], []
    for t, c in instances(args):
        for check in checks:
            if check == "tropical" and t in OPT_IN_TROPICAL and not args.type \
                    and not args.include_f4_tropical:
                skipped.append(CheckResult(t, format_word(c), check, SKIP,
                                           "opt-in; pass --include-f4-tropical"))
                continue
            tasks.append((t, c, check, opts))
    return tasks, skipped


def _merge(results: list, skipped: list, order: list) -> list:
    rank = {(t, format_word(c)): i for i, (t, c) in enumerate(order)}

    def key(r):
        return rank.get((r.type, r.coxeter_word), -1), CHECKS.index(r.check)

    return sorted(results + skipped, key=key)


# output

def _clean(s) -> str:
    if s is None:
        return "-"
    return str(s).replace("\t", " ").replace("\n", " ")


RECORD_HEADER = ("type", "coxeter_word", "check", "status", "millis", "witness")


def records_tsv(results: Sequence[CheckResult]) -> str:
    lines = ["\t".join(RECORD_HEADER)]
    for r in results:
        lines.append("\t".join([r.type, r.coxeter_word, r.check, r.status, str(r.millis),
                                _clean(r.witness)]))
    return "\n".join(lines) + "\n"


def records_json(results: Sequence[CheckResult], extra: Optional[dict] = None) -> str:
    doc = {"records": [r.record() for r in results]}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def exit_code(results: Sequence[CheckResult]) -> int:
    return EXIT_FAIL if any(r.status == FAIL for r in results) else EXIT_OK


def instance_tables(inst: Instance) -> dict:
    bg = inst.bg
    tables = {"roots": root_table(bg), "weights": weight_table(bg),
              "shifted": shifted_weight_table(bg), "cluster": cluster_table(bg, inst.records)}
    tables["tropical"] = [["beta", "function"]] + [
        [",".join(str(x) for x in b), f] for b, f in trop_formulas(inst).items()]
    return tables


def _emit(args, results, blocks: Optional[dict] = None) -> str:
    if args.format == "json":
        extra = None
        if blocks:
            extra = {"tables": {k: [list(r) for r in v] for k, v in blocks.items()}}
        return records_json(results, extra)
    parts = []
    for name, table in (blocks or {}).items():
        parts.append(f"## {name}\n" + to_tsv(table))
    parts.append("## records\n" + records_tsv(results))
    return "".join(parts)


# subcommands

def cmd_checks(args, checks: Sequence[str]) -> int:
    order = instances(args)
    tasks, skipped = check_tasks(args, checks)
    results = _merge(run_tasks(tasks, args.jobs), skipped, order)
    sys.stdout.write(_emit(args, results))
    return exit_code(results)


def cmd_tables(args) -> int:
    order = instances(args)
    blocks = {}
    for t, c in order:
        inst = _instance(t, c)
        for name, table in instance_tables(inst).items():
            blocks[f"{name} {t} {format_word(c)}"] = table
    tasks, _ = check_tasks(args, ["tables"])
    results = run_tasks(tasks, args.jobs)
    sys.stdout.write(_emit(args, results, blocks))
    return exit_code(results)


def cmd_counterexamples(args) -> int:
    res = run_task(("B2", (), "counterexamples", _options(args)))
    sys.stdout.write(_emit(args, [res]))
    return exit_code([res])


def cmd_scan(args) -> int:
    types = select_types(args.type or ["A2", "B2"], args.max_rank)
    results = []
    for t in types:
        R = RootSystem(t)
        length = args.max_length if args.max_length is not None else R.N + 2
        budget = args.budget_seconds
        rep = scan_conjecture(R, length, budget_seconds=budget, name=t)
        witness = None
        if rep.unexpected:
            witness = f"unexpected {format_word(rep.unexpected[0])}"
        elif rep.missing:
            witness = f"missing {format_word(rep.missing[0])}"
        note = f"checked {rep.words_checked} words up to length {length}"
        if rep.truncated:
            note += " (truncated by budget)"
        # exploratory: a violation is reported, never treated as a failure
        results.append(CheckResult(t, "-", "scan", PASS, witness or note, 0,
                                   {"unexpected": len(rep.unexpected), "missing": len(rep.missing)}))
    sys.stdout.write(_emit(args, results))
    return EXIT_OK


def _rank_two(order: list) -> list:
    return [(t, c) for t, c in order if RootSystem(t).n == 2]


def cmd_figures(args) -> int:
    from .plotting import render_figures

    order = _rank_two(instances(args))
    if not order:
        raise ConfigError("figures are only drawn for rank-2 types")
    out = Path(args.output)
    lines = ["type\tcoxeter_word\tfile"]
    for t, c in order:
        for p in render_figures(_instance(t, c), out):
            lines.append(f"{t}\t{format_word(c)}\t{p}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_report(args) -> int:
    from .plotting import render_figures

    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    order = instances(args)
    tasks, skipped = check_tasks(args, CHECKS)
    results = _merge(run_tasks(tasks, args.jobs), skipped, order)
    results.append(run_task(("B2", (), "counterexamples", _options(args))))

    written = []
    for t, c in order:
        inst = _instance(t, c)
        stem = f"{t}_{format_word(c)}"
        for name, table in instance_tables(inst).items():
            path = out / f"{stem}_{name}.tsv"
            path.write_text(to_tsv(table))
            written.append(path)
        if inst.R.n == 2:
            written.extend(render_figures(inst, out / "figures"))
    (out / "report.tsv").write_text(records_tsv(results))
    (out / "report.json").write_text(records_json(results))
    written += [out / "report.tsv", out / "report.json"]

    sys.stdout.write(_emit(args, results))
    if args.format == "text":
        sys.stdout.write("## files\n" + "".join(f"{p}\n" for p in written))
    return exit_code(results)


# argument parsing

def _common(p: argparse.ArgumentParser, selection: bool = True) -> None:
    if selection:
        p.add_argument("--type", action="append", metavar="TYPE",
                       help="Cartan type such as A3, or a family letter (with --max-rank); repeatable")
        p.add_argument("--max-rank", type=int, default=4,
                       help=f"rank bound for family selectors and the default batch (<= {MAX_RANK})")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--coxeter", metavar="WORD", help="Coxeter element as letters, e.g. 1,2,3")
        g.add_argument("--all-coxeter", action="store_true", help="every Coxeter element")
        p.add_argument("--include-f4-tropical", action="store_true",
                       help="run the tropical check on F4 in the default batch")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--fixtures", metavar="DIR", default=None,
                   help="directory with reference tables (default: the bundled ones)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-seconds", type=float, default=None, help="time budget per check")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timing", action="store_true", help="record wall-clock milliseconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brickforge",
                                     description="Brick polytopes, cluster variables and their checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("tables", "root, weight, shifted-weight and cluster tables"),
                            ("verify-typecone", "summands span the type cone"),
                            ("verify-newton", "Newton polytopes of F-polynomials"),
                            ("verify-tropical", "tropical slice against the g-vector fan"),
                            ("verify-properties", "structural properties and oracles"),
                            ("verify-all", "every check on the selection")):
        _common(sub.add_parser(name, help=help_text))
    _common(sub.add_parser("counterexamples", help="the two non-cluster words of B2"), selection=False)
    p = sub.add_parser("scan", help="exploratory scan of words up to a length")
    _common(p)
    p.add_argument("--max-length", type=int, default=None)
    for name, help_text in (("figures", "draw the rank-2 figures"),
                            ("report", "all checks, tables and figures into a directory")):
        p = sub.add_parser(name, help=help_text)
        _common(p)
        p.add_argument("--output", default="brickforge-report", metavar="DIR")
    return parser


_COMMANDS = {
    "tables": cmd_tables,
    "verify-typecone": lambda a: cmd_checks(a, ["typecone"]),
    "verify-newton": lambda a: cmd_checks(a, ["newton"]),
    "verify-tropical": lambda a: cmd_checks(a, ["tropical"]),
    "verify-properties": lambda a: cmd_checks(a, ["properties"]),
    "verify-all": lambda a: cmd_checks(a, list(CHECKS)),
    "counterexamples": cmd_counterexamples,
    "scan": cmd_scan,
    "figures": cmd_figures,
    "report": cmd_report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    if args.jobs < 1:
        sys.stderr.write("brickforge: --jobs must be positive\n")
        return EXIT_CONFIG
    if args.budget_seconds is not None and args.budget_seconds < 0:
        sys.stderr.write("brickforge: --budget-seconds must be nonnegative\n")
        return EXIT_CONFIG
    if args.fixtures and not Path(args.fixtures).is_dir():
        sys.stderr.write(f"brickforge: no fixture directory {args.fixtures}\n")
        return EXIT_CONFIG
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        sys.stderr.write(f"brickforge: {exc}\n")
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        sys.stderr.write(f"brickforge: missing fixture file {exc.filename}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
