"""
Command line front end.

    loopbracket amr      --surface pants aBB aB
    loopbracket goldman  --surface pants aBB aB
    loopbracket minint   --surface pants a b
    loopbracket selfint  --surface torus1 aaa
    loopbracket theorem2 --surface pants --p 1 --q 2 aab
    loopbracket torus "(2,3)" "(1,1)"
    loopbracket batch queries.jsonl
    loopbracket verify --seed 1 --budget 50

Every flag can also be set through an environment variable named
``LOOPBRACKET_<FLAG>`` (for example ``LOOPBRACKET_SURFACE=torus1``);
command line flags win.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import bracket
from .freegroup import Word, WordSyntaxError, free_class
from .linking import RootViolation
from .surface import SurfaceError, parse_surface
from .torus import TorusClass, torus_min_intersection
from .verify import verify

SCHEMA = "loopbracket.result/1"
MODES = ("amr", "goldman", "minint", "selfint", "theorem2", "torus")
ENV_PREFIX = "LOOPBRACKET_"


class QueryError(ValueError):
    """Bad input: exit code 1."""


@dataclass
class QueryRecord:
    mode: str
    w1: str
    w2: Optional[str] = None
    surface: str = "pants"
    p: Optional[int] = None
    q: Optional[int] = None

    @classmethod
    def from_dict(cls, d: dict) -> "QueryRecord":
        if not isinstance(d, dict):
            raise QueryError("record must be a JSON object")
        unknown = set(d) - {"mode", "w1", "w2", "surface", "p", "q", "options"}
        if unknown:
            raise QueryError(f"unknown fields {sorted(unknown)}")
        options = d.get("options") or {}
        try:
            return cls(
                mode=d["mode"],
                w1=d["w1"],
                w2=d.get("w2"),
                surface=d.get("surface", "pants"),
                p=d.get("p", options.get("p")),
                q=d.get("q", options.get("q")),
            )
        except KeyError as exc:
            raise QueryError(f"missing field {exc.args[0]!r}") from None


@dataclass
class ResultRecord:
    mode: str
    surface: Optional[str]
    w1: Optional[str]
    w2: Optional[str]
    value: Optional[int] = None
    raw: Optional[list] = None
    raw_count: Optional[int] = None
    reduced: Optional[list] = None
    terms_count: Optional[int] = None
    goldman: Optional[list] = None
    error: Optional[str] = None
    exit_code: int = 0
    extras: dict = field(default_factory=dict)

    def to_dict(self, show_raw: bool = True) -> dict:
        d = {"schema": SCHEMA, "mode": self.mode, "surface": self.surface, "w1": self.w1, "w2": self.w2}
        for key in ("value", "raw_count", "terms_count", "reduced", "goldman"):
            value = getattr(self, key)
            if value is not None:
                d[key] = value
        if show_raw and self.raw is not None:
            d["raw"] = self.raw
        d.update(self.extras)
        d["error"] = self.error
        return d


def _word(text, name: str) -> Word:
    if text is None:
        raise QueryError(f"{name} is required")
    try:
        return Word.parse(str(text))
    except WordSyntaxError as exc:
        raise QueryError(f"{name}: {exc}") from None


def _term_dicts(terms) -> list:
    return [{"sign": t.sign, "first": str(t.first), "second": str(t.second)} for t in terms]


def _reduced_dicts(result: bracket.BracketResult) -> list:
    return [
        {"coefficient": c, "first": str(a), "second": str(b)} for a, b, c in result.sorted_reduced()
    ]


def _goldman_dicts(g: dict) -> list:
    items = sorted(g.items(), key=lambda kv: (len(kv[0].canonical), kv[0].canonical.letters))
    return [{"coefficient": c, "class": str(cls.canonical)} for cls, c in items]


def _run(q: QueryRecord) -> ResultRecord:
    if q.mode not in MODES:
        raise QueryError(f"unknown mode {q.mode!r}; expected one of {', '.join(MODES)}")
    if q.mode == "torus":
        try:
            c1, c2 = TorusClass.parse(str(q.w1)), TorusClass.parse(str(q.w2))
        except ValueError as exc:
            raise QueryError(str(exc)) from None
        return ResultRecord("torus", "torus", str(c1), str(c2), value=torus_min_intersection(c1, c2))
    try:
        rose = parse_surface(q.surface)
    except SurfaceError as exc:
        raise QueryError(f"surface: {exc}") from None
    w1 = _word(q.w1, "w1")
    for x in w1:
        if abs(x) > rose.rank:
            raise QueryError(f"w1 uses generators beyond rank {rose.rank}")
    a1 = free_class(w1)
    rec = ResultRecord(q.mode, str(rose), str(w1), None)

    if q.mode in ("selfint", "theorem2"):
        if a1.is_trivial and q.mode == "theorem2":
            raise QueryError("theorem2 needs a nontrivial class")
        selfint = bracket.self_intersection(a1, rose)
        if q.mode == "selfint":
            rec.value = selfint
            rec.extras = {"root": str(a1.root), "exponent": a1.exponent}
            return rec
        if q.p is None or q.q is None:
            raise QueryError("theorem2 needs p and q")
        p, qq = int(q.p), int(q.q)
        if p == qq or p == 0 or qq == 0:
            raise QueryError("p and q must be distinct and nonzero")
        result = bracket.amr_bracket(a1.power(p), a1.power(qq), rose)
        rec.value = bracket.theorem2_selfint(a1, p, qq, rose)
        rec.raw = _term_dicts(result.raw)
        rec.raw_count = len(result.raw)
        rec.reduced = _reduced_dicts(result)
        rec.terms_count = result.terms_count
        rec.extras = {"p": p, "q": qq, "self_intersection": selfint}
        return rec

    w2 = _word(q.w2, "w2")
    for x in w2:
        if abs(x) > rose.rank:
            raise QueryError(f"w2 uses generators beyond rank {rose.rank}")
    rec.w2 = str(w2)
    a2 = free_class(w2)
    result = bracket.amr_bracket(a1, a2, rose)
    rec.raw = _term_dicts(result.raw)
    rec.raw_count = len(result.raw)
    if q.mode in ("amr", "minint"):
        rec.reduced = _reduced_dicts(result)
        rec.terms_count = result.terms_count
        rec.value = bracket.min_intersection(a1, a2, rose)
    if q.mode == "goldman":
        g = bracket.goldman_bracket(a1, a2, rose)
        rec.goldman = _goldman_dicts(g)
        rec.value = sum(abs(c) for c in g.values())
    return rec


def run_query(q: QueryRecord) -> ResultRecord:
    """Answer one query; errors are returned inside the record."""
    try:
        return _run(q)
    except (QueryError, bracket.BracketError) as exc:
        return ResultRecord(q.mode, q.surface, _s(q.w1), _s(q.w2), error=str(exc), exit_code=1)
    except (RootViolation, AssertionError, ArithmeticError) as exc:
        return ResultRecord(
            q.mode, q.surface, _s(q.w1), _s(q.w2), error=f"internal: {exc}", exit_code=2
        )


def _s(x):
    return None if x is None else str(x)


def run_batch(lines) -> list:
    """One result per nonblank JSON line, in input order."""
    results = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            q = QueryRecord.from_dict(json.loads(line))
        except (json.JSONDecodeError, QueryError) as exc:
            results.append(
                ResultRecord(None, None, None, None, error=f"line {lineno}: {exc}", exit_code=1)
            )
            continue
        results.append(run_query(q))
    return results


# ---------------------------------------------------------------------------
# text rendering


def render_text(d: dict) -> str:
    if d.get("error"):
        return f"error: {d['error']}"
    lines = []
    head = f"{d['mode']} on {d['surface']}: {d['w1']}"
    if d.get("w2") is not None:
        head += f" , {d['w2']}"
    lines.append(head)
    for key in ("p", "q", "root", "exponent", "self_intersection"):
        if key in d:
            lines.append(f"  {key}: {d[key]}")
    if "raw" in d:
        lines.append(f"  raw terms ({d['raw_count']}):")
        for t in d["raw"]:
            lines.append(f"    {'+' if t['sign'] > 0 else '-'} {t['first']} . {t['second']}")
    elif "raw_count" in d:
        lines.append(f"  raw terms: {d['raw_count']}")
    if "reduced" in d:
        lines.append(f"  reduced terms ({d['terms_count']}):")
        for t in d["reduced"]:
            lines.append(f"    {t['coefficient']:+d} {t['first']} . {t['second']}")
    if "goldman" in d:
        lines.append("  goldman:")
        for t in d["goldman"]:
            lines.append(f"    {t['coefficient']:+d} <{t['class']}>")
    lines.append(f"  value: {d['value']}")
    return "\n".join(lines)


def _emit(records: list, fmt: str, show_raw: bool, out) -> None:
    for rec in records:
        d = rec.to_dict(show_raw=show_raw)
        if fmt == "json":
            out.write(json.dumps(d, sort_keys=True) + "\n")
        else:
            out.write(render_text(d) + "\n")


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name.upper(), default)


def _truthy(value) -> bool:
    return str(value).lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", default=_env("surface", "pants"))
    common.add_argument("--format", choices=("json", "text"), default=_env("format", "text"))
    common.add_argument(
        "--show-raw", action="store_true", default=_truthy(_env("show_raw", "0"))
    )

    parser = argparse.ArgumentParser(prog="loopbracket", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for mode in ("amr", "goldman", "minint"):
        sp = sub.add_parser(mode, parents=[common])
        sp.add_argument("w1")
        sp.add_argument("w2")
    sp = sub.add_parser("selfint", parents=[common])
    sp.add_argument("w1")
    sp = sub.add_parser("theorem2", parents=[common])
    sp.add_argument("w1")
    sp.add_argument("--p", type=int, default=int(_env("p", 1)))
    sp.add_argument("--q", type=int, default=int(_env("q", 2)))
    sp = sub.add_parser("torus", parents=[common])
    sp.add_argument("c1")
    sp.add_argument("c2")
    sp = sub.add_parser("batch", parents=[common])
    sp.add_argument("path", help="JSON-lines file, or - for stdin")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--seed", type=int, default=int(_env("seed", 0)))
    sp.add_argument("--budget", type=int, default=int(_env("budget", 20)))
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    if args.command == "verify":
        report = verify(args.seed, args.budget)
        if args.format == "json":
            out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
        else:
            out.write("\n".join(report.lines()) + "\n")
        return 0 if report.passed else 2

    if args.command == "batch":
        try:
            if args.path == "-":
                records = run_batch(sys.stdin)
            else:
                with open(args.path) as fh:
                    records = run_batch(fh)
        except OSError as exc:
            out.write(f"error: {exc}\n")
            return 1
        _emit(records, args.format, args.show_raw, out)
        return max((r.exit_code for r in records), default=0)

    if args.command == "torus":
        q = QueryRecord("torus", args.c1, args.c2, surface="torus")
    else:
        q = QueryRecord(
            args.command,
            args.w1,
            getattr(args, "w2", None),
            surface=args.surface,
            p=getattr(args, "p", None),
            q=getattr(args, "q", None),
        )
    rec = run_query(q)
    _emit([rec], args.format, args.show_raw, out)
    return rec.exit_code


if __name__ == "__main__":
    sys.exit(main())
