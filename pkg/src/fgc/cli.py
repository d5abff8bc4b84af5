"""Command-line front end: ``fgc <subcommand> INPUT [options]``.

INPUT may be a JSON document, whitespace-separated images, ``powmod:a,n``,
``family:KIND:params`` (unions joined by ``+``), ``family-NAME`` for a
built-in worked graph, a file path, or ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import __version__
from .canonical import aut_count, classify_components, component_key, tree_code
from .centralizer import centralizer_report, enumerate_centralizer
from .decompose import components
from .errors import BoundExceeded, FgcError, ParseError
from .extremal import MODES, FamilySpec, construct, rows_to_csv, search_rows, union
from .funcgraph import Endofunction
from .homcount import hom_pseudocycle, hom_via_theorem34
from .named import NAMED, powmod
from .verify import errata_report, sweep, verify_function

__all__ = ["FunctionDocument", "parse_document", "parse_input", "parse_family", "run_command", "main"]

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BOUNDS = 0, 1, 2, 3


@dataclass(frozen=True)
class FunctionDocument:
    n: int
    map: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None
    generator: Optional[str] = None

    def function(self) -> Endofunction:
        return Endofunction(self.map)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "map": list(self.map)}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.generator is not None:
            out["generator"] = self.generator
        return out


# -- parsing ---------------------------------------------------------------------------

def _ints(body: str, offset: int, what: str) -> tuple[int, ...]:
    out = []
    pos = offset
    for tok in body.split(","):
        stripped = tok.strip()
        if not re.fullmatch(r"-?\d+", stripped):
            raise ParseError(f"expected an integer in {what}, got {stripped!r}", 1, pos)
        out.append(int(stripped))
        pos += len(tok) + 1
    return tuple(out)


def parse_family(text: str, offset: int = 0) -> FamilySpec:
    """``W:2,3`` or ``W:2,3+Z:2+Z:4`` -> :class:`FamilySpec`."""
    parts = []
    pos = offset
    for chunk in text.split("+"):
        m = re.fullmatch(r"\s*([ZUW]):([-\d,\s]+)\s*", chunk)
        if not m:
            raise ParseError(f"bad family term {chunk!r}; expected Z:n, U:m,t or W:m,t", 1, pos)
        parts.append(FamilySpec(m.group(1), _ints(m.group(2), pos + m.start(2), "family parameters")))
        pos += len(chunk) + 1
    return parts[0] if len(parts) == 1 else union(*parts)


def _parse_json(text: str) -> FunctionDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict) or "map" not in doc:
        raise ParseError('JSON input must be an object with a "map" field')
    images = doc["map"]
    if not isinstance(images, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in images):
        raise ParseError('"map" must be a list of integers')
    n = doc.get("n", len(images))
    if n != len(images):
        raise ParseError(f'"n" is {n} but "map" has {len(images)} entries')
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise ParseError('"labels" must be a list of length n')
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != n:
            raise ParseError("labels must be unique")
    Endofunction(tuple(images))
    return FunctionDocument(n, tuple(images), labels, doc.get("generator"))


def _parse_plain(text: str) -> FunctionDocument:
    images = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in re.finditer(r"\S+", line):
            tok = m.group()
            if not re.fullmatch(r"-?\d+", tok):
                raise ParseError(f"expected an integer, got {tok!r}", lineno, m.start() + 1)
            images.append(int(tok))
    Endofunction(tuple(images))
    return FunctionDocument(len(images), tuple(images))


def parse_document(text: str) -> FunctionDocument:
    """Parse any accepted input form; files and stdin are resolved by the caller."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json(text)
    if stripped.startswith("powmod:"):
        a, n = _parse_powmod(stripped)
        return FunctionDocument(n, powmod(a, n).images, generator=stripped)
    if stripped.startswith("family:"):
        f = construct(parse_family(stripped[len("family:"):], len("family:")))
        return FunctionDocument(f.n, f.images, generator=stripped)
    if stripped.startswith("family-"):
        name = stripped[len("family-"):]
        if name not in NAMED:
            raise ParseError(f"unknown named graph {name!r}; choose from {', '.join(sorted(NAMED))}", 1, 8)
        f = NAMED[name]
        return FunctionDocument(f.n, f.images, generator=stripped)
    return _parse_plain(text)


def _parse_powmod(text: str) -> tuple[int, int]:
    vals = _ints(text[len("powmod:"):], len("powmod:"), "powmod:a,n")
    if len(vals) != 2 or vals[1] < 1 or vals[0] < 0:
        raise ParseError("powmod needs a >= 0 and n >= 1, as powmod:a,n", 1, len("powmod:"))
    return vals[0], vals[1]


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def parse_input(source: str) -> Endofunction:
    """Accepts literal text, a file path, or ``-`` for stdin."""
    return parse_document(_read_source(source)).function()


def _load(arg: str) -> FunctionDocument:
    return parse_document(_read_source(arg))


# -- reports ---------------------------------------------------------------------------

def _digits(x: int) -> int:
    return len(str(x))


def json_report(doc: FunctionDocument) -> dict:
    f = doc.function()
    rep = centralizer_report(f)
    comps = []
    for pc in components(f):
        comps.append(
            {
                "cycle": list(pc.cycle),
                "trees": [
                    {"root": t.root, "vertices": list(t.vertices), "code": tree_code(t), "aut": str(aut_count(t))}
                    for t in pc.trees
                ],
                "class_key": component_key(pc),
                "aut": str(_component_aut(pc)),
            }
        )
    return {
        "input": doc.to_json(),
        "components": comps,
        "counts": {"total": str(rep.total), "bijective": str(rep.bijective_total), "digits": _digits(rep.total)},
        "matrix": [[str(x) for x in row] for row in rep.per_component],
    }


def _component_aut(pc) -> int:
    """Automorphisms of one component: cycle rotations preserving it times tree automorphisms."""
    from math import prod

    from .canonical import rotation_order

    codes = [tree_code(t) for t in pc.trees]
    return (len(codes) // rotation_order(codes)) * prod(aut_count(t) for t in pc.trees)


def text_report(doc: FunctionDocument) -> str:
    f = doc.function()
    rep = centralizer_report(f)
    lines = [f"n = {f.n}", f"map = {' '.join(map(str, f.images))}"]
    comps = components(f)
    lines.append(f"components = {len(comps)}")
    for i, pc in enumerate(comps):
        cyc = " ".join(doc.label(v) for v in pc.cycle)
        lines.append(f"  P{i}: cycle ({cyc}), {pc.size} vertices, aut {_component_aut(pc)}")
        lines.append(f"      key {component_key(pc)}")
    lines.append("classes:")
    for c in rep.class_summary:
        lines.append(f"  {c.key}: n_T={c.n_T} s_T={c.s_T}")
    lines.append("hom matrix:")
    for row in rep.per_component:
        lines.append("  " + " ".join(str(x) for x in row))
    lines.append(f"|C(f)| = {rep.total} ({_digits(rep.total)} digits)")
    lines.append(f"|C_bij(f)| = {rep.bijective_total} ({_digits(rep.bijective_total)} digits)")
    return "\n".join(lines) + "\n"


def dot_export(doc: FunctionDocument) -> str:
    f = doc.function()
    lines = ["digraph f {"]
    for i, pc in enumerate(components(f)):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="P{i}";')
        for v in pc.vertices:
            label = doc.label(v).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'    {v} [label="{label}"];')
        lines.append("  }")
    for v, w in enumerate(f.images):
        lines.append(f"  {v} -> {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- argument handling -----------------------------------------------------------------

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _cycles_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fgc", description="Functional graphs and the functions commuting with them.")
    p.add_argument("--version", action="version", version=f"fgc {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="decompose f and report components, classes and counts")
    a.add_argument("input")
    a.add_argument("--json", action="store_true")

    c = sub.add_parser("count", help="print |C(f)| and |C_bij(f)|")
    c.add_argument("input")
    c.add_argument("--bijective-only", action="store_true")

    e = sub.add_parser("enumerate", help="list commuting functions in lexicographic order")
    e.add_argument("input")
    e.add_argument("--bijective-only", action="store_true")
    e.add_argument("--limit", type=int, default=None)
    e.add_argument("--json", action="store_true", help="one JSON array per line")

    h = sub.add_parser("hom-count", help="count homomorphisms between two components")
    h.add_argument("input")
    h.add_argument("--from", dest="src", type=int, required=True)
    h.add_argument("--to", dest="tgt", type=int, required=True)
    h.add_argument("--antichain-sum", action="store_true", help="also count by summing over antichain sequences")

    v = sub.add_parser("verify", help="cross-check formulas against brute force")
    v.add_argument("input", nargs="?")
    v.add_argument("--oracle", action="store_true")
    v.add_argument("--max-n", type=int, default=None, help="sweep every endofunction with n <= N")
    v.add_argument("--errata", action="store_true", help="report published values that fail to reproduce")
    v.add_argument("--force", action="store_true", help="ignore the brute-force size bound")

    x = sub.add_parser("extremal", help="search isomorphism classes for extremal centralizer sizes")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--mode", choices=MODES + ("rigid", "max"), default=None)
    x.add_argument("--cycles", type=_cycles_arg, default=None)
    x.add_argument("--bound", type=int, default=None)

    k = sub.add_parser("construct", help="build a family member, e.g. W:2,3 or W:2,3+Z:2+Z:4")
    k.add_argument("family")
    k.add_argument("--json", action="store_true")

    d = sub.add_parser("export-dot", help="Graphviz DOT of the functional graph")
    d.add_argument("input")
    return p


def _cmd_analyze(args, out: TextIO) -> int:
    doc = _load(args.input)
    if args.json:
        out.write(json.dumps(json_report(doc), indent=2, sort_keys=False) + "\n")
    else:
        out.write(text_report(doc))
    return EXIT_OK


def _cmd_count(args, out: TextIO) -> int:
    f = _load(args.input).function()
    rep = centralizer_report(f)
    if not args.bijective_only:
        out.write(f"|C(f)| = {rep.total} ({_digits(rep.total)} digits)\n")
    out.write(f"|C_bij(f)| = {rep.bijective_total} ({_digits(rep.bijective_total)} digits)\n")
    return EXIT_OK


def _cmd_enumerate(args, out: TextIO) -> int:
    if args.limit is not None and args.limit < 0:
        raise _UsageError("--limit must be non-negative")
    f = _load(args.input).function()
    for i, g in enumerate(enumerate_centralizer(f, args.bijective_only)):
        if args.limit is not None and i >= args.limit:
            break
        out.write((json.dumps(list(g.images)) if args.json else " ".join(map(str, g.images))) + "\n")
    return EXIT_OK


def _cmd_hom_count(args, out: TextIO) -> int:
    f = _load(args.input).function()
    comps = components(f)
    for idx in (args.src, args.tgt):
        if not 0 <= idx < len(comps):
            raise _UsageError(f"component index {idx} out of range; f has {len(comps)} components")
    p, q = comps[args.src], comps[args.tgt]
    value = hom_pseudocycle(p, q, f)
    out.write(f"|Hom(P{args.src}, P{args.tgt})| = {value}\n")
    if args.antichain_sum:
        other = hom_via_theorem34(p, q, f)
        out.write(f"antichain sum = {other} {'OK' if other == value else 'MISMATCH'}\n")
        if other != value:
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    if args.input is None and args.max_n is None and not args.errata:
        raise _UsageError("verify needs an INPUT, --max-n N or --errata")
    bad = 0
    if args.input is not None:
        for chk in verify_function(_load(args.input).function(), oracle=args.oracle, force=args.force):
            out.write(chk.line() + "\n")
            bad += not chk.ok
    if args.max_n is not None:
        if args.max_n < 0:
            raise _UsageError("--max-n must be non-negative")
        total = 0
        for f, chk in sweep(args.max_n, oracle=args.oracle, force=args.force):
            total += 1
            if not chk.ok:
                bad += 1
                out.write(f"[{' '.join(map(str, f.images))}] {chk.line()}\n")
        out.write(f"sweep n<={args.max_n}: {total} checks, {bad} mismatches\n")
    if args.errata:
        for d in errata_report():
            out.write(d.line() + "\n")
            bad += d.computed != d.oracle
    return EXIT_MISMATCH if bad else EXIT_OK


def _cmd_extremal(args, out: TextIO) -> int:
    mode = args.mode or ("max" if args.cycles else None)
    if mode is None:
        raise _UsageError("--mode is required unless --cycles is given")
    if args.cycles and mode != "max":
        raise _UsageError("--cycles only applies to --mode max")
    out.write(rows_to_csv(search_rows(args.n, mode, args.cycles, args.bound)))
    return EXIT_OK


def _cmd_construct(args, out: TextIO) -> int:
    text = args.family[len("family:"):] if args.family.startswith("family:") else args.family
    f = construct(parse_family(text))
    if args.json:
        doc = FunctionDocument(f.n, f.images, generator=f"family:{text}")
        out.write(json.dumps(doc.to_json()) + "\n")
    else:
        out.write(" ".join(map(str, f.images)) + "\n")
    return EXIT_OK


def _cmd_export_dot(args, out: TextIO) -> int:
    out.write(dot_export(_load(args.input)))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "hom-count": _cmd_hom_count,
    "verify": _cmd_verify,
    "extremal": _cmd_extremal,
    "construct": _cmd_construct,
    "export-dot": _cmd_export_dot,
}


def _dispatch(argv: Sequence[str], out: TextIO, err: TextIO) -> int:
    try:
        args = build_parser().parse_args(list(argv))
        return _COMMANDS[args.command](args, out)
    except _UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except BoundExceeded as e:
        err.write(f"bound exceeded: {e}\n")
        return EXIT_BOUNDS
    except (FgcError, ValueError, KeyError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


@dataclass(frozen=True)
class CommandResult:
    code: int
    stdout: str
    stderr: str


def run_command(argv: Sequence[str]) -> CommandResult:
    """Run one invocation in-process and capture its output."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = _dispatch(argv, out, err)
        except SystemExit as e:  # --help / --version
            code = e.code if isinstance(e.code, int) else EXIT_USAGE
    return CommandResult(code, out.getvalue(), err.getvalue())


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return _dispatch(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)
    except BrokenPipeError:
        return EXIT_OK
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
