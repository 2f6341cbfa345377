"""Command-line entry point: ``impprob <command> ...``.

Every command prints canonical JSON (sorted keys) on stdout, except ``plot``
which writes an SVG file and prints a short JSON summary.  Failures print a
JSON error object and exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path

from . import corpus
from .bridge import R, check_oplax, phi
from .errors import ImpError, LangError
from .lang import elaborate_cp, elaborate_imp, infer, parse, pretty
from .lang.laws import run_law_suite
from .lang.syntax import BOOL, THREE, UNIT, Fin
from .oracles import ORACLES, run_oracle
from .plot import render_svg

log = logging.getLogger("impprob")

_TYPES = {"Unit": UNIT, "Bool": BOOL, "Three": THREE}


def parse_type(text: str):
    text = text.strip()
    if text in _TYPES:
        return _TYPES[text]
    m = re.fullmatch(r"Fin\((\d+)\)", text)
    if m and int(m.group(1)) >= 1:
        return Fin(int(m.group(1)))
    raise LangError(f"unknown type {text!r}; use Unit, Bool, Three or Fin(n)")


def parse_context(specs):
    """``["z:Bool", "w:Three"]`` to a typed context."""
    ctx = []
    for entry in specs or ():
        name, sep, ty = entry.partition(":")
        if not sep or not name.strip():
            raise LangError(f"context entries look like name:Type, got {entry!r}")
        ctx.append((name.strip(), parse_type(ty)))
    return ctx


def read_program(ref: str) -> str:
    """Source text from a file path, or from a bundled program named by its stem."""
    path = Path(ref)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    stem = path.name[:-4] if path.name.endswith(".imp") else path.name
    if stem in corpus.names():
        log.info("%s not found on disk; using the bundled program %s", ref, stem)
        return corpus.source(stem)
    raise FileNotFoundError(f"{ref}: no such file or bundled program "
                            f"(bundled: {', '.join(corpus.names())})")


def _typed(ref, context=()):
    return infer(parse(read_program(ref)), context)


def _seed(args) -> int:
    env = os.environ.get("IMP_SEED")
    return int(env) if env not in (None, "") else args.seed


def cmd_check(args):
    tt = _typed(args.file, parse_context(args.context))
    return {"program": pretty(tt.term), "type": str(tt.type), "grade": tt.grade.to_json(),
            "context": [[n, str(t)] for n, t in tt.context]}


def cmd_denote(args):
    return elaborate_imp(_typed(args.file, parse_context(args.context))).to_json()


def cmd_credal(args):
    tt = _typed(args.file, parse_context(args.context))
    f = elaborate_imp(tt)
    out = {
        "imp": R(f).to_json(),
        "cp": {order: elaborate_cp(tt, order).to_json() for order in ("left", "right")},
    }
    if f.dom.size == 1:
        out["phi"] = phi(f).to_json()
    return out


def cmd_compare(args):
    """``R(g . f)`` against ``R(g) . R(f)`` where ``g`` reads the output of ``f``."""
    tf = _typed(args.file_f)
    g_term = parse(read_program(args.file_g))
    tg = infer(g_term, [(args.bind, tf.type)])
    return check_oplax(elaborate_imp(tg), elaborate_imp(tf)).to_json()


def cmd_laws(args):
    return run_law_suite(seed=_seed(args), count=args.count).to_json()


def cmd_oracle(args):
    return run_oracle(args.which, seed=_seed(args), count=args.count).to_json()


def cmd_plot(args):
    tt = _typed(args.file, parse_context(args.context))
    S = phi(elaborate_imp(tt))
    Path(args.out).write_text(render_svg(S, title=Path(args.file).stem), encoding="utf-8")
    return {"out": str(args.out), "credal": S.to_json()}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="impprob", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def program_cmd(name, fn, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("file", help="program file, or the name of a bundled program")
        s.add_argument("--context", action="append", metavar="NAME:TYPE",
                       help="free variable and its type, e.g. z:Bool (repeatable)")
        s.set_defaults(fn=fn)
        return s

    program_cmd("check", cmd_check, "type and grade of a program")
    program_cmd("denote", cmd_denote, "graded stochastic matrix of a program")
    program_cmd("credal", cmd_credal, "credal images under both semantics")
    s = program_cmd("plot", cmd_plot, "draw a closed program's credal set as SVG")
    s.add_argument("out", help="output SVG path")

    s = sub.add_parser("compare", help="op-lax comparison of a two-stage composite")
    s.add_argument("file_f", help="closed first stage")
    s.add_argument("file_g", help="second stage with one free variable")
    s.add_argument("--bind", default="z", help="free variable of the second stage (default z)")
    s.set_defaults(fn=cmd_compare)

    s = sub.add_parser("laws", help="randomized program-equivalence law suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=200)
    s.set_defaults(fn=cmd_laws)

    s = sub.add_parser("oracle", help="randomized checks relating graded maps and credal sets")
    s.add_argument("which", choices=sorted(ORACLES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.set_defaults(fn=cmd_oracle)
    return p


def _emit(obj, stream):
    stream.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        result = args.fn(args)
    except ImpError as e:
        _emit(e.to_json(), sys.stdout)
        return 1
    except (FileNotFoundError, ValueError) as e:
        _emit({"error": type(e).__name__, "message": str(e)}, sys.stdout)
        return 1
    _emit(result, sys.stdout)
    if isinstance(result, dict) and result.get("ok") is False:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
