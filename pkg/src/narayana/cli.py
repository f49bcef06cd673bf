"""Command-line interface.

    narayana family lucas-t --n 2
    narayana triangle B --n 4 --t 1
    narayana moments L1 --n 6
    narayana gamma D --n 5
    narayana verify all --out report.jsonl
    narayana bfile narayana@t=2 --n 20 --out b001003.txt
    narayana oeis-check A039598
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import urllib.request
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from . import families as fam
from .arith import IntPoly, RatFunc
from .families import XPoly
from .paths import NonGammaNonnegative, NotPalindromic, gamma_expand
from .render import ParseError, parse_intpoly, parse_rational, render_value, render_xpoly, render_xvalues
from .series import convolution_u
from .triangles import FUNCTIONALS, moments, narayana, narayana_b, triangle
from . import verify as vf

__all__ = [
    "main",
    "CliError",
    "UnknownFamily",
    "UnknownTriangle",
    "BadRange",
    "NotIntegerSequence",
    "FixtureMissing",
    "FetchDisabled",
    "MismatchAt",
    "derive_sequence",
    "load_fixture",
    "format_bfile",
]

FORMATS = ("table", "csv", "json-like", "bfile")
TRIANGLE_TAGS = {"A": "A", "B": "B", "D": "D", "E": "E", "ballot": "BALLOT", "lucas1": "LUCAS1"}


class CliError(Exception):
    exit_code = 2


class UnknownFamily(CliError):
    pass


class UnknownTriangle(CliError):
    pass


class BadRange(CliError):
    pass


class NotIntegerSequence(CliError):
    pass


class FixtureMissing(CliError):
    pass


class FetchDisabled(CliError):
    pass


class MismatchAt(CliError):
    exit_code = 1

    def __init__(self, index: int, expected, got):
        super().__init__(f"mismatch at index {index}: fixture {expected}, derived {got}")
        self.index = index


# ---------------------------------------------------------------- output helpers

def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": "))


def format_bfile(terms: Sequence[int], offset: int = 0) -> str:
    """OEIS b-file text: ``n a(n)`` per line, LF-terminated."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(terms))


def _t_value(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return parse_rational(text)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        raise BadRange(f"--t expects a rational number, got {text!r}") from exc


def _need_n(args) -> int:
    if args.n is None:
        raise BadRange("--n is required")
    if args.n < 0:
        raise BadRange("--n must be non-negative")
    return args.n


def _value(v, t0):
    if t0 is None:
        return v
    return v(t0) if isinstance(v, (IntPoly, RatFunc)) else v


# ---------------------------------------------------------------- family

def cmd_family(args) -> int:
    try:
        fn = fam.FAMILIES[args.name]
    except KeyError:
        raise UnknownFamily(f"unknown family {args.name!r}; choose from {', '.join(fam.FAMILIES)}") from None
    n = _need_n(args)
    t0 = _t_value(args.t)
    ns = range(n + 1) if args.all else [n]

    def show(p: XPoly) -> str:
        return render_xvalues(p.specialize(t0)) if t0 is not None else render_xpoly(p)

    members = [(k, show(fn(k))) for k in ns]
    if args.format == "csv":
        text = _csv([("n", "polynomial")] + members)
    elif args.format == "json-like":
        text = "\n".join(_json({"family": args.name, "n": k, "t": args.t, "polynomial": s}) for k, s in members)
    elif args.format == "bfile":
        raise BadRange("bfile format applies to integer sequences only")
    elif args.all:
        text = "\n".join(f"{k}: {s}" for k, s in members)
    else:
        text = members[0][1]
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------- triangle

def _triangle_tag(tag: str) -> str:
    try:
        return TRIANGLE_TAGS[tag]
    except KeyError:
        raise UnknownTriangle(f"unknown triangle {tag!r}; choose from {', '.join(TRIANGLE_TAGS)}") from None


def cmd_triangle(args) -> int:
    tag = _triangle_tag(args.tag)
    n = _need_n(args)
    t0 = _t_value(args.t)
    tri = triangle(tag, n)
    rows = [[render_value(_value(e, t0)) for e in tri.row(i)] for i in range(n + 1)]
    if args.format == "csv":
        text = _csv([("n", "k", "value")] + [(i, k, v) for i, r in enumerate(rows) for k, v in enumerate(r)])
    elif args.format == "json-like":
        text = _json({"triangle": args.tag, "t": args.t, "rows": rows})
    elif args.format == "bfile":
        flat = [_value(e, t0) for i in range(n + 1) for e in tri.row(i)]
        text = format_bfile(_integers(flat, f"triangle {args.tag}"))
    else:
        text = "\n".join(" ".join(r) for r in rows)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------- moments

def cmd_moments(args) -> int:
    if args.functional not in FUNCTIONALS:
        raise UnknownFamily(f"unknown functional {args.functional!r}; choose from {', '.join(FUNCTIONALS)}")
    n = _need_n(args)
    t0 = _t_value(args.t)
    vals = [_value(v, t0) for v in moments(args.functional, n)]
    _emit(_sequence_text(vals, args, "moment"), args.out)
    return 0


def _sequence_text(vals: List[object], args, label: str) -> str:
    if args.format == "csv":
        return _csv([("n", label)] + [(i, render_value(v)) for i, v in enumerate(vals)])
    if args.format == "json-like":
        return _json([render_value(v) for v in vals])
    if args.format == "bfile":
        return format_bfile(_integers(vals, label))
    return "\n".join(f"{i}: {render_value(v)}" for i, v in enumerate(vals))


# ---------------------------------------------------------------- gamma

def _gamma_rows(args) -> List[Tuple[str, IntPoly, int]]:
    kind = args.kind
    if kind == "poly":
        if not args.poly:
            raise BadRange("gamma poly needs --poly")
        try:
            p = parse_intpoly(args.poly)
        except ParseError as exc:
            raise BadRange(str(exc)) from exc
        return [(args.poly, p, p.degree)]
    n = _need_n(args)
    if kind in ("B", "D"):
        tri = triangle(kind, n)
        return [(f"k={k}", tri.entry(n, k).as_intpoly(), n - k) for k in range(n + 1)]
    if kind == "C":
        return [(f"C_{n + 1}", narayana(n + 1), n)]
    if kind == "M":
        return [(f"M_{n}", narayana_b(n), n)]
    if kind == "u":
        m = args.m or 1
        return [(f"u_{m}({n})", convolution_u(n, m), n)]
    raise UnknownTriangle(f"unknown gamma source {kind!r}")


def cmd_gamma(args) -> int:
    out = []
    for label, p, deg in _gamma_rows(args):
        try:
            g = gamma_expand(p, deg)
        except NotPalindromic as exc:
            raise BadRange(f"{label}: not palindromic ({exc})") from exc
        except NonGammaNonnegative as exc:
            g = exc.gamma
            print(f"warning: {label} has a negative gamma entry", file=sys.stderr)
        out.append((label, deg, list(g.gamma)))
    if args.format == "csv":
        text = _csv([("label", "degree", "gamma")] + [(lab, d, " ".join(map(str, g))) for lab, d, g in out])
    elif args.format == "json-like":
        text = "\n".join(_json({"label": lab, "degree": d, "gamma": [str(v) for v in g]}) for lab, d, g in out)
    else:
        text = "\n".join(f"{lab}: [{', '.join(map(str, g))}]" for lab, _d, g in out)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    if args.list:
        lines = []
        for c in vf.list_checks():
            rng = " ".join(f"{k}={v}" for k, v in c.defaults.items() if v is not None)
            mark = " [conjecture]" if c.conjecture else ""
            lines.append(f"{c.id}\t{rng}\t{c.description}{mark}")
        _emit("\n".join(lines), None)
        return 0
    ids = args.ids or ["all"]
    if "all" in ids:
        ids = [c.id for c in vf.list_checks()]
    known = {c.id for c in vf.list_checks()}
    for cid in ids:
        if cid not in known:
            raise vf.UnknownIdentity(cid)
    overrides = {"n_max": args.n, "m": args.m, "m_max": args.m_max, "order": args.order, "k_max": args.k_max}
    verdicts = [vf.run_check(cid, overrides) for cid in ids]

    records = [v.record() for v in verdicts]
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            for r in records:
                fh.write(_json(r) + "\n")
    if args.format == "json-like":
        sys.stdout.write("".join(_json(r) + "\n" for r in records))
    elif args.format == "csv":
        sys.stdout.write(_csv([("id", "status", "elapsed_ms")] + [(v.id, v.status, round(v.elapsed_ms, 3))
                                                                   for v in verdicts]))
    else:
        for v in verdicts:
            rng = " ".join(f"{k}={x}" for k, x in v.ranges.items() if x is not None)
            tag = "conjecture " if v.conjecture else ""
            print(f"{v.status.upper():15} {tag}{v.id} ({rng}) {v.elapsed_ms:.0f} ms")
            if v.evidence:
                print(f"    evidence: {v.evidence}")
            if v.witness:
                print(f"    witness: {v.witness}")
        bad = [v for v in verdicts if not v.passed and not v.conjecture]
        print(f"{len(verdicts) - len(bad)}/{len(verdicts)} checks without identity failures")
    return 1 if any(not v.passed and not v.conjecture for v in verdicts) else 0


# ---------------------------------------------------------------- sequences, b-files, fixtures

_SPEC = re.compile(r"^(?P<base>[A-Za-z0-9-]+?)(?:@t=(?P<t>[-0-9/]+))?$")
_COL = re.compile(r"^(?P<tri>A|B|D|E|ballot|lucas1)-col(?P<k>\d+)(?P<num>-numerator)?$")
_ROWS = re.compile(r"^(?P<tri>A|B|D|E|ballot|lucas1)-rows$")


def derive_sequence(spec: str, n_max: int, t_default: Optional[str] = None) -> Tuple[List[object], int]:
    """Exact terms and OEIS offset for a sequence spec such as ``narayana@t=2``.

    Specs: ``narayana``, ``M``, ``<tri>-col<k>``, ``E-col<k>-numerator`` (times ``1+t^{k+1}``),
    ``<tri>-rows`` (read by rows, rows ``0..n_max``) and ``delannoy-div3`` (indices ``n <= n_max``).
    """
    m = _SPEC.match(spec)
    if not m:
        raise BadRange(f"cannot parse sequence spec {spec!r}")
    base = m.group("base")
    t_text = m.group("t") or t_default
    t0 = _t_value(t_text) if t_text is not None else None
    if n_max < 0:
        raise BadRange("--n must be non-negative")

    def need_t():
        if t0 is None:
            raise BadRange(f"{spec!r} needs a value of t (append @t=<value> or pass --t)")
        return t0

    if base == "narayana":
        return [narayana(n)(need_t()) for n in range(n_max + 1)], 0
    if base == "M":
        return [narayana_b(n)(need_t()) for n in range(n_max + 1)], 0
    if base == "delannoy-div3":
        return [n for n in range(1, n_max + 1) if narayana_b(n)(2) % 3 == 0], 1
    cm = _COL.match(base)
    if cm:
        tag, k = TRIANGLE_TAGS[cm.group("tri")], int(cm.group("k"))
        tri = triangle(tag, n_max + k)
        t = need_t() if tag not in ("BALLOT", "LUCAS1") else (t0 or 1)
        scale = (1 + t ** (k + 1)) if cm.group("num") else 1
        if cm.group("num") and tag != "E":
            raise BadRange("-numerator applies to the E triangle only")
        return [tri.entry(n, k)(t) * scale for n in range(k, n_max + k + 1)], 0
    rm = _ROWS.match(base)
    if rm:
        tag = TRIANGLE_TAGS[rm.group("tri")]
        tri = triangle(tag, n_max)
        t = need_t() if tag not in ("BALLOT", "LUCAS1") else (t0 or 1)
        return [e(t) for n in range(n_max + 1) for e in tri.row(n)], 0
    raise BadRange(f"unknown sequence {base!r}")


def _integers(vals: Sequence[object], label: str) -> List[int]:
    out = []
    for i, v in enumerate(vals):
        if isinstance(v, (IntPoly, RatFunc)):
            raise NotIntegerSequence(f"{label}: term {i} is a polynomial; pass --t")
        f = Fraction(v)
        if f.denominator != 1:
            raise NotIntegerSequence(f"{label}: term {i} is {render_value(f)}, not an integer")
        out.append(f.numerator)
    return out


def cmd_bfile(args) -> int:
    n = _need_n(args)
    vals, offset = derive_sequence(args.spec, n, args.t)
    _emit(format_bfile(_integers(vals, args.spec), offset), args.out)
    return 0


# derived sequence behind each vendored fixture
FIXTURE_SPECS: Dict[str, str] = {
    "A001003": "narayana@t=2",
    "A039598": "B-rows@t=1",
    "A110440": "B-rows@t=2",
    "A039599": "A-rows@t=1",
    "A172094": "A-rows@t=2",
    "A094527": "D-rows@t=1",
    "A118384": "D-rows@t=2",
    "A108044": "lucas1-rows",
    "A081606": "delannoy-div3",
}


def parse_bfile(text: str) -> Tuple[int, List[int]]:
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        a, b = line.split()[:2]
        pairs.append((int(a), int(b)))
    if not pairs:
        raise FixtureMissing("b-file has no terms")
    return pairs[0][0], [b for _a, b in pairs]


def load_fixture(aid: str) -> Tuple[int, List[int]]:
    """``(offset, terms)`` of a vendored fixture."""
    if not re.fullmatch(r"A\d{6}", aid):
        raise FixtureMissing(f"not an OEIS id: {aid!r}")
    res = resources.files("narayana").joinpath("data", "oeis", f"{aid}.txt")
    if not res.is_file():
        raise FixtureMissing(f"no vendored fixture for {aid}; use --fetch with OEIS_BASE_URL")
    return parse_bfile(res.read_text())


def fetch_fixture(aid: str) -> Tuple[int, List[int]]:
    base = os.environ.get("OEIS_BASE_URL")
    if not base:
        raise FetchDisabled("--fetch needs OEIS_BASE_URL")
    url = f"{base.rstrip('/')}/{aid}/b{aid[1:]}.txt"
    with urllib.request.urlopen(url, timeout=30) as resp:
        return parse_bfile(resp.read().decode())


def _fixture_n_max(spec: str, offset: int, count: int) -> int:
    if "-rows" in spec:
        n = 0
        while (n + 1) * (n + 2) // 2 < count:
            n += 1
        return n
    if spec.startswith("delannoy-div3"):
        return 3 * count + 3  # qualifying n are dense enough; trimmed below
    return count - 1


def oeis_check(aid: str, spec: Optional[str] = None, fetch: bool = False) -> Tuple[int, List[int]]:
    """Compare derived terms with a fixture prefix; returns ``(checked, fixture terms)``."""
    offset, terms = fetch_fixture(aid) if fetch else load_fixture(aid)
    spec = spec or FIXTURE_SPECS.get(aid)
    if spec is None:
        raise BadRange(f"no derived sequence registered for {aid}; pass --spec")
    n_max = _fixture_n_max(spec, offset, len(terms))
    vals, d_offset = derive_sequence(spec, n_max)
    while spec.startswith("delannoy-div3") and len(vals) < len(terms):
        n_max *= 2
        vals, d_offset = derive_sequence(spec, n_max)
    derived = _integers(vals, spec)
    if d_offset != offset:
        raise MismatchAt(-1, f"offset {offset}", f"offset {d_offset}")
    for i, v in enumerate(terms):
        if i >= len(derived):
            raise MismatchAt(i, v, "missing")
        if derived[i] != v:
            raise MismatchAt(i, v, derived[i])
    return len(terms), terms


def cmd_oeis_check(args) -> int:
    checked, _terms = oeis_check(args.aid, args.spec, args.fetch)
    spec = args.spec or FIXTURE_SPECS.get(args.aid)
    _emit(f"PASS {args.aid} vs {spec}: {checked} terms agree", args.out)
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--t", help="specialize t to this rational value")
    common.add_argument("--n", "--n-max", dest="n", type=int, help="index or largest index")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--fetch", action="store_true", help="allow network access to OEIS_BASE_URL")

    p = argparse.ArgumentParser(prog="narayana", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", parents=[common], help="members of a polynomial family")
    s.add_argument("name", help=", ".join(fam.FAMILIES))
    s.add_argument("--all", action="store_true", help="print members 0..n")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("triangle", parents=[common], help="Catalan-Stieltjes triangle rows")
    s.add_argument("tag", help=", ".join(TRIANGLE_TAGS))
    s.set_defaults(func=cmd_triangle)

    s = sub.add_parser("moments", parents=[common], help="moments of a linear functional")
    s.add_argument("functional", help=", ".join(FUNCTIONALS))
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("gamma", parents=[common], help="gamma vectors")
    s.add_argument("kind", choices=["B", "D", "C", "M", "u", "poly"])
    s.add_argument("--m", type=int, help="convolution power for u")
    s.add_argument("--poly", help="palindromic polynomial in t, e.g. 1+4t+t^2")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("verify", parents=[common], help="run identity checks")
    s.add_argument("ids", nargs="*", help="check ids or 'all'")
    s.add_argument("--list", action="store_true", help="list registered checks")
    s.add_argument("--m", type=int)
    s.add_argument("--m-max", dest="m_max", type=int)
    s.add_argument("--order", type=int)
    s.add_argument("--k-max", dest="k_max", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bfile", parents=[common], help="OEIS b-file of a derived sequence")
    s.add_argument("spec", help="e.g. narayana@t=2, M@t=1, B-col0@t=1, E-col0-numerator@t=2, D-rows@t=2")
    s.set_defaults(func=cmd_bfile)

    s = sub.add_parser("oeis-check", parents=[common], help="compare against a vendored OEIS fixture")
    s.add_argument("aid", help=", ".join(FIXTURE_SPECS))
    s.add_argument("--spec", help="derived sequence spec (default: registered for the id)")
    s.set_defaults(func=cmd_oeis_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except vf.UnknownIdentity as exc:
        print(f"error: unknown identity {exc.args[0]!r} (see `narayana verify --list`)", file=sys.stderr)
        return 2
    except CliError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (fam.IndexOutOfTriangle, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
