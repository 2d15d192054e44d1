"""Command line front end.

Exit codes: 0 on success, 1 when a checked property fails (or a polynomial
is not a divisibility polynomial), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .cyclotomic import cyclotomic, phi_of_set
from .errors import DivSeqError, ParseError
from .polyring import IntPoly
from .recognizer import canonical_form, recognize
from .satset import (
    HasseDiagram,
    MultiplicityMap,
    compress_core,
    hasse_diagram,
    is_order_reversing,
    maximal_generators,
    saturate,
)
from .lucasring import (
    RingParams,
    SequenceSpec,
    seq_range,
    verify_divisibility,
    verify_strong_divisibility,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z_]\w*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text: str, var: str = "x") -> IntPoly:
    """Parse sums of integer monomials such as ``x^4 + x^3 - x - 1`` or ``3*x^2 - 2x``."""
    tokens = _tokenize(text)
    i = 0

    def peek() -> tuple[str, str, int]:
        return tokens[i]

    def take() -> tuple[str, str, int]:
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expect_int(what: str) -> int:
        kind, val, pos = take()
        if kind != "int":
            raise ParseError(f"expected {what}, found {val or 'end of input'!r}", pos)
        return int(val)

    coeffs: dict[int, int] = {}
    sign = 1
    kind, val, pos = peek()
    if kind == "op" and val in "+-":
        take()
        sign = -1 if val == "-" else 1
    while True:
        kind, val, pos = peek()
        coef, exp = 1, 0
        if kind == "int":
            coef = int(take()[1])
            if peek()[:2] == ("op", "*"):
                take()
                kind, val, pos = peek()
                if (kind, val) != ("name", var):
                    raise ParseError(f"expected {var!r} after '*'", pos)
            kind, val, pos = peek()
        elif kind != "name":
            raise ParseError(f"expected a coefficient or {var!r}, found {val or 'end of input'!r}", pos)
        if kind == "name":
            if val != var:
                raise ParseError(f"unknown symbol {val!r}", pos)
            take()
            exp = 1
            if peek()[:2] == ("op", "^"):
                take()
                exp = expect_int("a nonnegative integer exponent")
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        kind, val, pos = take()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            continue
        raise ParseError(f"expected '+', '-' or end of input, found {val!r}", pos)
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def emit_dot(d: HasseDiagram) -> str:
    """DOT digraph of a Hasse diagram, edges pointing upward.

    Nodes are labeled by value alone for plain sets; once any multiplicity
    differs from 1 every node carries "value (mult)".
    """
    labeled = any(m != 1 for _, m in d.nodes)
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for v, m in sorted(d.nodes):
        label = f"{v} ({m})" if labeled else str(v)
        lines.append(f'  n{v} [label="{label}"];')
    for a, b in sorted(d.edges):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _map_arg(text: str) -> dict[int, int]:
    out = {}
    for item in text.split(","):
        h, sep, m = item.partition(":")
        try:
            out[int(h)] = int(m)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected h:m pairs, got {item!r}")
        if not sep or int(h) < 1 or int(m) < 0:
            raise argparse.ArgumentTypeError(f"expected h:m pairs, got {item!r}")
    return out


def _build_map(generators: list[int] | None, overrides: dict[int, int] | None) -> MultiplicityMap:
    """Indicator of <generators>, with multiplicities replaced by --map entries."""
    base = {h: 1 for h in saturate(generators)} if generators else {}
    if overrides:
        if base and not set(overrides) <= set(base):
            extra = sorted(set(overrides) - set(base))
            raise DivSeqError(f"--map entries {extra} lie outside the set")
        base.update(overrides)
    lam = MultiplicityMap.from_dict(base)
    if not is_order_reversing(lam):
        raise DivSeqError(f"multiplicities {lam} are not order-reversing")
    return lam


def _format_set(s) -> str:
    return "<" + ",".join(map(str, maximal_generators(s))) + ">"


def _cmd_cyclo(args, out) -> int:
    out.write(f"{cyclotomic(args.N)}\n")
    return 0


def _cmd_phi_set(args, out) -> int:
    out.write(f"{phi_of_set(saturate(args.generators))}\n")
    return 0


def _cmd_recognize(args, out) -> int:
    f = parse_polynomial(args.poly)
    try:
        dec = recognize(f)
    except DivSeqError as e:
        out.write(f"not a divisibility polynomial ({type(e).__name__}): {e}\n")
        return 1
    factors = " * ".join(
        f"Phi_{h}" + (f"^{m}" if m > 1 else "") for h, m in dec.map.items()
    ) or "1"
    out.write(f"C = {dec.constant}\ns = {dec.power}\nmap = {dec.map}\n")
    out.write(f"normal part = {factors}\n")
    return 0


def _cmd_canon(args, out) -> int:
    f = parse_polynomial(args.poly)
    try:
        C, s, factors = canonical_form(f)
    except DivSeqError as e:
        out.write(f"not a divisibility polynomial ({type(e).__name__}): {e}\n")
        return 1
    parts = [str(C)] if C != 1 or not factors and s == 0 else []
    if s:
        parts.append("x" if s == 1 else f"x^{s}")
    for core, e in factors:
        arg = "x" if e == 1 else f"x^{e}"
        parts.append(f"Phi_{_format_set(core)}({arg})")
    out.write(" * ".join(parts) + "\n")
    return 0


def _cmd_hasse(args, out) -> int:
    diagram = hasse_diagram(_build_map(args.generators, args.map))
    if args.dot:
        out.write(emit_dot(diagram))
    else:
        out.write("nodes: " + ", ".join(f"{v}({m})" for v, m in diagram.nodes) + "\n")
        out.write("edges: " + ", ".join(f"{a}-{b}" for a, b in diagram.edges) + "\n")
    return 0


def _spec_from_args(args) -> SequenceSpec:
    if not args.set and not args.map:
        raise DivSeqError("one of --set or --map is required")
    return SequenceSpec(_build_map(args.set, args.map), RingParams(args.P, args.Q))


def _cmd_seq(args, out) -> int:
    spec = _spec_from_args(args)
    terms = seq_range(spec, args.n)
    if args.json:
        gens = maximal_generators(saturate(spec.map.support)) if spec.map else []
        doc = {
            "P": args.P,
            "Q": args.Q,
            "generators": gens,
            "map": {str(h): m for h, m in spec.map.items()},
            "terms": [str(t) for t in terms],
        }
        out.write(json.dumps(doc) + "\n")
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "term"])
        w.writerows(enumerate(terms))
    else:
        out.write("\n".join(map(str, terms)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    spec = _spec_from_args(args)
    check = verify_divisibility if args.property == "div" else verify_strong_divisibility
    witness = check(spec, args.n)
    if witness is None:
        out.write("OK\n")
        return 0
    m, n = witness
    out.write(f"counterexample: m={m} n={n}\n")
    return 1


def _cmd_compress(args, out) -> int:
    core, e = compress_core(saturate(args.generators))
    out.write(f"core = {_format_set(core)}\nexponent = {e}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="divseq",
        description="Divisibility polynomials, cyclotomic products and their integer sequences.",
    )
    p.add_argument("-o", dest="output", metavar="PATH", help="write results to PATH instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cyclo", help="print the N-th cyclotomic polynomial")
    s.add_argument("N", type=int)
    s.set_defaults(func=_cmd_cyclo)

    s = sub.add_parser("phi-set", help="print the product of Phi_d over <G1,...>")
    s.add_argument("generators", type=_int_list)
    s.set_defaults(func=_cmd_phi_set)

    for name, func in (("recognize", _cmd_recognize), ("canon", _cmd_canon)):
        s = sub.add_parser(name)
        s.add_argument("poly")
        s.set_defaults(func=func)

    s = sub.add_parser("hasse", help="Hasse diagram of <G1,...>, optionally labeled")
    s.add_argument("generators", type=_int_list)
    s.add_argument("--map", type=_map_arg)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=_cmd_hasse)

    def seq_options(s: argparse.ArgumentParser) -> None:
        s.add_argument("--set", type=_int_list)
        s.add_argument("--map", type=_map_arg)
        s.add_argument("-P", type=int, required=True)
        s.add_argument("-Q", type=int, required=True)
        s.add_argument("-n", type=int, required=True)

    s = sub.add_parser("seq", help="terms A_0..A_n")
    seq_options(s)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    s.set_defaults(func=_cmd_seq)

    s = sub.add_parser("verify", help="check (strong) divisibility up to n")
    s.add_argument("property", choices=["div", "strongdiv"])
    seq_options(s)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("compress", help="split <G1,...> into core and exponent")
    s.add_argument("generators", type=_int_list)
    s.set_defaults(func=_cmd_compress)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("-n must be nonnegative")
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except DivSeqError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
