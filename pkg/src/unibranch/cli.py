"""Command line interface.

Inputs use one of three grammars::

    --semigroup "10,15,36"       any generating set of the semigroup
    --char      "10;15,21"       multiplicity ; characteristic exponents
    --pairs     "2,3;5,11"       Enriques pairs (p,q) separated by ';'

Exit status: 0 on success, 2 on parse/validation errors, 3 when a
verification step finds a mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import invariants, jumping, oracle, selftest
from .enriques import (
    branch_divisor,
    canonical_coeffs,
    from_pairs,
    proximity,
    relevant_positions,
)
from .errors import ParseError, ValidationError

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 2, 3


# parsing


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode())


def _parse_int_list(text: str, start: int, end: int, what: str) -> list[int]:
    """Comma-separated positive integers in ``text[start:end]``."""
    values = []
    pos = start
    for chunk in text[start:end].split(","):
        stripped = chunk.strip()
        lead = pos + (len(chunk) - len(chunk.lstrip()))
        if not stripped.isdigit() or not stripped.isascii():
            raise ParseError(f"expected a positive integer in {what}, got {stripped!r}", text, _byte_offset(text, lead))
        value = int(stripped)
        if value == 0:
            raise ParseError(f"{what} entries must be positive", text, _byte_offset(text, lead))
        values.append(value)
        pos += len(chunk) + 1
    return values


def parse_semigroup(text: str) -> invariants.SemigroupGenerators:
    gens = _parse_int_list(text, 0, len(text), "semigroup")
    return invariants.canonicalize_generators(gens)


def parse_characteristic(text: str):
    head, sep, tail = text.partition(";")
    (m,) = _parse_int_list(text, 0, len(head), "multiplicity")
    if not tail.strip():
        if m == 1:
            return invariants.SMOOTH
        raise ValidationError(f"multiplicity {m} needs at least one characteristic exponent")
    beta = _parse_int_list(text, len(head) + len(sep), len(text), "characteristic")
    return invariants.PuiseuxCharacteristic(m, tuple(beta))


def parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    if not text.strip():
        return ()
    pairs = []
    pos = 0
    for chunk in text.split(";"):
        values = _parse_int_list(text, pos, pos + len(chunk), "pair")
        if len(values) != 2:
            raise ParseError(f"a pair needs exactly two integers, got {len(values)}", text, _byte_offset(text, pos))
        pairs.append(tuple(values))
        pos += len(chunk) + 1
    return invariants.validate_pairs(pairs)


def format_semigroup(s: invariants.SemigroupGenerators) -> str:
    return ",".join(map(str, s.beta_bar))


def format_characteristic(c) -> str:
    if c is invariants.SMOOTH:
        return "1;"
    return f"{c.m};" + ",".join(map(str, c.beta))


def format_pairs(pairs) -> str:
    return ";".join(f"{p},{q}" for p, q in pairs)


def format_fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class InputSpec:
    kind: str
    text: str

    def invariants(self) -> invariants.CurveInvariants:
        if self.kind == "semigroup":
            return invariants.CurveInvariants.from_semigroup(parse_semigroup(self.text))
        if self.kind == "characteristic":
            return invariants.CurveInvariants.from_characteristic(parse_characteristic(self.text))
        return invariants.CurveInvariants.from_pairs(parse_pairs(self.text))


def _input_spec(args) -> InputSpec:
    for kind in ("semigroup", "characteristic", "pairs"):
        value = getattr(args, kind)
        if value is not None:
            return InputSpec(kind, value)
    raise ValidationError("one of --semigroup, --char or --pairs is required")


# commands; each returns (exit status, text for stdout)


def jump_report_json(spec: InputSpec, inv: invariants.CurveInvariants, report: jumping.JumpingReport) -> dict:
    return {
        "input": {"kind": spec.kind, "text": spec.text},
        "pairs": format_pairs(inv.pairs),
        "semigroup": format_semigroup(inv.semigroup),
        "characteristic": format_characteristic(inv.characteristic),
        "qbar": list(report.qbar),
        "jumping_numbers": [
            {"num": n.value.numerator, "den": n.value.denominator, "contributors": sorted(n.contributors)}
            for n in report.numbers
        ],
        "lct": None if report.lct is None else format_fraction(report.lct),
    }


def cmd_jump(spec: InputSpec, fmt: str = "text", contributors: bool = False, verify: bool = False):
    if fmt == "dot":
        raise ValidationError("dot output is only available for the tree command")
    inv = spec.invariants()
    if verify:
        check = oracle.verify_formula(inv.pairs)
        if not check.ok:
            return EXIT_MISMATCH, None, f"verification failed: {check.first_mismatch}"
    report = jumping.jumping_numbers_from_tree(inv.pairs)
    if fmt == "json":
        return EXIT_OK, json.dumps(jump_report_json(spec, inv, report), indent=2), None
    lines = []
    for n in report.numbers:
        line = str(n)
        if contributors:
            line += " " + ",".join(map(str, sorted(n.contributors)))
        lines.append(line)
    return EXIT_OK, "\n".join(lines), None


TARGETS = {"semigroup": "semigroup", "characteristic": "characteristic", "char": "characteristic", "pairs": "pairs"}


def cmd_convert(spec: InputSpec, target: str):
    inv = spec.invariants()
    target = TARGETS[target]
    if target == "semigroup":
        return EXIT_OK, format_semigroup(inv.semigroup), None
    if target == "characteristic":
        return EXIT_OK, format_characteristic(inv.characteristic), None
    return EXIT_OK, format_pairs(inv.pairs), None


def tree_dot(pairs) -> str:
    tree = from_pairs(pairs)
    w = branch_divisor(tree).w if tree.vertex_count else ()
    relevant = set(relevant_positions(tree)) if tree.vertex_count else set()
    lines = ["digraph enriques {", "  node [shape=circle];"]
    for alpha in tree.vertices():
        attrs = f'label="P_{alpha} (w={w[alpha - 1]})"'
        if alpha in relevant:
            attrs += ", relevant=true, peripheries=2"
        lines.append(f"  P{alpha} [{attrs}];")
    for alpha, kind in enumerate(tree.edge_kinds, start=1):
        lines.append(f"  P{alpha} -> P{alpha + 1} [kind={kind}];")
    lines.append("}")
    return "\n".join(lines)


def tree_summary(pairs) -> dict:
    tree = from_pairs(pairs)
    if not tree.vertex_count:
        return {"pairs": format_pairs(pairs), "vertices": 0, "weights": [], "edges": [], "proximity": {},
                "relevant": [], "e": [], "w": [], "k": []}
    D = branch_divisor(tree)
    prox = proximity(tree)
    return {
        "pairs": format_pairs(pairs),
        "vertices": tree.vertex_count,
        "weights": list(D.w),
        "edges": [str(kind) for kind in tree.edge_kinds],
        "proximity": {str(b): sorted(prox[b], reverse=True) for b in tree.vertices() if b > 1},
        "relevant": list(relevant_positions(tree)),
        "e": list(D.e),
        "w": list(D.w),
        "k": list(canonical_coeffs(tree)),
    }


def cmd_tree(spec: InputSpec, fmt: str = "text"):
    inv = spec.invariants()
    if fmt == "dot":
        return EXIT_OK, tree_dot(inv.pairs), None
    info = tree_summary(inv.pairs)
    if fmt == "json":
        return EXIT_OK, json.dumps(info, indent=2), None
    join = lambda xs: " ".join(map(str, xs))  # noqa: E731
    lines = [
        f"pairs: {info['pairs']}",
        f"vertices: {info['vertices']}",
        f"weights: {join(info['weights'])}",
        f"edges: {join(info['edges'])}",
        "proximity: " + " ".join(f"P{b}>{','.join(map(str, v))}" for b, v in info["proximity"].items()),
        f"relevant: {join(info['relevant'])}",
        f"e: {join(info['e'])}",
        f"w: {join(info['w'])}",
        f"k: {join(info['k'])}",
    ]
    return EXIT_OK, "\n".join(lines), None


def cmd_selftest(opts: selftest.SelftestOptions):
    results = selftest.run_selftest(opts)
    table = selftest.format_table(results)
    failed = [r for r in results if not r.ok]
    if failed:
        return EXIT_MISMATCH, table, f"{failed[0].name}: first counterexample {failed[0].first_counterexample}"
    return EXIT_OK, table, None


# argument handling


def _add_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--semigroup", help='generators, e.g. "4,6,13"')
    group.add_argument("--char", "--characteristic", dest="characteristic", help='Puiseux characteristic, e.g. "4;6,7"')
    group.add_argument("--pairs", help='Enriques pairs, e.g. "2,3;2,3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unibranch", description="Jumping numbers of plane curve branches.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jump", help="jumping numbers below 1")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--contributors", action="store_true", help="append contributing vertices")
    p.add_argument("--verify", action="store_true", help="cross-check against the oracle first")

    p = sub.add_parser("convert", help="convert between encodings")
    _add_input(p)
    p.add_argument("--to", required=True, choices=sorted(TARGETS))

    p = sub.add_parser("tree", help="Enriques diagram of the resolution")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("selftest", help="run the invariant grid")
    defaults = selftest.SelftestOptions()
    p.add_argument("--max-g", type=int, default=defaults.max_g, help="largest g of random samples")
    p.add_argument("--exhaustive-g", type=int, default=defaults.exhaustive_g, help="largest g of the exhaustive grid")
    p.add_argument("--max-p", type=int, default=defaults.max_p, help="largest p_j of the exhaustive grid")
    p.add_argument("--max-q", type=int, default=defaults.max_q, help="largest q_j of grid and samples")
    p.add_argument("--sample-max-p", type=int, default=defaults.sample_max_p)
    p.add_argument("--samples", type=int, default=defaults.samples)
    p.add_argument("--rset-max-q", type=int, default=defaults.rset_max_q)
    p.add_argument("--roundtrips", type=int, default=defaults.roundtrips)
    p.add_argument("--seed", type=int, default=defaults.seed)
    return parser


def run(argv=None) -> tuple[int, str | None, str | None]:
    """Execute a command and return ``(status, stdout text, stderr text)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "selftest":
            opts = selftest.SelftestOptions(
                max_g=args.max_g,
                exhaustive_g=args.exhaustive_g,
                max_p=args.max_p,
                max_q=args.max_q,
                sample_max_p=args.sample_max_p,
                samples=args.samples,
                rset_max_q=args.rset_max_q,
                roundtrips=args.roundtrips,
                seed=args.seed,
            )
            return cmd_selftest(opts)
        spec = _input_spec(args)
        if args.command == "jump":
            return cmd_jump(spec, args.format, args.contributors, args.verify)
        if args.command == "convert":
            return cmd_convert(spec, args.to)
        return cmd_tree(spec, args.format)
    except ValidationError as exc:
        return EXIT_INVALID, None, f"error: {exc}"


def main(argv=None) -> int:
    status, out, err = run(argv)
    # output is assembled completely before anything is written
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
