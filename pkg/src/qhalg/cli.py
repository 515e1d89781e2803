"""Command line front end: ``qhalg <command> <algebra-file> [options]``.

Exit status is 0 whenever the computation ran, whatever the verdict; 2 for
invalid input (file syntax, bad permutations, bad flags); 1 when a command's
mathematical precondition fails (e.g. ``connect`` between orders that are not
quasi-hereditary).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any

from .bqa import AlgebraError
from .exactla import PrimeField
from .explorer import EnumerationError, connect, enumerate_qh, twist_graph, verify_connectedness
from .fileformat import AlgebraFileError, load_algebra
from .qh import PermutationError, SigmaOrder, costandard_module, is_quasi_hereditary, standard_module
from .twist import NotQuasiHereditaryError, biquiver

__all__ = ["RunReport", "main", "build_parser", "canonical_json"]

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


@dataclass
class RunReport:
    command: list[str]
    algebra: dict
    result: Any
    timing: float

    def to_dict(self) -> dict:
        return {"command": self.command, "algebra": self.algebra, "result": self.result, "timing": self.timing}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def canonical_json(data: dict) -> str:
    """Key-sorted JSON without the timing entry, for golden comparisons."""
    data = {k: v for k, v in data.items() if k != "timing"}
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- argument handling ------------------------------------------------------------------


def _parse_word(text: str) -> tuple[int, ...]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) == 1 and len(parts[0]) > 1 and parts[0].isdigit():
        parts = list(parts[0])  # "121" shorthand for 1,2,1
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"invalid word {text!r}") from None


def _sigma(args, n: int, perm_attr: str = "perm", word_attr: str = "word", required: bool = True) -> SigmaOrder | None:
    perm_text = getattr(args, perm_attr, None)
    word_text = getattr(args, word_attr, None)
    from_perm = from_word = None
    if perm_text is not None:
        from_perm = SigmaOrder.parse(perm_text)
        if from_perm.n != n:
            raise InputError(f"--{perm_attr} has {from_perm.n} entries but the algebra has {n} vertices")
    if word_text is not None:
        word = _parse_word(word_text)
        try:
            from_word = SigmaOrder.from_word(word, n)
        except PermutationError as exc:
            raise InputError(f"--{word_attr.replace('_', '-')}: {exc}") from None
    if from_perm is not None and from_word is not None and from_perm != from_word:
        raise InputError(f"--{perm_attr} {from_perm} and --{word_attr.replace('_', '-')} {from_word} disagree")
    sigma = from_perm or from_word
    if sigma is None and required:
        raise InputError(f"one of --{perm_attr} or --{word_attr.replace('_', '-')} is required")
    return sigma


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhalg",
        description="Quasi-hereditary structures of bound quiver algebras.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("algebra", help="algebra file, or @paper for the bundled example")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--prime", type=int, help="compute over GF(PRIME) instead of the declared field")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def with_order(p):
        p.add_argument("--perm", help="permutation in one-line notation, e.g. 2,1,3,4")
        p.add_argument("--word", help="product σ_{i_l}...σ_{i_1} as 'i_l,...,i_1' (rightmost acts first)")

    p = sub.add_parser("check", parents=[common], help="decide quasi-heredity for one order")
    with_order(p)
    p = sub.add_parser("standard", parents=[common], help="standard and costandard dimension vectors")
    with_order(p)
    p = sub.add_parser("biquiver", parents=[common], help="neighbor Hom-Ext biquiver")
    with_order(p)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = sub.add_parser("enumerate", parents=[common], help="all quasi-hereditary orders")
    p.add_argument("--strategy", choices=("brute", "bfs"), default="brute")
    p = sub.add_parser("twist-graph", parents=[common], help="graph of quasi-hereditary orders under twists")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = sub.add_parser("connect", parents=[common], help="certified path between two orders")
    p.add_argument("--from", dest="src", help="start order, one-line notation")
    p.add_argument("--from-word", dest="src_word", help="start order as a word")
    p.add_argument("--to", dest="dst", help="end order, one-line notation")
    p.add_argument("--to-word", dest="dst_word", help="end order as a word")
    sub.add_parser("verify", parents=[common], help="connect every ordered pair of quasi-hereditary orders")
    return parser


# -- commands ------------------------------------------------------------------------------


def _perm(s: SigmaOrder) -> str:
    return ",".join(map(str, s.perm))


def _dims(d) -> str:
    return "(" + ",".join(map(str, d)) + ")"


def _cmd_check(alg, args):
    sigma = _sigma(args, alg.n)
    report = is_quasi_hereditary(alg, sigma)
    data = report.to_dict()
    lines = [f"sigma = {_perm(sigma)}: {'quasi-hereditary' if report.verdict else 'not quasi-hereditary'}"]
    for i, d in enumerate(report.standard_dims, start=1):
        lines.append(f"  Delta({i}) dims {_dims(d)}")
    if report.failure:
        lines.append(f"  failure: {json.dumps(data['failure'], sort_keys=True)}")
    return data, "\n".join(lines)


def _cmd_standard(alg, args):
    sigma = _sigma(args, alg.n)
    std = {str(i): list(standard_module(alg, sigma, i).dims) for i in range(1, alg.n + 1)}
    costd = {str(i): list(costandard_module(alg, sigma, i).dims) for i in range(1, alg.n + 1)}
    data = {"perm": list(sigma.perm), "standard": std, "costandard": costd}
    lines = [f"sigma = {_perm(sigma)}"]
    for i in range(1, alg.n + 1):
        lines.append(f"  Delta({i}) {_dims(std[str(i)])}   Nabla({i}) {_dims(costd[str(i)])}")
    return data, "\n".join(lines)


def _cmd_biquiver(alg, args):
    bq = biquiver(alg, _sigma(args, alg.n))
    if args.dot:
        return bq.to_dict(), bq.to_dot().rstrip("\n"), True
    lines = [f"sigma = {_perm(bq.sigma)}  order {' < '.join(map(str, bq.order))}"]
    for i in bq.order:
        lines.append(f"  Delta({i}) {_dims(bq.standard_dims[i])}")
    lines.append("  solid (Ext^1): " + (", ".join(f"{x}->{y}" for x, y in bq.solid) or "none"))
    lines.append("  dotted (Hom):  " + (", ".join(f"{x}->{y}" for x, y in bq.dotted) or "none"))
    for w in bq.warnings:
        lines.append(f"  warning: {w}")
    return bq.to_dict(), "\n".join(lines)


def _cmd_enumerate(alg, args):
    found = enumerate_qh(alg, args.strategy)
    data = {
        "strategy": args.strategy,
        "count": len(found),
        "permutations": [list(s.perm) for s in found],
    }
    lines = [f"{len(found)} quasi-hereditary orders ({args.strategy})"]
    lines += [f"  {_perm(s)}" for s in found]
    return data, "\n".join(lines)


def _cmd_twist_graph(alg, args):
    g = twist_graph(alg)
    if args.dot:
        return g.to_dict(), g.to_dot().rstrip("\n"), True
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges, connected: {str(g.is_connected()).lower()}"]
    lines += [f"  {_perm(s)} -- {_perm(t)}  [p={p}]" for s, t, p in g.edges]
    return g.to_dict(), "\n".join(lines)


def _cmd_connect(alg, args):
    src = _sigma(args, alg.n, "src", "src_word", required=False)
    dst = _sigma(args, alg.n, "dst", "dst_word", required=False)
    if src is None or dst is None:
        raise InputError("connect needs --from (or --from-word) and --to (or --to-word)")
    path = connect(alg, src, dst)
    lines = [f"{_perm(src)} -> {_perm(dst)}: {len(path.word)} steps via {path.method}"]
    lines.append("  word (application order): " + (",".join(map(str, path.word)) or "empty"))
    lines.append("  path: " + " -> ".join(_perm(s) for s in path.intermediates))
    lines.append(f"  certified: {str(path.certified).lower()}")
    return path.to_dict(), "\n".join(lines)


def _cmd_verify(alg, args):
    rep = verify_connectedness(alg)
    d = rep.to_dict()
    lines = [
        f"{rep.qh_count} quasi-hereditary orders, {rep.pairs} ordered pairs",
        f"  corollary paths: {rep.corollary}",
        f"  BFS fallbacks:   {rep.bfs_fallbacks}",
        f"  failures:        {len(rep.failures)}",
        f"  twist graph connected: {str(rep.graph_connected).lower()}",
    ]
    return d, "\n".join(lines)


COMMANDS = {
    "check": _cmd_check,
    "standard": _cmd_standard,
    "biquiver": _cmd_biquiver,
    "enumerate": _cmd_enumerate,
    "twist-graph": _cmd_twist_graph,
    "connect": _cmd_connect,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        spec = load_algebra(args.algebra)
        over = PrimeField(args.prime) if args.prime is not None else None
        alg = spec.build(over)
        out = COMMANDS[args.command](alg, args)
    except (AlgebraFileError, AlgebraError, PermutationError, InputError, EnumerationError, ValueError) as exc:
        if isinstance(exc, NotQuasiHereditaryError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    data, text = out[0], out[1]
    raw = len(out) > 2 and out[2]
    elapsed = time.perf_counter() - start
    if raw:
        print(text)
    elif args.json:
        report = RunReport(["qhalg"] + argv, alg.summary(), data, round(elapsed, 6))
        print(report.to_json())
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
