"""Command line entry point: gen, code, signature, bench, compress, decompress.

Exit status is 0 on success, 1 on usage errors, 2 on domain errors (bad
weights, Kraft violations, malformed containers) and 3 when ``bench --check``
finds a bound violation.
"""

from __future__ import annotations

import argparse
import os
import sys

from opfc import bench, codec
from opfc.baselines import huffman_lengths, van_leeuwen_lengths
from opfc.gdm import gdm_lengths
from opfc.instances import gen_alternation, gen_random, read_weights, write_weights
from opfc.model import code_cost
from opfc.signature import signature

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_BOUND = 3

CODERS = {"gdm": gdm_lengths, "huffman": huffman_lengths, "vanleeuwen": van_leeuwen_lengths}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _seed(args) -> int:
    env = os.environ.get("OPFC_SEED")
    return int(env) if env else args.seed


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opfc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("gen", help="write a generated weights file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, help="target alternation (default: uniform random)")
    p.add_argument("--max", type=int, default=1 << 20, help="largest random weight")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("code", help="print code lengths for a weights file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--algo", choices=sorted(CODERS), default="gdm")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("signature", help="print the signature and alternation")
    p.add_argument("--in", dest="inp", required=True)

    p = sub.add_parser("bench", help="run the (n, alpha) matrix")
    p.add_argument("--ns", type=_int_list, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.add_argument("--check", action="store_true")
    p.add_argument("--c", type=float, default=bench.DEFAULT_C)
    p.add_argument("--workers", type=int, default=1)

    for name in ("compress", "decompress"):
        p = sub.add_parser(name, help=f"{name} a file")
        p.add_argument("inp", metavar="in")
        p.add_argument("out")
    return parser


def _emit(lines: list[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "gen":
        if args.alpha is None:
            w = gen_random(args.n, args.max, _seed(args))
        else:
            w = gen_alternation(args.n, args.alpha, _seed(args))
        write_weights(args.out, w)
    elif args.command == "code":
        w = read_weights(args.inp)
        a = CODERS[args.algo](w)
        lines = [f"{i} {length}" for i, length in enumerate(a.lengths, start=1)]
        lines.append(f"# cost={code_cost(w, a)}")
        if args.stats:
            s = a.stats
            lines.append(f"# q={s.ds_queries} loops={s.loop_iterations}")
            lines.append(f"# comparisons={s.comparisons} k={s.distinct_lengths}")
        _emit(lines, args.out)
    elif args.command == "signature":
        sig = signature(read_weights(args.inp))
        _emit([sig.chars, f"alpha={sig.alternation}"], None)
    elif args.command == "bench":
        records = bench.run_matrix(args.ns, args.alphas, args.reps, _seed(args),
                                   workers=args.workers)
        if args.csv:
            bench.export_csv(records, args.csv)
        gdm = [r for r in records if r.algo == "gdm"]
        print(f"records={len(records)} "
              f"c_queries={bench.fit_constant(gdm, 'queries'):.3f} "
              f"c_comparisons={bench.fit_constant(gdm, 'comparisons'):.3f}")
        if args.check:
            bad = bench.check_query_bound(gdm, args.c) + bench.check_comparison_bound(gdm, args.c)
            for r in bad:
                print(f"violation: {r}", file=sys.stderr)
            if bad:
                return EXIT_BOUND
    elif args.command == "compress":
        with open(args.inp, "rb") as fh:
            data = fh.read()
        with open(args.out, "wb") as fh:
            fh.write(codec.encode(data))
    elif args.command == "decompress":
        with open(args.inp, "rb") as fh:
            blob = fh.read()
        with open(args.out, "wb") as fh:
            fh.write(codec.decode(blob))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_help())
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    try:
        return _run(args)
    except (ValueError, OSError) as exc:
        print(f"opfc {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
