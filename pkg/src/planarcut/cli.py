"""Command-line entry point.

Exit codes: 0 success (or a positive answer), 1 negative answer, 2 usage or
precondition error.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Sequence

from .bench import bench, format_csv
from .connectivity import menger_paths
from .cuts import ContractError, verify_cut
from .embedding import EmbeddingError, NotPlanarError, NotTwoConnectedError, build_dcel, embed, large_faces, validate_embedding
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import GraphError
from .io import GraphFormatError, format_graph, read_graph
from .mindisccut import PreconditionError, decide, min_disc_cut
from .oracle import CHECKS, OracleBoundError, run_checks

OK, NO, ERROR = 0, 1, 2

INPUT_ERRORS = (
    GraphFormatError,
    GraphError,
    NotPlanarError,
    EmbeddingError,
    NotTwoConnectedError,
    PreconditionError,
    OracleBoundError,
    OSError,
)


def parse_size(text: str) -> int:
    """``4096``, ``4k``, ``1M`` or ``2^12``."""
    t = text.strip()
    m = re.fullmatch(r"(\d+)\^(\d+)", t)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"(\d+)([kKmM]?)", t)
    if not m:
        raise argparse.ArgumentTypeError(f"bad size {text!r}")
    mult = {"": 1, "k": 1000, "m": 1000**2}[m.group(2).lower()]
    return int(m.group(1)) * mult


def _sizes(text: str) -> list[int]:
    return [parse_size(s) for s in text.split(",") if s.strip()]


def _vertices(text: str) -> list[int]:
    try:
        return [int(v) for v in re.split(r"[,\s]+", text.strip()) if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None


def _load(path: str, *, validate: bool = False):
    G, rot = read_graph(path)
    if rot is None:
        rot = embed(G)
    elif validate:
        reason = validate_embedding(G, rot)
        if reason is not None:
            raise EmbeddingError(f"rot block rejected: {reason}")
    return G, rot


def _fmt(vs) -> str:
    return " ".join(map(str, sorted(vs)))


def cmd_embed(args) -> int:
    G, _ = read_graph(args.file)
    text = format_graph(G, embed(G))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_faces(args) -> int:
    G, rot = _load(args.file, validate=args.validate)
    if args.all:
        walks = [f.boundary for f in build_dcel(G, rot).faces()]
    else:
        walks = list(large_faces(G, rot))
    for W in walks:
        print(f"face {len(W)}: " + " ".join(map(str, W)))
    return OK


def cmd_decide(args) -> int:
    G, rot = _load(args.file, validate=args.validate)
    yes = decide(G, rot)
    print("yes" if yes else "no")
    return OK if yes else NO


def cmd_cut(args) -> int:
    G, rot = _load(args.file, validate=args.validate)
    try:
        cut = min_disc_cut(G, rot, validate=args.validate)
    except ContractError as exc:
        print(f"CONTRACT-VIOLATION {exc}")
        return ERROR
    if cut is None:
        print("NULL near-triangulation")
        return NO
    if args.verify:
        report = verify_cut(G, cut)
        if not (report.minimal and report.disconnected):
            print(f"CONTRACT-VIOLATION minimal={report.minimal} disconnected={report.disconnected}")
            return ERROR
    print("CUT " + _fmt(cut))
    if args.verify:
        print("VERIFIED minimal disconnected")
    return OK


def cmd_verify(args) -> int:
    G, _ = read_graph(args.file)
    report = verify_cut(G, args.cut)
    yn = {True: "yes", False: "no"}
    print(f"CUT {_fmt(report.cut)}")
    print(f"cut {yn[report.is_cut]}")
    print(f"minimal {yn[report.minimal]}")
    print(f"disconnected {yn[report.disconnected]}")
    for comp in report.side_components:
        print("SIDE " + _fmt(comp))
    for comp in report.cut_components:
        print("PART " + _fmt(comp))
    return OK if report.minimal else NO


def cmd_menger(args) -> int:
    G, _ = read_graph(args.file)
    bundle = menger_paths(G, args.s, args.t, args.cap)
    print(f"KAPPA {bundle.kappa}")
    for p in bundle:
        print("PATH " + " ".join(map(str, p)))
    return OK


def cmd_oracle(args) -> int:
    G, rot = _load(args.file)
    report = run_checks(G, rot, args.check, bound=args.bound)
    print(report.text())
    return OK if report.ok else NO


def cmd_gen(args) -> int:
    if args.family == "named" and not args.name:
        raise GraphError("--family named needs --name")
    spec = GeneratorSpec(
        args.family,
        n=args.n or 0,
        faces=args.faces,
        seed=args.seed,
        name=args.name,
        allow_touching=args.allow_touching,
        deep=args.deep_carve,
    )
    G, rot = generate(spec)
    desc = args.name if args.family == "named" else f"n={spec.n} faces={spec.faces} seed={spec.seed}"
    text = format_graph(G, rot, comment=f"family={spec.family} {desc}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_bench(args) -> int:
    rows = bench(args.sizes, family=args.family, faces=args.faces, reps=args.reps, seed=args.seed)
    sys.stdout.write(format_csv(rows))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcut", description="Minimal disconnected cuts of 4-connected planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("embed", help="compute a planar embedding and write the graph with rot lines")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="output file (default stdout)")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("faces", help="list the large faces (length >= 4), one 'face <len>: ...' line each")
    s.add_argument("file")
    s.add_argument("--all", action="store_true", help="list every face, not only the large ones")
    s.add_argument("--validate", action="store_true", help="check the file's rot block")
    s.set_defaults(func=cmd_faces)

    s = sub.add_parser("decide", help="print yes if a minimal disconnected cut exists, else no")
    s.add_argument("file")
    s.add_argument("--validate", action="store_true", help="check the file's rot block")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("cut", help="find a minimal disconnected cut")
    s.add_argument("file")
    s.add_argument("--validate", action="store_true", help="check 4-connectivity and the embedding first")
    s.add_argument("--verify", action="store_true", help="check the answer is minimal and disconnected")
    s.set_defaults(func=cmd_cut)

    s = sub.add_parser("verify", help="report on a vertex set as a cut")
    s.add_argument("file")
    s.add_argument("cut", type=_vertices, help="vertices, comma or space separated")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("menger", help="internally disjoint s-t paths")
    s.add_argument("file")
    s.add_argument("s", type=int)
    s.add_argument("t", type=int)
    s.add_argument("--cap", type=int, default=None, help="stop after this many paths")
    s.set_defaults(func=cmd_menger)

    s = sub.add_parser("oracle", help="brute-force checks on a small graph")
    s.add_argument("file")
    s.add_argument("--check", choices=CHECKS + ("all",), default="all")
    s.add_argument("--bound", type=int, default=14, help="largest vertex count to enumerate")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--family", choices=FAMILIES, required=True)
    size = s.add_mutually_exclusive_group()
    size.add_argument("--n", type=parse_size, help="vertex count")
    size.add_argument("--name", help="named instance, for --family named")
    s.add_argument("--faces", type=int, default=0, help="large faces to carve")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--allow-touching", action="store_true", help="let carved faces share vertices")
    s.add_argument("--deep-carve", action="store_true", help="grow carved faces past length 4")
    s.add_argument("-o", "--output", help="output file (default stdout)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time the cut pipeline on generated instances (CSV n,ms,ratio)")
    s.add_argument("--family", choices=FAMILIES[1:], default="carved")
    s.add_argument("--sizes", type=_sizes, default=[1000, 2000, 4000], help="comma-separated, e.g. 1k,2k,4k or 2^10")
    s.add_argument("--faces", type=int, default=2)
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS + (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
