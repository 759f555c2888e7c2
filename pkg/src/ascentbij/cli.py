"""Command line front end.

Examples::

    ascentbij enumerate ascent --length 4 --avoid 210
    ascentbij map ascent-to-partition 0012303222353 --trace
    ascentbij growth forward '{"shape": [4,3,2,2], "ones": [[1,1],[2,2],[4,2],[4,4]]}'
    ascentbij verify --max-n 8
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import bijection as bij
from .ascent import enumerate_ascent_sequences
from .errors import InvalidObjectError
from .filling import FerrersShape, render_filling, triangular_to_filling
from .growth import backward_diagram, classify_boundary, forward_diagram, render_growth
from .oracle import format_reports, verify_conjecture
from .serialize import (
    format_int_sequence,
    format_partition_sequence,
    parse_filling,
    parse_int_sequence,
    parse_partition_sequence,
    parse_set_partition,
    parse_shape,
)
from .setpartition import enumerate_set_partitions, max_crossing, max_nesting

MAPS = ["ascent-to-partition", "partition-to-ascent", "phi", "phi-inverse", "psi", "psi-inverse"]


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, data) -> None:
        if self.as_json:
            self.stream.write(json.dumps(data, ensure_ascii=False) + "\n")
        else:
            self.stream.write(text + "\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _read_literal(args) -> str:
    if args.file:
        return Path(args.file).read_text()
    if args.literal is None:
        raise InvalidObjectError("no input object given (positional literal or --file)")
    return args.literal


def _avoid_pattern(text: str | None):
    return None if text is None else parse_int_sequence(text)


def _ascent_stream(length: int, avoid, primitive: bool):
    return enumerate_ascent_sequences(length, avoid=avoid, primitive=primitive)


def _partition_stream(size: int, nonnesting: int | None, noncrossing: int | None):
    for p in enumerate_set_partitions(size):
        if nonnesting is not None and max_nesting(p) >= nonnesting:
            continue
        if noncrossing is not None and max_crossing(p) >= noncrossing:
            continue
        yield p


def cmd_enumerate(args, out: Output) -> None:
    if args.kind == "ascent":
        for x in _ascent_stream(args.length, _avoid_pattern(args.avoid), args.primitive):
            out.emit(format_int_sequence(x), list(x))
    else:
        for p in _partition_stream(args.size, args.nonnesting, args.noncrossing):
            out.emit(str(p), p.to_json())


def _count_one(job: tuple) -> int:
    kind, n, avoid, primitive, nonnesting, noncrossing = job
    if kind == "ascent":
        return sum(1 for _ in _ascent_stream(n, avoid, primitive))
    return sum(1 for _ in _partition_stream(n, nonnesting, noncrossing))


def cmd_count(args, out: Output) -> None:
    avoid = _avoid_pattern(args.avoid)
    if args.max_n is not None:
        sizes = list(range(1, args.max_n + 1))
    else:
        size = args.length if args.kind == "ascent" else args.size
        if size is None:
            raise InvalidObjectError("give --length/--size or --max-n")
        sizes = [size]
    jobs = [(args.kind, n, avoid, args.primitive, args.nonnesting, args.noncrossing) for n in sizes]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            counts = list(pool.map(_count_one, jobs))
    else:
        counts = [_count_one(s) for s in jobs]
    for n, c in zip(sizes, counts):
        text = f"{n}  {c}" if args.max_n is not None else str(c)
        out.emit(text, {"n": n, "count": c})


def _print_trace(trace: bij.BijectionTrace, forward: bool, out: Output) -> None:
    if out.as_json:
        out.emit("", trace.to_json())
        return
    lines: list[tuple[str, str]] = []
    if trace.ascent is not None:
        lines.append(("ascent", format_int_sequence(trace.ascent)))
    if trace.rle is not None:
        lines.append(("rle", " ".join(f"{v}^{c}" for v, c in trace.rle)))
    if trace.primitive is not None:
        lines.append(("primitive", format_int_sequence(trace.primitive)))
    if trace.a_vector is not None:
        lines.append(("a_vector", format_int_sequence(trace.a_vector.a)))
        diagram, _ = forward_diagram(triangular_to_filling(trace.a_vector))
        lines.append(("growth(a_vector)", "\n" + render_growth(diagram)))
    for name in ("lambda_seq", "mu_seq", "rho_seq"):
        seq = getattr(trace, name)
        if seq is not None:
            lines.append((name, format_partition_sequence(seq)))
    if trace.filling is not None:
        diagram, _ = forward_diagram(trace.filling)
        lines.append(("growth(filling)", "\n" + render_growth(diagram)))
    lines.append(("partition", str(trace.partition)))
    if not forward:
        lines.reverse()
    for name, value in lines:
        out.emit(f"{name}: {value}", None)


def cmd_map(args, out: Output) -> None:
    text = _read_literal(args)
    name = args.name
    if name == "ascent-to-partition":
        x = parse_int_sequence(text)
        if args.trace:
            _print_trace(bij.trace_ascent_to_partition(x), True, out)
            return
        p = bij.ascent_to_partition(x)
        out.emit(str(p), p.to_json())
    elif name == "partition-to-ascent":
        p = parse_set_partition(text)
        if args.trace:
            _print_trace(bij.trace_partition_to_ascent(p), False, out)
            return
        x = bij.partition_to_ascent(p)
        out.emit(format_int_sequence(x), list(x))
    elif name == "phi":
        t = bij.phi(parse_int_sequence(text))
        if args.trace and not out.as_json:
            out.emit(render_filling(triangular_to_filling(t)), None)
        out.emit(format_int_sequence(t.a), list(t.a))
    elif name == "phi-inverse":
        x = bij.phi_inverse(parse_int_sequence(text))
        out.emit(format_int_sequence(x), list(x))
    elif name == "psi":
        x = parse_int_sequence(text)
        if args.trace:
            _print_psi_stages(bij.trace_ascent_to_partition(x), out)
        v = bij.psi(x)
        out.emit(format_partition_sequence(v), [list(p) for p in v])
    else:
        v = parse_partition_sequence(text)
        x = bij.psi_inverse(v)
        out.emit(format_int_sequence(x), list(x))


def _print_psi_stages(trace: bij.BijectionTrace, out: Output) -> None:
    if out.as_json:
        out.emit("", trace.to_json())
        return
    out.emit(f"rle: {' '.join(f'{v}^{c}' for v, c in trace.rle)}", None)
    if trace.primitive is not None:
        out.emit(f"primitive: {format_int_sequence(trace.primitive)}", None)
        out.emit(f"a_vector: {format_int_sequence(trace.a_vector.a)}", None)
        out.emit(f"lambda_seq: {format_partition_sequence(trace.lambda_seq)}", None)
        out.emit(f"mu_seq: {format_partition_sequence(trace.mu_seq)}", None)


def cmd_growth(args, out: Output) -> None:
    text = _read_literal(args)
    if args.direction == "forward":
        f = parse_filling(text)
        diagram, boundary = forward_diagram(f)
        if args.trace:
            out.emit(render_growth(diagram), diagram.to_json())
        out.emit(format_partition_sequence(boundary), [list(p) for p in boundary])
        return
    seq = parse_partition_sequence(text)
    if args.shape:
        shape = parse_shape(args.shape)
    else:
        if len(seq) % 2 == 0:
            raise InvalidObjectError("without --shape the sequence length must be 2n+1 (triangle)")
        shape = FerrersShape.triangle((len(seq) - 1) // 2)
    f = backward_diagram(shape, seq)
    if args.trace:
        diagram, _ = forward_diagram(f)
        out.emit(render_growth(diagram), diagram.to_json())
        if shape == FerrersShape.triangle(shape.height):
            flags = sorted(classify_boundary(seq, shape.height).flags())
            out.emit("classes: " + " ".join(flags), {"classes": flags})
    out.emit(json.dumps(f.to_json()), f.to_json())


def cmd_verify(args, out: Output) -> int:
    reports = verify_conjecture(args.max_n, jobs=args.jobs)
    if out.as_json:
        for r in reports:
            out.emit("", r.to_json())
    else:
        out.emit(format_reports(reports), None)
    return 0 if all(r.success for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ascentbij",
        description="210-avoiding ascent sequences and 3-nonnesting set partitions via growth diagrams.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    def size_flags(p):
        p.add_argument("--length", "-n", type=_positive, help="ascent sequence length")
        p.add_argument("--size", type=_positive, help="ground set size for partitions")
        p.add_argument("--avoid", help="pattern to avoid, e.g. 210")
        p.add_argument("--primitive", action="store_true", help="only primitive sequences")
        p.add_argument("--nonnesting", type=_positive, metavar="K", help="exclude partitions with a K-nesting")
        p.add_argument("--noncrossing", type=_positive, metavar="K", help="exclude partitions with a K-crossing")

    p_enum = sub.add_parser("enumerate", parents=[common], help="list objects one per line")
    p_enum.add_argument("kind", choices=["ascent", "partitions"])
    size_flags(p_enum)

    p_count = sub.add_parser("count", parents=[common], help="count objects")
    p_count.add_argument("kind", choices=["ascent", "partitions"])
    size_flags(p_count)
    p_count.add_argument("--max-n", type=_positive, help="count every size from 1 to this")
    p_count.add_argument("--jobs", type=_positive, default=1)

    p_map = sub.add_parser("map", parents=[common], help="apply one of the maps")
    p_map.add_argument("name", choices=MAPS)
    p_map.add_argument("literal", nargs="?")
    p_map.add_argument("--file", help="read the input object from a JSON file")
    p_map.add_argument("--trace", action="store_true", help="print every intermediate stage")

    p_growth = sub.add_parser("growth", parents=[common], help="run the growth diagram algorithms")
    p_growth.add_argument("direction", choices=["forward", "backward"])
    p_growth.add_argument("literal", nargs="?")
    p_growth.add_argument("--file")
    p_growth.add_argument("--shape", help="bottom-up row lengths for backward, e.g. [4,3,2,2]")
    p_growth.add_argument("--trace", action="store_true", help="render the corner-label grid")

    p_verify = sub.add_parser("verify", parents=[common], help="exhaustive check of the bijection")
    p_verify.add_argument("--max-n", type=_positive, default=8)
    p_verify.add_argument("--jobs", type=_positive, default=1)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json)
    if args.command == "enumerate":
        need = args.length if args.kind == "ascent" else args.size
        if need is None:
            parser.error(f"enumerate {args.kind} needs {'--length' if args.kind == 'ascent' else '--size'}")
    try:
        if args.command == "enumerate":
            cmd_enumerate(args, out)
        elif args.command == "count":
            cmd_count(args, out)
        elif args.command == "map":
            cmd_map(args, out)
        elif args.command == "growth":
            cmd_growth(args, out)
        else:
            return cmd_verify(args, out)
    except (InvalidObjectError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
