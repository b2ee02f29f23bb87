"""Command-line interface: ``dappled <subcommand> ...``.

Exit codes: 0 success, 2 invalid conditions, 3 invalid input file, 4 size
limit, 64 bad command-line usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .core import TileSet, Tiling, is_dappled
from .cyclic import dapple_cyclic, dapple_cyclic_p2, is_cyclically_dappled, is_p2_shape
from .dappler import dapple
from .errors import (
    DappledError,
    InternalError,
    InvalidConditions,
    InvalidInput,
    InvalidShape,
    MismatchedShapes,
    SizeLimit,
)
from .flow import FlowField, simulate, write_csv
from .formats import format_tiling, load_problem, parse_conditions, parse_palette, parse_tiling, parse_wang
from .oracle import draughtboard, enumerate_dappled
from .render import render_tiling_ppm, render_tiling_svg, render_wang_ppm, render_wang_svg
from .rng import GENERATOR, header, stream
from .wang import EdgeColorSet, wang_from_dappled

EXIT_OK = 0
EXIT_CONDITIONS = 2
EXIT_INPUT = 3
EXIT_SIZE = 4
EXIT_USAGE = 64


def generate(m: int, n: int, tiles: TileSet | int = 2, mode: str = "random", seed: int = 0) -> Tiling:
    """Starting tiling: i.i.d. uniform cells, or a draughtboard."""
    if isinstance(tiles, int):
        tiles = TileSet.of_size(tiles)
    if m < 1 or n < 1:
        raise InvalidShape(f"grid must be at least 1x1, got {m}x{n}")
    if mode == "draughtboard":
        return draughtboard(m, n, tiles, seed)
    if mode != "random":
        raise InvalidInput(f"unknown mode {mode!r}")
    rng = stream(seed, "generate", m, n, len(tiles))
    return Tiling(m, n, tuple(rng.randrange(len(tiles)) for _ in range(m * n)), tiles)


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 free for invalid conditions
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tiles_arg(text: str) -> TileSet:
    if text.isdigit():
        return TileSet.of_size(int(text))
    return TileSet(tuple(s for s in text.split(",") if s))


def _repeat_arg(text: str) -> tuple[int, int]:
    try:
        k, l = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected KxL, got {text!r}") from None
    if k < 1 or l < 1:
        raise argparse.ArgumentTypeError("repeat factors must be positive")
    return k, l


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit_bytes(data: bytes, path: str) -> None:
    Path(path).write_bytes(data)


def cmd_generate(args) -> int:
    f = generate(args.m, args.n, args.tiles, args.mode, args.seed)
    _emit(format_tiling(f, args.seed), args.out)
    return EXIT_OK


def cmd_dapple(args) -> int:
    f, L = load_problem(_read(args.tiling), _read(args.conditions))
    cyclic = args.cyclic or L.cyclic
    trace = None
    if cyclic:
        L = L.with_cyclic(True)
        g = dapple_cyclic_p2(f, L) if is_p2_shape(L) else dapple_cyclic(f, L)
        ok = is_cyclically_dappled(g, L)
    else:
        g, trace = dapple(f, L, check=args.check)
        ok = is_dappled(g, L)[0]
    if not ok:
        # the algorithms guarantee this; reaching it is a bug
        raise RuntimeError("output failed validation")
    _emit(format_tiling(g), args.out)
    if args.trace:
        entries = [] if trace is None else [e.to_dict() for e in trace]
        _emit(json.dumps({"generator": GENERATOR, "entries": entries}, indent=1) + "\n", args.trace)
    if args.repeat:
        rep = g.repeat(*args.repeat)
        if cyclic and not is_dappled(rep, L.with_cyclic(False))[0]:
            raise RuntimeError("repeated output failed validation")
        text = format_tiling(rep)
        if args.repeat_out:
            _emit(text, args.repeat_out)
        else:
            sys.stdout.write(text)
    changed = sum(a != b for a, b in zip(f.cells, g.cells))
    print(f"dapple: {g.m}x{g.n} cyclic={str(cyclic).lower()} changed={changed}", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    L, ts = parse_conditions(_read(args.conditions), args.tiles)
    if args.tiles is not None and ts != args.tiles:
        raise InvalidConditions(f"condition file names tiles {ts.symbols}, --tiles gave {args.tiles.symbols}")
    cyclic = args.cyclic or L.cyclic
    res = enumerate_dappled(
        args.m, args.n, ts, L, cyclic=cyclic, keep=bool(args.list),
        limit=args.limit, allow_large=args.allow_large,
    )
    buf = io.StringIO()
    buf.write(f"# {header(None)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "tiles", "cyclic", "count", "N", "N_prime"])
    w.writerow([args.m, args.n, len(ts), str(cyclic).lower(), res.count, res.N, res.N_prime])
    _emit(buf.getvalue(), args.out)
    if args.list:
        parts = [format_tiling(t) for t in res.tilings]
        if res.truncated:
            parts.append(f"# truncated after {len(res.tilings)} of {res.count}\n")
        _emit("\n".join(parts), args.list)
    return EXIT_OK


def cmd_wang(args) -> int:
    f = parse_tiling(_read(args.tiling))
    if args.conditions:
        _, L = load_problem(_read(args.tiling), _read(args.conditions))
        check = is_cyclically_dappled(f, L) if L.cyclic else is_dappled(f, L)[0]
        if not check:
            raise InvalidInput(f"{args.tiling} is not dappled under the given conditions")
    tau = wang_from_dappled(f, EdgeColorSet(args.colors), args.seed)
    _emit(tau.to_json(args.seed), args.out)
    if args.svg:
        _emit(render_wang_svg(tau, comment=header(args.seed)), args.svg)
    return EXIT_OK


def cmd_flow(args) -> int:
    f = parse_tiling(_read(args.tiling))
    field = FlowField(f, cyclic=args.cyclic)
    if args.particles < 0 or args.steps < 0:
        raise InvalidInput("particle and step counts must be non-negative")
    history = simulate(field, args.particles, args.steps, args.dt, args.seed)
    buf = io.StringIO()
    write_csv(history, buf, args.seed)
    _emit(buf.getvalue(), args.out)
    if args.plot:
        from .plots import plot_trajectories

        plot_trajectories(field, history, args.plot,
                          title=f"{args.particles} particles, {args.steps} steps, seed {args.seed}")
    return EXIT_OK


def cmd_render(args) -> int:
    ppm = args.out.lower().endswith(".ppm")
    if args.wang:
        tau = parse_wang(_read(args.wang))
        if ppm:
            _emit_bytes(render_wang_ppm(tau), args.out)
        else:
            _emit(render_wang_svg(tau, comment=header(None)), args.out)
        return EXIT_OK
    if not args.tiling:
        raise InvalidInput("render needs --tiling or --wang")
    f = parse_tiling(_read(args.tiling))
    palette = parse_palette(_read(args.palette)) if args.palette else None
    if ppm:
        _emit_bytes(render_tiling_ppm(f, palette, scale=args.scale), args.out)
    else:
        _emit(render_tiling_svg(f, palette, comment=header(None)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dappled", description="Repair tilings so no tile forms over-long runs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({GENERATOR})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="random or draughtboard starting tiling")
    g.add_argument("--m", type=int, required=True, help="columns")
    g.add_argument("--n", type=int, required=True, help="rows")
    g.add_argument("--tiles", type=_tiles_arg, default=TileSet.of_size(2),
                   help="tile count or comma-separated symbols (default 2)")
    g.add_argument("--mode", choices=("random", "draughtboard"), default="random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("dapple", help="repair a tiling")
    d.add_argument("--tiling", required=True)
    d.add_argument("--conditions", required=True)
    d.add_argument("--out")
    d.add_argument("--trace", help="write the repair trace as JSON")
    d.add_argument("--cyclic", action="store_true", help="treat conditions cyclically")
    d.add_argument("--repeat", type=_repeat_arg, metavar="KxL")
    d.add_argument("--repeat-out")
    d.add_argument("--check", action="store_true", help="assert no regression after each repair")
    d.set_defaults(func=cmd_dapple)

    c = sub.add_parser("count", help="count dappled tilings exhaustively")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--conditions", required=True)
    c.add_argument("--tiles", type=_tiles_arg)
    c.add_argument("--cyclic", action="store_true")
    c.add_argument("--list", help="also write every dappled tiling to this file")
    c.add_argument("--limit", type=int, help="cap on listed tilings")
    c.add_argument("--allow-large", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count)

    w = sub.add_parser("wang", help="brick Wang tiling from a two-tile dappled tiling")
    w.add_argument("--tiling", required=True)
    w.add_argument("--colors", type=int, default=3)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--conditions", help="reject input that is not dappled under these")
    w.add_argument("--out")
    w.add_argument("--svg")
    w.set_defaults(func=cmd_wang)

    fl = sub.add_parser("flow", help="simulate particles on a flow-tile field")
    fl.add_argument("--tiling", required=True)
    fl.add_argument("--particles", type=int, default=100)
    fl.add_argument("--steps", type=int, default=1000)
    fl.add_argument("--dt", type=float, default=0.25)
    fl.add_argument("--seed", type=int, default=0)
    fl.add_argument("--cyclic", action="store_true", help="wrap at the edges instead of bouncing")
    fl.add_argument("--out")
    fl.add_argument("--plot", help="PNG file with the trajectories")
    fl.set_defaults(func=cmd_flow)

    r = sub.add_parser("render", help="SVG or PPM image of a tiling or Wang tiling")
    r.add_argument("--tiling")
    r.add_argument("--palette")
    r.add_argument("--wang")
    r.add_argument("--scale", type=int, default=8, help="pixels per cell for PPM tilings")
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)
    return p


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, (InvalidConditions, MismatchedShapes, InvalidShape)):
        return EXIT_CONDITIONS
    if isinstance(exc, SizeLimit):
        return EXIT_SIZE
    return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError:
        raise
    except DappledError as exc:
        print(f"dappled {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
