"""Command-line front end.

    netfreq ingest   [FILE] [--emit-deltas]
    netfreq query    FILE PATTERN...
    netfreq all-nf   [FILE]
    netfreq extract  [FILE]
    netfreq stats    [FILE]
    netfreq dot      [FILE]
    netfreq verify   [--alphabet ab] [--max-len 10] [--seed 0]

FILE defaults to stdin (also spelled ``-``). The default ``prepend``
direction reads the whole input and feeds it right to left, so the engine
holds exactly the input followed by the sentinel. ``append`` feeds symbols
in arrival order; the engine then holds the reversed input, and patterns and
printed strings are reversed at the boundary.

Offsets in ``--no-materialize`` output: with ``prepend`` ``off`` is the
end-offset of the string's first symbol (1 = the sentinel, n = the first
input symbol), with ``append`` it is the 0-based start index in the input.

Exit codes: 0 ok, 1 usage, 2 undecodable input, 3 invariant or
verification failure. Setting NETFREQ_CHECKED=1 turns on the internal
invariant assertions while ingesting.
"""

from __future__ import annotations

import argparse
import codecs
import json
import os
import sys
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import BinaryIO, TextIO

from . import verify
from .engine import NetFrequencyEngine
from .errors import InvariantError
from .text_store import BYTES, CODEPOINTS, SENTINEL, encode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

CHECKED_ENV = "NETFREQ_CHECKED"
CHUNK = 1 << 16


class InputDecodeError(Exception):
    def __init__(self, offset: int, reason: str) -> None:
        super().__init__(f"invalid UTF-8 at byte offset {offset}: {reason}")
        self.offset = offset


@dataclass
class Config:
    direction: str = "prepend"
    input_mode: str = CODEPOINTS
    format: str = "tsv"
    mask_sentinel_pairs: bool = False
    materialize: bool = True
    input: str = "-"


def read_symbols(stream: BinaryIO, mode: str) -> Iterator[int]:
    """Symbols of a binary stream in arrival order, decoded lazily."""
    if mode == BYTES:
        while chunk := stream.read(CHUNK):
            yield from chunk
        return
    decoder = codecs.getincrementaldecoder("utf-8")()
    consumed = 0
    while True:
        chunk = stream.read(CHUNK)
        final = not chunk
        # offsets in a decode error count from the decoder's pending bytes
        base = consumed - len(decoder.getstate()[0])
        try:
            text = decoder.decode(chunk, final)
        except UnicodeDecodeError as exc:
            raise InputDecodeError(base + exc.start, exc.reason) from None
        consumed += len(chunk)
        for ch in text:
            yield ord(ch)
        if final:
            return


def escape(text: str, mode: str = CODEPOINTS) -> str:
    """Backslash and control characters as ``\\xHH`` (all non-ASCII too for bytes)."""
    limit = 0x100 if mode == BYTES else 0xA0
    out = []
    for ch in text:
        c = ord(ch)
        if c < 0x20 or 0x7F <= c < limit or ch == "\\":
            out.append(f"\\x{c:02x}")
        else:
            out.append(ch)
    return "".join(out)


class Session:
    """An engine plus the direction and rendering conventions of one command."""

    def __init__(self, config: Config, checked: bool = False) -> None:
        self.config = config
        self.engine = NetFrequencyEngine(checked=checked)
        self.append = config.direction == "append"

    def feed(self, symbols: Iterable[int], on_delta=None) -> None:
        if not self.append:
            symbols = reversed(list(symbols))
        if on_delta is None:
            self.engine.extend(symbols)
            return
        mask = self.config.mask_sentinel_pairs
        for step, (sym, delta) in enumerate(self.engine.stream(symbols, mask), 1):
            on_delta(step, sym, delta)

    def text_order(self, label: tuple[int, ...]) -> tuple[int, ...]:
        return label[::-1] if self.append else label

    def render(self, label: tuple[int, ...], for_json: bool = False) -> str:
        """A label as printed: input order, "$" for the sentinel (omitted in jsonl)."""
        parts = []
        for c in self.text_order(label):
            if c == SENTINEL:
                if not for_json:
                    parts.append("$")
            else:
                parts.append(chr(c))
        text = "".join(parts)
        return text if for_json else escape(text, self.config.input_mode)

    def offset(self, hi: int, length: int) -> int:
        return hi - length - 1 if self.append else hi

    def pattern(self, text: str) -> tuple[int, ...]:
        symbols = tuple(encode(text, self.config.input_mode))
        return symbols[::-1] if self.append else symbols


def _open_input(path: str) -> BinaryIO:
    if path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def _build(config: Config, out: TextIO, emit_deltas: bool = False) -> Session:
    session = Session(config, checked=os.environ.get(CHECKED_ENV, "") not in ("", "0"))
    on_delta = None
    if emit_deltas:
        def on_delta(step, sym, delta):
            changes = []
            for d in delta:
                label = session.engine.label(d)
                if config.materialize:
                    changes.append({"s": session.render(label, True), "old": d.old, "new": d.new})
                else:
                    changes.append({"off": session.offset(d.node.slen, d.node.depth),
                                    "len": d.node.depth, "old": d.old, "new": d.new})
            changes.sort(key=lambda c: (c.get("s", ""), c.get("off", 0)))
            record = {"step": step, "sym": chr(sym), "changes": changes}
            out.write(json.dumps(record, ensure_ascii=False) + "\n")

    stream = _open_input(config.input)
    try:
        session.feed(read_symbols(stream, config.input_mode), on_delta)
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()
    return session


def _rows(session: Session, extract: bool) -> list[dict]:
    engine, config = session.engine, session.config
    entries = (engine.all_nf_extract if extract else engine.all_nf)(config.mask_sentinel_pairs)
    rows = []
    for e in entries:
        row = {}
        if config.materialize:
            row["s"] = session.render(engine.label(e), config.format == "jsonl")
        row["off"] = session.offset(e.hi, e.length)
        row["len"] = e.length
        row["nf"] = e.phi
        if extract:
            row["prod"] = e.product
        rows.append(row)
    rows.sort(key=lambda r: (r["len"], r.get("s", ""), r["off"]))
    return rows


def _write_rows(rows: list[dict], config: Config, out: TextIO) -> None:
    for row in rows:
        if config.format == "jsonl":
            out.write(json.dumps(row, ensure_ascii=False) + "\n")
            continue
        cols = [row["s"]] if config.materialize else [str(row["off"]), str(row["len"])]
        cols.append(str(row["nf"]))
        if "prod" in row:
            cols.append(str(row["prod"]))
        out.write("\t".join(cols) + "\n")


def cmd_ingest(config: Config, emit_deltas: bool, out: TextIO) -> int:
    session = _build(config, out, emit_deltas)
    if not emit_deltas:
        phis = [e.phi for e in session.engine.all_nf(config.mask_sentinel_pairs)]
        summary = {"n": session.engine.n, "pnf": len(phis), "phi_total": sum(phis)}
        if config.format == "jsonl":
            out.write(json.dumps(summary) + "\n")
        else:
            for key, value in summary.items():
                out.write(f"{key}\t{value}\n")
    return EXIT_OK


def cmd_query(config: Config, patterns: list[str], out: TextIO) -> int:
    session = _build(config, out)
    mask = config.mask_sentinel_pairs
    for text in patterns:
        value = session.engine.single_nf(session.pattern(text), mask)
        if config.format == "jsonl":
            out.write(json.dumps({"s": text, "nf": value}, ensure_ascii=False) + "\n")
        else:
            out.write(f"{escape(text, config.input_mode)}\t{value}\n")
    return EXIT_OK


def cmd_all_nf(config: Config, out: TextIO, extract: bool = False) -> int:
    session = _build(config, out)
    _write_rows(_rows(session, extract), config, out)
    return EXIT_OK


def cmd_stats(config: Config, out: TextIO) -> int:
    stats = _build(config, out).engine.stats().as_dict()
    stats["links"] = stats["hard_links"] + stats["soft_links"]
    if config.format == "jsonl":
        out.write(json.dumps(stats) + "\n")
        return EXIT_OK
    for key, value in stats.items():
        if isinstance(value, bool):
            value = "OK" if value else "FAIL"
        out.write(f"{key}\t{value}\n")
    return EXIT_OK


def cmd_dot(config: Config, out: TextIO) -> int:
    session = _build(config, out)
    out.write(session.engine.tree.to_dot(lambda label: session.render(label)))
    return EXIT_OK


def cmd_verify(alphabet: str, max_len: int, seed: int, out: TextIO, err: TextIO) -> int:
    suites = [
        lambda: verify.exhaustive(alphabet, max_len),
        lambda: verify.randomized(100, min(200, 8 * max_len), [alphabet], seed),
    ]
    for run in suites:
        if max_len <= 0:
            break
        try:
            result = run()
        except verify.Mismatch as exc:
            feed = verify.minimal_counterexample(exc)
            err.write(f"MISMATCH\t{exc.message}\n")
            out.write(f"counterexample\t{escape(''.join(map(chr, feed)))}\n")
            return EXIT_INVARIANT
        out.write(f"ok\t{result.name}\tfeeds={result.feeds}\tsteps={result.steps}"
                  f"\tmax_climb_ratio={result.max_climb_ratio:.3f}\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--direction", choices=("prepend", "append"), default="prepend",
                        help="prepend: engine holds the input; append: feed in arrival order")
    common.add_argument("--bytes", action="store_true", help="treat input as raw bytes, not UTF-8")
    common.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    common.add_argument("--mask-sentinel-pairs", action="store_true",
                        help="ignore net occurrences that end at the sentinel")
    common.add_argument("--no-materialize", action="store_true",
                        help="print offset and length instead of strings")

    parser = _Parser(prog="netfreq", description="Online net-frequency engine.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ingest = sub.add_parser("ingest", parents=[common], help="feed input, optionally streaming deltas")
    ingest.add_argument("input", nargs="?", default="-")
    ingest.add_argument("--emit-deltas", action="store_true",
                        help="one jsonl delta record per consumed symbol")
    query = sub.add_parser("query", parents=[common], help="net frequency of each pattern")
    query.add_argument("input")
    query.add_argument("patterns", nargs="+", metavar="PATTERN")
    for name, text in (("all-nf", "every string with positive net frequency"),
                       ("extract", "like all-nf, plus length * nf"),
                       ("stats", "tree and registry counters"),
                       ("dot", "Graphviz dump of the suffix tree")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", nargs="?", default="-")
    check = sub.add_parser("verify", help="run the oracle-equivalence suites")
    check.add_argument("--alphabet", default="ab")
    check.add_argument("--max-len", type=int, default=10)
    check.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        if not args.alphabet:
            err.write("netfreq: error: --alphabet must not be empty\n")
            return EXIT_USAGE
        return cmd_verify(args.alphabet, args.max_len, args.seed, out, err)

    config = Config(
        direction=args.direction,
        input_mode=BYTES if args.bytes else CODEPOINTS,
        format=args.format,
        mask_sentinel_pairs=args.mask_sentinel_pairs,
        materialize=not args.no_materialize,
        input=args.input,
    )
    try:
        if args.command == "ingest":
            return cmd_ingest(config, args.emit_deltas, out)
        if args.command == "query":
            return cmd_query(config, args.patterns, out)
        if args.command in ("all-nf", "extract"):
            return cmd_all_nf(config, out, extract=args.command == "extract")
        if args.command == "stats":
            return cmd_stats(config, out)
        return cmd_dot(config, out)
    except InputDecodeError as exc:
        err.write(f"netfreq: {exc}\n")
        return EXIT_INPUT
    except (UnicodeEncodeError, ValueError) as exc:
        # e.g. a query pattern that is not valid for the input mode
        err.write(f"netfreq: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err.write(f"netfreq: {exc}\n")
        return EXIT_INPUT
    except InvariantError as exc:
        err.write(f"netfreq: invariant failure: {exc}\n")
        return EXIT_INVARIANT
