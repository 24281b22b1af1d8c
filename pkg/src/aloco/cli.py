"""Batch command-line front end.

Subcommands: count, encode, decode, verify, table, capacity, enumerate.
Exit status 0 on success, 1 for usage or parameter problems, 2 for data
corruption or constraint violations. Diagnostics go to standard error
with bit offsets.
"""

import argparse
import sys

from .analysis import capacity, format_table, rate_table
from .codec import message_size
from .counts import CodeParams, build_table
from .errors import (
    ConstraintViolation,
    CorruptionError,
    FramingError,
    ParameterError,
)
from .oracle import EXHAUSTIVE_LIMIT, enumerate_codebook, format_codebook
from .stream import (
    decode_stream,
    encode_stream,
    pack_frame,
    scan_stream,
    unpack_frame,
)


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit status 1 here, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _read_binary(path):
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _write_binary(path, data):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _input_bits(text):
    bits = "".join(text.split())
    if not set(bits) <= {"0", "1"}:
        raise ParameterError("input must contain only '0'/'1' and whitespace")
    return bits


def _load_stream_bits(args, params):
    """Read a stream in the selected format; returns (bits, message_bits)."""
    if args.format == "packed":
        frame = unpack_frame(_read_binary(args.input))
        if frame.params != params:
            raise ParameterError(
                f"frame is for m={frame.params.m}, x={frame.params.x}, "
                f"not m={params.m}, x={params.x}"
            )
        return frame.bits, frame.message_bits
    return _input_bits(_read_text(args.input)), 0


def cmd_count(args):
    params = CodeParams(args.m, args.x)
    table = build_table(params)
    print(table[params.m])
    return 0


def cmd_encode(args):
    params = CodeParams(args.m, args.x)
    table = build_table(params)
    s = message_size(params, table)
    bits = _input_bits(_read_text(args.input))
    if not bits:
        raise ParameterError("no message bits in input")
    original = len(bits)
    if original % s:
        if not args.pad_zero:
            raise ParameterError(
                f"input is {original} bits, not a multiple of the "
                f"{s}-bit message size (use --pad-zero to pad)"
            )
        bits = bits + "0" * (s - original % s)
    messages = [bits[k : k + s] for k in range(0, len(bits), s)]
    out = encode_stream(messages, params, table)
    if args.format == "packed":
        _write_binary(args.output, pack_frame(out, params, message_bits=original))
    else:
        _write_text(args.output, out + "\n")
    return 0


def cmd_decode(args):
    params = CodeParams(args.m, args.x)
    table = build_table(params)
    bits, message_bits = _load_stream_bits(args, params)
    messages = decode_stream(bits, params, table, strict=args.strict)
    out = "".join(messages)
    if message_bits:
        if not len(out) - len(messages[0]) < message_bits <= len(out):
            raise FramingError(
                f"recorded message bit-length {message_bits} does not "
                f"match {len(messages)} decoded messages of {len(messages[0])} bits"
            )
        out = out[:message_bits]
    _write_text(args.output, out + "\n")
    return 0


def cmd_verify(args):
    params = CodeParams(args.m, args.x)
    bits, _ = _load_stream_bits(args, params)
    violations = scan_stream(bits, params)
    for v in violations:
        if v.kind == "pattern":
            pattern = bits[v.offset : v.offset + v.length]
            print(
                f"forbidden pattern {pattern} at bit offset {v.offset}",
                file=sys.stderr,
            )
        else:
            print(
                f"run of {v.length} identical bits at bit offset {v.offset} "
                f"exceeds the bound {2 * (params.m - 1) + params.x}",
                file=sys.stderr,
            )
    return 2 if violations else 0


def cmd_table(args):
    m_list = _parse_m_list(args.m)
    table = build_table(CodeParams(max(m_list), args.x), max(m_list))
    reports = rate_table(args.x, m_list, table)
    print(format_table(reports, csv=args.csv), end="")
    return 0


def cmd_capacity(args):
    print(f"{capacity(args.x, args.tolerance):.6f}")
    return 0


def cmd_enumerate(args):
    params = CodeParams(args.m, args.x)
    codebook = enumerate_codebook(params, limit=args.limit)
    _write_text(args.output, format_codebook(codebook))
    return 0


def _parse_m_list(text):
    try:
        values = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError as exc:
        raise ParameterError(f"bad m list {text!r}: {exc}") from exc
    if not values:
        raise ParameterError("m list is empty")
    return values


def _add_mx(parser, m_help="codeword length m"):
    parser.add_argument("--m", type=int, required=True, help=m_help)
    parser.add_argument(
        "--x", type=int, required=True, help="maximum forbidden zero run x"
    )


def _add_io(parser, output=True):
    parser.add_argument(
        "--input", metavar="PATH", help="input file (default: standard input)"
    )
    if output:
        parser.add_argument(
            "--output", metavar="PATH", help="output file (default: standard output)"
        )


def _add_format(parser):
    parser.add_argument(
        "--format",
        choices=("ascii", "packed"),
        default="ascii",
        help="stream format (default ascii)",
    )


def build_parser():
    parser = _Parser(
        prog="aloco",
        description="Asymmetric run-length constrained codes: counting, "
        "encoding, decoding, stream verification, and rate analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", help="print the number of valid codewords")
    _add_mx(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("encode", help="encode message bits into a bridged stream")
    _add_mx(p)
    _add_io(p)
    _add_format(p)
    p.add_argument(
        "--pad-zero",
        action="store_true",
        help="zero-pad a trailing partial message; the packed header "
        "records the original bit-length so decode can trim",
    )
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a bridged stream back to messages")
    _add_mx(p)
    _add_io(p)
    _add_format(p)
    p.add_argument(
        "--strict",
        action="store_true",
        help="also verify that every bridge matches its codeword boundary",
    )
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser(
        "verify",
        help="scan a bit sequence for forbidden patterns and over-long runs",
    )
    _add_mx(p)
    _add_io(p, output=False)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print rate/adder figures for a list of lengths")
    p.add_argument(
        "--x", type=int, required=True, help="maximum forbidden zero run x"
    )
    p.add_argument(
        "--m",
        required=True,
        metavar="M1,M2,...",
        help="comma-separated codeword lengths",
    )
    p.add_argument("--csv", action="store_true", help="emit CSV instead of text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("capacity", help="print the capacity of the constraint")
    p.add_argument(
        "--x", type=int, required=True, help="maximum forbidden zero run x"
    )
    p.add_argument(
        "--tolerance",
        type=float,
        default=1e-12,
        help="bisection tolerance for the characteristic root",
    )
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("enumerate", help="dump the full codebook, index-annotated")
    _add_mx(p)
    p.add_argument(
        "--output", metavar="PATH", help="output file (default: standard output)"
    )
    p.add_argument(
        "--limit",
        type=int,
        default=EXHAUSTIVE_LIMIT,
        help=f"refuse m larger than this (default {EXHAUSTIVE_LIMIT})",
    )
    p.set_defaults(func=cmd_enumerate)

    return parser


def run(argv=None):
    """Parse argv and execute one subcommand; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"aloco {args.command}: {exc}", file=sys.stderr)
        return 1
    except (ConstraintViolation, CorruptionError, FramingError) as exc:
        print(f"aloco {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"aloco {args.command}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
