"""Command-line front end: key generation, file encryption, benchmarks, dumps.

Exit codes: 0 success, 1 usage, 2 I/O, 3 format or integrity failure
(bad container magic, corrupted triples, impossible depth), 4 key file
problems.  Every failure prints a one-line diagnostic to stderr.  All
binary outputs go through a required --out flag, never to the terminal.
"""

import argparse
import math
import os
import sys

from . import bench as bench_mod
from .cipher import (
    decrypt_stream,
    encrypt_stream,
    generate_master_key,
    validate_master_key,
)
from .cube import build_cube, dump_cube
from .errors import (
    FormatError,
    IntegrityError,
    IoError,
    KeyFormatError,
    LengthError,
    RangeError,
    SeedError,
    UsageError,
)
from .sbox import build_sbox, dump_sbox

_EXIT_USAGE = 1
_EXIT_IO = 2
_EXIT_FORMAT = 3
_EXIT_KEY = 4


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports usage problems as exit code 1."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="p3dk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="write a fresh 31-byte key file")
    p.add_argument("--out", required=True, help="key file path")

    p = sub.add_parser("encrypt", help="encrypt a file into a container")
    p.add_argument("--key", required=True, help="31-byte key file")
    p.add_argument("--in", dest="infile", required=True, help="plaintext path")
    p.add_argument("--out", required=True, help="container path")

    p = sub.add_parser("decrypt", help="decrypt a container back to a file")
    p.add_argument("--key", required=True, help="31-byte key file")
    p.add_argument("--in", dest="infile", required=True, help="container path")
    p.add_argument("--out", required=True, help="plaintext path")

    p = sub.add_parser("bench", help="run a timing experiment")
    bench_sub = p.add_subparsers(dest="experiment", required=True)

    b = bench_sub.add_parser("filesize", help="encryption time vs file size")
    b.add_argument("--sizes", help="comma-separated sizes in KB")
    b.add_argument("--trials", type=int, default=bench_mod.DEFAULT_TRIALS)
    b.add_argument("--out", required=True, help="CSV path")
    b.add_argument("--svg", help="optional SVG chart path")

    b = bench_sub.add_parser("rotations", help="table time vs rotation count")
    b.add_argument("--max-count", type=int, default=16)
    b.add_argument("--trials", type=int, default=bench_mod.DEFAULT_TRIALS)
    b.add_argument("--out", required=True, help="CSV path")
    b.add_argument("--svg", help="optional SVG chart path")

    b = bench_sub.add_parser("sboxgen", help="setup time vs input bit length")
    b.add_argument("--sizes", help="comma-separated bit lengths")
    b.add_argument("--trials", type=int, default=bench_mod.DEFAULT_TRIALS)
    b.add_argument("--out", required=True, help="CSV path")
    b.add_argument("--svg", help="optional SVG chart path")

    p = sub.add_parser("avalanche", help="plaintext-flip diffusion statistic")
    p.add_argument("--trials", type=int, required=True, help="total bit flips")
    p.add_argument("--out", required=True, help="CSV path")

    sub.add_parser("dump-cube", help="print the symbol cube, one cell per line")

    p = sub.add_parser("dump-sbox", help="print a substitution table")
    p.add_argument("--rotation", type=int, required=True, help="rotation in [0, 15]")

    return parser


def _load_key(path: str) -> bytes:
    with open(path, "rb") as fh:
        return validate_master_key(fh.read())


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _cmd_keygen(args) -> int:
    with open(args.out, "wb") as fh:
        fh.write(generate_master_key())
    print(f"wrote key to {args.out}")
    return 0


def _cmd_crypt(args, encrypting: bool) -> int:
    if os.path.realpath(args.infile) == os.path.realpath(args.out):
        raise UsageError("--in and --out must differ; refusing to overwrite input")
    key = _load_key(args.key)
    with open(args.infile, "rb") as fh:
        data = fh.read()
    out = encrypt_stream(data, key) if encrypting else decrypt_stream(data, key)
    with open(args.out, "wb") as fh:
        fh.write(out)
    print(f"wrote {len(out)} bytes to {args.out}")
    return 0


def _cmd_bench(args) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    if args.experiment == "filesize":
        sizes = _parse_int_list(args.sizes) if args.sizes else bench_mod.DEFAULT_SIZES_KB
        report = bench_mod.bench_filesize(sizes, trials=args.trials)
    elif args.experiment == "rotations":
        report = bench_mod.bench_rotations(args.max_count, trials=args.trials)
    else:
        lengths = (
            _parse_int_list(args.sizes) if args.sizes else bench_mod.DEFAULT_BIT_LENGTHS
        )
        report = bench_mod.bench_sboxgen(lengths, trials=args.trials)
    bench_mod.emit_csv(report, args.out)
    written = args.out
    if args.svg:
        bench_mod.emit_svg(report, args.svg)
        written += f" and {args.svg}"
    print(f"{report.experiment}: {len(report.rows)} rows, wrote {written}")
    return 0


def _cmd_avalanche(args) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    keys = max(1, args.trials // 100)
    flips = math.ceil(args.trials / keys)
    report = bench_mod.avalanche(keys, flips)
    bench_mod.emit_csv(report, args.out)
    stats = dict(report.rows)
    print(
        f"avalanche over {report.metadata['trials']} flips: "
        f"mean={stats['mean_flip_fraction']:.4f} "
        f"stdev={stats['stdev_flip_fraction']:.4f}, wrote {args.out}"
    )
    return 0


def run(argv) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "keygen":
            return _cmd_keygen(args)
        if args.command == "encrypt":
            return _cmd_crypt(args, encrypting=True)
        if args.command == "decrypt":
            return _cmd_crypt(args, encrypting=False)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "avalanche":
            return _cmd_avalanche(args)
        if args.command == "dump-cube":
            sys.stdout.write(dump_cube(build_cube()))
            return 0
        sys.stdout.write(dump_sbox(build_sbox(args.rotation)))
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (IoError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return _EXIT_IO
    except (FormatError, IntegrityError, RangeError, LengthError) as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return _EXIT_FORMAT
    except (KeyFormatError, SeedError) as exc:
        print(f"key error: {exc}", file=sys.stderr)
        return _EXIT_KEY


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
