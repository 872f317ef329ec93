"""Benchmark harness: timing sweeps, a diffusion metric, CSV/SVG reports.

Three timing experiments (encryption time vs file size, table-rotation time
vs rotation count, per-message setup time vs input bit length) plus an
avalanche statistic.  All timings use the monotonic clock, run single
threaded, discard warmup passes, and report the median over trials;
medians resist scheduler noise better than means.  Absolute values are
hardware-bound, so tests assert shapes (monotonicity, linear fit), never
milliseconds.  Reference timings from older hardware travel as `ref_*`
metadata comments in the CSV, clearly separated from measured rows.
"""

import contextlib
import gc
import random
import statistics
import time
from dataclasses import dataclass, field

from . import cube
from .cipher import (
    BLOCK_BITS,
    KEY_BYTES,
    encrypt_block,
    encrypt_stream,
    expand_key_for,
    pad_block,
)
from .errors import IoError, UsageError
from .rng import next_below, seed_from_bytes
from .sbox import build_sbox, rotate

DEFAULT_SIZES_KB = (20, 35, 155, 333, 512)
DEFAULT_BIT_LENGTHS = (3, 9, 27, 81, 243)
DEFAULT_TRIALS = 5
CONTENT_SEED = 0x9D3B

REF_FILESIZE_S = {20: 28, 35: 58, 155: 261, 333: 468, 512: 501}
REF_ROTATIONS_MS = {n: round(0.003 * n, 3) for n in range(17)}
REF_SBOXGEN_MS = {3: 0.0003, 9: 0.0057, 81: 0.0285, 243: 0.057}


@dataclass
class BenchReport:
    """One experiment's rows plus the context needed to rerun it."""

    experiment: str
    unit: str
    rows: list[tuple[str, float]]
    metadata: dict[str, str] = field(default_factory=dict)


def _now_utc() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


@contextlib.contextmanager
def _gc_paused():
    """Keep the cycle collector out of timed sections."""
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _timed_sample(fn, inner: int = 1) -> float:
    t0 = time.perf_counter()
    for _ in range(inner):
        fn()
    return (time.perf_counter() - t0) / inner


def _median_seconds(fn, trials: int, warmup: int, inner: int = 1) -> float:
    """Median wall time of fn over trials, each averaging `inner` calls."""
    with _gc_paused():
        for _ in range(warmup):
            fn()
        samples = [_timed_sample(fn, inner) for _ in range(trials)]
    return statistics.median(samples)


def bench_filesize(
    sizes_kb=DEFAULT_SIZES_KB,
    key: bytes | None = None,
    trials: int = DEFAULT_TRIALS,
    warmup: int = 1,
) -> BenchReport:
    """Median encrypt_stream wall time for each synthetic file size."""
    sizes = sorted(sizes_kb)
    if not sizes:
        raise UsageError("size list must not be empty")
    if any(s <= 0 for s in sizes):
        raise UsageError(f"sizes must be positive, got {sizes}")
    if key is None:
        key = bytes([0x5A] * (KEY_BYTES - 1) + [0x40])
    gen = random.Random(CONTENT_SEED)
    rows = []
    for size in sizes:
        data = gen.randbytes(size * 1024)
        seconds = _median_seconds(
            lambda: encrypt_stream(data, key), trials, warmup
        )
        rows.append((str(size), seconds))
    report = BenchReport("filesize", "s", rows)
    report.metadata = {
        "timestamp": _now_utc(),
        "trials": str(trials),
        "warmup": str(warmup),
        "iterations": "1",
        "sizes_kb": ",".join(str(s) for s in sizes),
        "content_seed": str(CONTENT_SEED),
        "ref_hardware_s": _ref_series(REF_FILESIZE_S),
    }
    return report


def bench_rotations(
    max_count: int = 16, trials: int = DEFAULT_TRIALS, warmup: int = 1
) -> BenchReport:
    """Median rotate() time for 0..max_count unit table rotations.

    Trials are interleaved across counts so slow clock or thermal drift
    lands on every count equally instead of skewing the fitted line.
    """
    if not 0 <= max_count <= 16:
        raise UsageError(f"max_count must be in [0, 16], got {max_count}")
    box = build_sbox(0)
    counts = range(max_count + 1)
    samples = {n: [] for n in counts}
    with _gc_paused():
        for _ in range(warmup):
            for n in counts:
                rotate(box, n)
        for _ in range(trials):
            for n in counts:
                samples[n].append(_timed_sample(lambda: rotate(box, n)))
    rows = [(str(n), statistics.median(samples[n]) * 1e3) for n in counts]
    report = BenchReport("rotations", "ms", rows)
    report.metadata = {
        "timestamp": _now_utc(),
        "trials": str(trials),
        "warmup": str(warmup),
        "iterations": "1",
        "ref_hardware_ms": _ref_series(REF_ROTATIONS_MS),
    }
    if len(rows) >= 2:
        xs = [float(label) for label, _ in rows]
        ys = [value for _, value in rows]
        fit = statistics.linear_regression(xs, ys)
        r = statistics.correlation(xs, ys)
        report.metadata["slope_ms_per_rotation"] = f"{fit.slope:.6f}"
        report.metadata["r_squared"] = f"{r * r:.6f}"
    return report


def _setup_message(length_bits: int, payload: int) -> None:
    """The per-message setup path: pad, cube-encode, seed, fetch S-box."""
    nbytes = (length_bits + 7) // 8
    data = (payload << (8 * nbytes - length_bits)).to_bytes(nbytes, "big")
    encoded = bytearray(3 * nbytes)
    for p in range(nbytes):
        x, y, code = cube._encode_coords(data[p], p)
        encoded[3 * p] = 48 + x
        encoded[3 * p + 1] = 48 + y
        encoded[3 * p + 2] = code
    rng = seed_from_bytes(bytes(encoded))
    build_sbox(next_below(rng, 16))


def bench_sboxgen(
    bit_lengths=DEFAULT_BIT_LENGTHS, trials: int = DEFAULT_TRIALS, warmup: int = 1
) -> BenchReport:
    """Median per-message setup time for each input bit length.

    Lengths are powers of three up to 243.  The sixteen substitution tables
    are shared process-wide, so after the prewarm pass this measures the
    marginal per-message work, which grows with the input length.
    """
    lengths = sorted(bit_lengths)
    if not lengths:
        raise UsageError("bit length list must not be empty")
    if any(n not in DEFAULT_BIT_LENGTHS for n in lengths):
        raise UsageError(f"bit lengths must be from {DEFAULT_BIT_LENGTHS}")
    for r in range(16):
        build_sbox(r)
    gen = random.Random(CONTENT_SEED)
    inner = 512
    rows = []
    for length in lengths:
        payload = gen.getrandbits(length)
        seconds = _median_seconds(
            lambda: _setup_message(length, payload),
            trials,
            warmup,
            inner=inner,
        )
        rows.append((str(length), seconds * 1e3))
    report = BenchReport("sboxgen", "ms", rows)
    report.metadata = {
        "timestamp": _now_utc(),
        "trials": str(trials),
        "warmup": str(warmup),
        "iterations": str(inner),
        "ref_hardware_ms": _ref_series(REF_SBOXGEN_MS),
    }
    return report


def avalanche(
    key_count: int = 10, flips_per_key: int = 100, seed: int = CONTENT_SEED
) -> BenchReport:
    """Fraction of ciphertext bits flipped by single plaintext-bit flips.

    For key_count random keys and flips_per_key random (plaintext, bit)
    pairs each, encrypts the block before and after the flip and reports
    the mean and standard deviation of the flipped-bit fraction over the
    744 ciphertext bits.
    """
    if key_count < 1 or flips_per_key < 1:
        raise UsageError("key_count and flips_per_key must be >= 1")
    gen = random.Random(seed)
    fractions = []
    for _ in range(key_count):
        kb = bytearray(gen.randbytes(KEY_BYTES))
        kb[-1] &= 0xE0
        ek = expand_key_for(bytes(kb))
        for _ in range(flips_per_key):
            bits = gen.getrandbits(BLOCK_BITS)
            position = gen.randrange(BLOCK_BITS)
            c1 = encrypt_block(pad_block(bits, BLOCK_BITS), ek)
            c2 = encrypt_block(pad_block(bits ^ (1 << position), BLOCK_BITS), ek)
            changed = (
                int.from_bytes(c1, "big") ^ int.from_bytes(c2, "big")
            ).bit_count()
            fractions.append(changed / 744)
    report = BenchReport(
        "avalanche",
        "fraction",
        [
            ("mean_flip_fraction", statistics.fmean(fractions)),
            ("stdev_flip_fraction", statistics.stdev(fractions)),
        ],
    )
    report.metadata = {
        "timestamp": _now_utc(),
        "trials": str(len(fractions)),
        "warmup": "0",
        "iterations": "1",
        "keys": str(key_count),
        "flips_per_key": str(flips_per_key),
        "seed": str(seed),
        "ciphertext_bits": "744",
    }
    return report


def _ref_series(series: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(series.items()))


def emit_csv(report: BenchReport, path: str) -> None:
    """Write the report as CSV: `#` metadata comments, then label,value,unit."""
    lines = [f"# experiment: {report.experiment}"]
    for key, value in report.metadata.items():
        lines.append(f"# {key}: {value}")
    lines.append("label,value,unit")
    for label, value in report.rows:
        lines.append(f"{label},{value!r},{report.unit}")
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write CSV to {path}: {exc}") from None


def read_csv(path: str) -> BenchReport:
    """Parse emit_csv output back into a report (rows round-trip exactly)."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            raw = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read CSV from {path}: {exc}") from None
    experiment = ""
    metadata = {}
    rows = []
    unit = ""
    saw_header = False
    for line in raw.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            key = key.strip()
            if key == "experiment":
                experiment = value.strip()
            else:
                metadata[key] = value.strip()
            continue
        if not saw_header:
            if line != "label,value,unit":
                raise IoError(f"unexpected CSV header {line!r} in {path}")
            saw_header = True
            continue
        label, value, unit = line.split(",")
        rows.append((label, float(value)))
    return BenchReport(experiment, unit, rows, metadata)


def emit_svg(report: BenchReport, path: str, width: int = 640, height: int = 400) -> None:
    """Render the rows as a single-polyline SVG chart with axis labels."""
    margin = 60
    xs = []
    for label, _ in report.rows:
        try:
            xs.append(float(label))
        except ValueError:
            xs = []
            break
    if not xs:
        xs = [float(i) for i in range(len(report.rows))]
    ys = [value for _, value in report.rows]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin

    def sx(x):
        return margin + (x - x_lo) / x_span * plot_w

    def sy(y):
        return height - margin - (y - y_lo) / y_span * plot_h

    points = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in zip(xs, ys))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<polyline points="{points}" fill="none" stroke="steelblue" stroke-width="2"/>',
    ]
    for x, y, (label, _) in zip(xs, ys, report.rows):
        parts.append(f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3" fill="steelblue"/>')
        parts.append(
            f'<text x="{sx(x):.1f}" y="{height - margin + 16}" '
            f'font-size="11" text-anchor="middle">{label}</text>'
        )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 14}" font-size="13" '
        f'text-anchor="middle">{report.experiment}</text>'
    )
    parts.append(
        f'<text x="16" y="{height / 2:.0f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {height / 2:.0f})">{report.unit}</text>'
    )
    parts.append(
        f'<text x="{margin}" y="{margin - 8}" font-size="11">'
        f"{y_hi:.6g} {report.unit} max</text>"
    )
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write SVG to {path}: {exc}") from None
