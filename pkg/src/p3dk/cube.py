"""9x9x9 symbol-cube codec: expands each byte into a three-symbol triple.

The cube holds a pair of ASCII symbols per cell over the 81-symbol alphabet
'*' (42) .. 'z' (122):

    cell(x, y, z) = (chr(42 + 9x + y), chr(42 + 9y + z))

A byte b at block position p encodes to (row_digit, col_digit, depth_symbol):

    v = (b - 42) mod 256        symbol value, alphabet origin '*'
    q = v div 81                overflow plane, 0..3 (0 for printable input)
    x, y = (v mod 81) div 9, (v mod 81) mod 9
    z_eff = (p + q) mod 9
    triple = (digit(x), digit(y), chr(42 + 9y + z_eff))

The depth symbol re-encodes y alongside z_eff, so every triple carries a
redundant copy of its column; the decoder checks it and rejects corrupted
triples.  Folding q into z_eff extends the printable-alphabet scheme to all
256 byte values without changing its shape, and keeps the map bijective per
position: 31 input bytes always expand to 93 output bytes.
"""

from .errors import IntegrityError, LengthError, RangeError

SYMBOL_BASE = 42  # '*', the alphabet origin
CUBE_SIZE = 9
BLOCK_BYTES = 31
ENCODED_BYTES = 93

CubeMatrix = list  # 9x9x9 nested lists of (str, str) cells


def build_cube() -> CubeMatrix:
    """Materialize the full 9x9x9 cube of symbol pairs."""
    return [
        [
            [
                (chr(SYMBOL_BASE + 9 * x + y), chr(SYMBOL_BASE + 9 * y + z))
                for z in range(CUBE_SIZE)
            ]
            for y in range(CUBE_SIZE)
        ]
        for x in range(CUBE_SIZE)
    ]


def _encode_coords(b: int, p: int) -> tuple[int, int, int]:
    """Map byte b at position p to (x, y, depth symbol code)."""
    v = (b - SYMBOL_BASE) & 0xFF
    q, i = divmod(v, 81)
    x, y = divmod(i, 9)
    z_eff = (p + q) % 9
    return x, y, SYMBOL_BASE + 9 * y + z_eff


def encode_byte(b: int, p: int) -> tuple[str, str, str]:
    """Encode one byte at block position p as a symbol triple."""
    x, y, code = _encode_coords(b, p)
    return (chr(ord("0") + x), chr(ord("0") + y), chr(code))


def decode_triple(t: tuple[str, str, str], p: int) -> int:
    """Invert encode_byte at the same position.

    Raises IntegrityError when the triple's redundant column copy does not
    match (corruption), RangeError when the depth is impossible for p.
    """
    row, col, depth = t
    x = ord(row) - ord("0")
    y = ord(col) - ord("0")
    m = ord(depth) - SYMBOL_BASE
    if not (0 <= x <= 8 and 0 <= y <= 8):
        raise IntegrityError(f"row/col digits out of range: {t!r}")
    if not (0 <= m <= 80):
        raise IntegrityError(f"depth symbol out of alphabet: {t!r}")
    y_check, z_eff = divmod(m, 9)
    if y_check != y:
        raise IntegrityError(
            f"depth symbol encodes column {y_check}, triple says {y}"
        )
    q = (z_eff - p) % 9
    if q > 3:
        raise RangeError(f"depth offset {q} impossible at position {p}")
    return (81 * q + 9 * x + y + SYMBOL_BASE) & 0xFF


def encode_block(block: bytes) -> bytes:
    """Expand 31 bytes to 93, one triple per byte."""
    if len(block) != BLOCK_BYTES:
        raise LengthError(f"expected {BLOCK_BYTES} bytes, got {len(block)}")
    out = bytearray(ENCODED_BYTES)
    digit0 = ord("0")
    for p in range(BLOCK_BYTES):
        x, y, code = _encode_coords(block[p], p)
        j = 3 * p
        out[j] = digit0 + x
        out[j + 1] = digit0 + y
        out[j + 2] = code
    return bytes(out)


def decode_block(encoded: bytes) -> bytes:
    """Exact inverse of encode_block; reports the failing triple index."""
    if len(encoded) != ENCODED_BYTES:
        raise LengthError(f"expected {ENCODED_BYTES} bytes, got {len(encoded)}")
    out = bytearray(BLOCK_BYTES)
    for p in range(BLOCK_BYTES):
        j = 3 * p
        t = (chr(encoded[j]), chr(encoded[j + 1]), chr(encoded[j + 2]))
        try:
            out[p] = decode_triple(t, p)
        except (IntegrityError, RangeError) as exc:
            raise type(exc)(f"triple {p}: {exc}") from None
    return bytes(out)


def dump_cube(cube: CubeMatrix) -> str:
    """Render the cube as one `arr[x][y][z] = <pair>` record per line."""
    lines = []
    for x in range(CUBE_SIZE):
        for y in range(CUBE_SIZE):
            for z in range(CUBE_SIZE):
                first, second = cube[x][y][z]
                lines.append(f"arr[{x}][{y}][{z}] = {first}{second}")
    return "\n".join(lines) + "\n"


def parse_cube_dump(text: str) -> CubeMatrix:
    """Rebuild a cube from dump_cube output (any cells-per-line layout)."""
    import re

    cube = [
        [[None] * CUBE_SIZE for _ in range(CUBE_SIZE)] for _ in range(CUBE_SIZE)
    ]
    for x, y, z, pair in re.findall(
        r"arr\[(\d)\]\[(\d)\]\[(\d)\] = (\S\S)", text
    ):
        cube[int(x)][int(y)][int(z)] = (pair[0], pair[1])
    for x in range(CUBE_SIZE):
        for y in range(CUBE_SIZE):
            for z in range(CUBE_SIZE):
                if cube[x][y][z] is None:
                    raise LengthError(f"dump missing cell ({x},{y},{z})")
    return cube
