"""
Point file I/O

csv: one "x,y" per line, optional "x,y" header, LF or CRLF. Floats are
     written with repr(), the shortest decimal that round-trips.
bin: b"MXD2", u64 little-endian count, then count x (f64 x, f64 y), all
     little-endian.
"""
import logging
import os
import struct
from pathlib import Path
from typing import Optional, Union

import numpy as np

from core.errors import BadMagicError, BadParameterError, PointIOError, PointParseError
from core.point_set import PointSet

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]

FORMATS = ("csv", "bin")
BIN_MAGIC = b"MXD2"
_COUNT = struct.Struct("<Q")
_HEADER_SIZE = len(BIN_MAGIC) + _COUNT.size
_EXTENSIONS = {".csv": "csv", ".txt": "csv", ".bin": "bin", ".mxd2": "bin"}


def infer_format(path: PathLike, format: Optional[str] = None) -> str:
    """Explicit format wins, then the extension, then csv."""
    if format:
        if format not in FORMATS:
            raise BadParameterError(f"Unknown point format '{format}' (known: {', '.join(FORMATS)})")
        return format
    return _EXTENSIONS.get(Path(path).suffix.lower(), "csv")


# === Reading ===

def read_points(path: PathLike, format: Optional[str] = None) -> PointSet:
    fmt = infer_format(path, format)
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise PointIOError(f"Cannot read {path}: {e}") from e

    points = _parse_bin(data, str(path)) if fmt == "bin" else _parse_csv(data, str(path))
    logger.debug(f"Read {len(points)} points from {path} ({fmt})")
    return points


def _parse_csv(data: bytes, where: str) -> PointSet:
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise PointParseError(f"not UTF-8 text: {e}", offset=e.start) from e

    xs, ys = [], []
    for number, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r").strip()
        if not line:
            continue
        if number == 1 and line.replace(" ", "").lower() == "x,y":
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise PointParseError(f"expected 'x,y', got {line!r}", line=number)
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise PointParseError(f"not a number in {line!r}", line=number) from None
        xs.append(x)
        ys.append(y)

    return PointSet(xs, ys, where=where)


def _parse_bin(data: bytes, where: str) -> PointSet:
    if len(data) < len(BIN_MAGIC) or data[:len(BIN_MAGIC)] != BIN_MAGIC:
        raise BadMagicError(f"missing {BIN_MAGIC!r} magic", offset=0)
    if len(data) < _HEADER_SIZE:
        raise PointParseError("truncated point count", offset=len(BIN_MAGIC))

    (count,) = _COUNT.unpack_from(data, len(BIN_MAGIC))
    expected = _HEADER_SIZE + 16 * count
    if len(data) != expected:
        raise PointParseError(
            f"header announces {count} points ({expected} bytes), file has {len(data)} bytes",
            offset=min(len(data), expected),
        )

    coords = np.frombuffer(memoryview(data)[_HEADER_SIZE:], dtype="<f8").astype(np.float64)
    return PointSet(coords[0::2], coords[1::2], where=where)


# === Writing ===

def write_points(points: PointSet, path: PathLike, format: Optional[str] = None):
    fmt = infer_format(path, format)
    if fmt == "bin":
        body = np.empty(2 * len(points), dtype="<f8")
        body[0::2] = points.xs
        body[1::2] = points.ys
        payload = BIN_MAGIC + _COUNT.pack(len(points)) + body.tobytes()
    else:
        lines = ["x,y"] + [f"{x!r},{y!r}" for x, y in zip(points.xs.tolist(), points.ys.tolist())]
        payload = ("\n".join(lines) + "\n").encode("utf-8")

    try:
        Path(path).write_bytes(payload)
    except OSError as e:
        raise PointIOError(f"Cannot write {path}: {e}") from e
    logger.debug(f"Wrote {len(points)} points to {path} ({fmt})")
