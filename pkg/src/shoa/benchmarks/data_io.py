"""Plain-text data files for benchmark constants.

Format: a single header line ``# name dimension count`` followed by one
decimal value per line (17 significant digits, enough to round-trip
float64). Files are validated against recorded SHA-256 checksums at load
time so silent edits are caught.
"""

from __future__ import annotations

import hashlib
from importlib import resources

import numpy as np

# sha256 of every shipped file; regenerated values must match bit for bit.
CHECKSUMS: dict[str, str] = {
    "composite_optima_f14.txt": "d67c0da2a530d2dced63670b30ec9dee0ad1c138e1daf0f6daf06220a86b2a60",
    "composite_optima_f15.txt": "a73a660e2839f4bd4c9701d4428ebb28de11e8e2084c721f9f8e6c82438e7caa",
    "composite_optima_f16.txt": "8b902a1a540218124e562b796ca9bbf23bf516ff54ba69349d1432ad3bfbaea5",
    "composite_optima_f17.txt": "2ce8b5f631f99c41e6c47f457121d378acdcc303512c4f3de282b6415416d8e6",
    "composite_optima_f18.txt": "790c2f65177ef62bba3f9d774b5a9d8d968a213b35db85f8622ae471ca124d56",
    "composite_optima_f19.txt": "026d5f34e4f2917d911a0d000dbd7e8c6789c62e80801d8a56f963135fef04c1",
    "cec19_c01.txt": "9b377567b1b25c4de9eeab84466621123997fa1ef097f29405938ffc67fc0baf",
    "cec19_c02.txt": "49e3bccdf1041372bdbfce7b62d4dd91abe0afb3f81685234e7ad71e419f8d32",
}


def data_path(filename: str):
    return resources.files("shoa.benchmarks").joinpath("data", filename)


def format_data_file(name: str, dimension: int, values: np.ndarray) -> str:
    flat = np.asarray(values, dtype=float).ravel()
    lines = [f"# {name} {dimension} {flat.size}"]
    lines.extend(f"{v:.17g}" for v in flat)
    return "\n".join(lines) + "\n"


def load_data_file(filename: str, expected_name: str, dimension: int, count: int) -> np.ndarray:
    raw = data_path(filename).read_bytes()
    recorded = CHECKSUMS.get(filename)
    if recorded is not None:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != recorded:
            raise ValueError(
                f"benchmark data file {filename!r} is corrupt: "
                f"sha256 {digest} != recorded {recorded}"
            )
    text = raw.decode("ascii")
    lines = text.splitlines()
    header = lines[0].split()
    if header[:1] != ["#"] or header[1] != expected_name:
        raise ValueError(f"{filename!r}: unexpected header {lines[0]!r}")
    if int(header[2]) != dimension or int(header[3]) != count:
        raise ValueError(
            f"{filename!r}: header declares {header[2]}x{header[3]}, "
            f"expected {dimension}x{count}"
        )
    values = np.array([float(s) for s in lines[1:] if s.strip()], dtype=float)
    if values.size != count:
        raise ValueError(f"{filename!r}: expected {count} values, found {values.size}")
    return values
