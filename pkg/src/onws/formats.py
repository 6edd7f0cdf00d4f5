"""JSON encodings for signals and wavelet families.

Signal::

    {"N": 2, "grid": [[[re, im], [re, im]], [[re, im], [re, im]]]}

Family::

    {"N": 2, "A": [a, b, c, d], "generators": [<signal>, ...]}

Rows of ``grid`` are the first lattice coordinate.  Floats are written with
Python's shortest round-trip repr, so output is byte-stable across runs.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .lattice import IntMatrix2, make_dilation
from .spectral import SizeMismatch, as_signal
from .wavelet import WaveletFamily


class FormatError(ValueError):
    pass


def _num(x: float) -> float:
    x = float(x)
    return 0.0 if x == 0 else x  # fold -0.0


def signal_to_json(f) -> dict:
    f = as_signal(f)
    grid = [[[_num(z.real), _num(z.imag)] for z in row] for row in f]
    return {"N": int(f.shape[0]), "grid": grid}


def signal_from_json(obj: dict) -> np.ndarray:
    try:
        N = obj["N"]
        grid = np.asarray(obj["grid"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed signal object: {exc}") from None
    if grid.shape != (N, N, 2):
        raise SizeMismatch(f"grid has shape {grid.shape}, expected ({N}, {N}, 2)")
    return as_signal(grid[..., 0] + 1j * grid[..., 1])


def family_to_json(fam: WaveletFamily) -> dict:
    return {
        "N": fam.N,
        "A": fam.ctx.A.to_list(),
        "generators": [signal_to_json(g) for g in fam.generators],
    }


def family_from_json(obj: dict) -> WaveletFamily:
    try:
        N, A = obj["N"], IntMatrix2(*obj["A"])
        gens = [signal_from_json(g) for g in obj["generators"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed family object: {exc}") from None
    return WaveletFamily(make_dilation(N, A), tuple(gens))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def load(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
