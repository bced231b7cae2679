"""Balls and tubes in a 3D grid: every connected code is realized in dimension 3.

Codeword ``sigma`` gets a ball on the floor ``z = 0``: a bar of cells at
``x = 2k`` spanning every tube lane in ``y``. Each strict containment
``sigma < tau`` gets tube ``t`` (1-based, in sorted pair order) running in
its own lane ``y = 2(t-1)``: up from the ball of ``sigma`` to height
``t + 1``, across, and down onto the ball of ``tau``. Tube cells carry the
label ``sigma``. Heights strictly increase with ``t`` and lanes are two
cells apart, so tubes never share or touch cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .codes import Code, is_subset, require_connected, sort_key
from .grid import MAX_CELLS, GridError, GridRealization


@dataclass(frozen=True)
class Tube:
    sigma: int
    tau: int
    height: int
    cells: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Realization3D:
    grid: GridRealization
    tubes: tuple[Tube, ...]
    ball_x: dict

    def scene(self) -> dict:
        from .gridio import scene_document
        return scene_document(self.grid)


def containment_pairs(code: Code) -> list[tuple[int, int]]:
    words = code.nonempty
    pairs = [(a, b) for a, b in itertools.permutations(words, 2) if a != b and is_subset(a, b)]
    return sorted(pairs, key=lambda p: (sort_key(p[0]), sort_key(p[1])))


def build_3d(code: Code) -> Realization3D:
    require_connected(code)
    words = code.nonempty
    pairs = containment_pairs(code)
    ball_x = {w: 2 * k for k, w in enumerate(words)}
    nx_ = max(1, 2 * len(words) - 1)
    ny = max(1, 2 * len(pairs) - 1)
    nz = len(pairs) + 2 if pairs else 1
    if nx_ * ny * nz > MAX_CELLS:
        raise GridError(
            f"3D grid would need {nx_}x{ny}x{nz} = {nx_ * ny * nz} cells "
            f"({len(words)} balls, {len(pairs)} tubes); limit is {MAX_CELLS}"
        )
    labels = np.zeros((nx_, ny, nz), dtype=np.uint64)
    for w, x in ball_x.items():
        labels[x, :, 0] = w
    tubes = []
    for t, (sigma, tau) in enumerate(pairs, start=1):
        lane = 2 * (t - 1)
        h = t + 1
        xa, xb = ball_x[sigma], ball_x[tau]
        cells = [(xa, lane, z) for z in range(1, h + 1)]
        step = 1 if xb > xa else -1
        cells += [(x, lane, h) for x in range(xa + step, xb, step)]
        cells += [(xb, lane, z) for z in range(h, 0, -1)]
        for c in cells:
            labels[c] = sigma
        tubes.append(Tube(sigma, tau, h, tuple(cells)))
    return Realization3D(GridRealization(labels, code.n), tuple(tubes), ball_x)
