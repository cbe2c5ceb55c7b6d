"""Independent verification oracle: Aberth-Ehrlich simultaneous root finding.

Shares nothing with the closed-form pipeline beyond the arithmetic substrate,
so agreement between the two is real evidence.  Initial guesses sit on a
circle whose angular offset is derived deterministically from the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NoConvergence
from .mpfield import PrecisionCtx
from .polyring import Poly

__all__ = ["RootMatch", "aberth_solve", "match_rootsets"]


@dataclass(frozen=True)
class RootMatch:
    """Best pairing between two root multisets."""

    pairing: tuple
    max_distance: object
    relative: bool


def _splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return state, (z ^ (z >> 31)) & 0xFFFFFFFFFFFFFFFF


def aberth_solve(poly: Poly, ctx: PrecisionCtx):
    """All roots of poly by simultaneous Aberth-Ehrlich iteration.

    Deterministic given (poly, ctx): starting points are spread on a circle
    of radius 1 + max|coeff| with a seed-derived angular offset.  Multiple
    roots converge linearly and land within roughly half the working
    precision of each other, which the residual stop accepts.
    """
    mp = ctx.mp
    deg = poly.degree
    if deg < 1:
        raise ValueError("aberth_solve needs degree >= 1")
    lead = poly.coeffs[-1]
    if lead == 0:
        raise ValueError("leading coefficient must be nonzero")
    coeffs = [ctx.convert(c) for c in poly.coeffs]
    dcoeffs = [k * coeffs[k] for k in range(1, deg + 1)]

    def val_and_deriv(x):
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * x + c
        dacc = dcoeffs[-1]
        for c in reversed(dcoeffs[:-1]):
            dacc = dacc * x + c
        return acc, dacc

    radius = 1 + max(abs(c) for c in coeffs)
    _, word = _splitmix64(ctx.seed & 0xFFFFFFFFFFFFFFFF)
    offset = mp.mpf(word) / mp.mpf(2**64)
    pi2 = 2 * mp.pi
    zs = [radius * mp.exp(1j * pi2 * (k + offset + mp.mpf(1) / 4) / deg) for k in range(deg)]

    coeff_scale = max(ctx.mpf(1), max(abs(c) for c in coeffs))
    res_tol = ctx.pow10(-ctx.digits + 20)
    step_tol = ctx.pow10(-ctx.digits - 5)
    max_iter = 200 * ctx.digits
    for _ in range(max_iter):
        moved = ctx.mpf(0)
        done = True
        for i in range(deg):
            zi = zs[i]
            f, df = val_and_deriv(zi)
            if f == 0:
                continue
            if df == 0:
                zs[i] = zi + ctx.pow10(-(ctx.digits // 2)) * (1 + abs(zi))
                done = False
                continue
            newton = f / df
            aberth = mp.mpc(0)
            for j in range(deg):
                if j != i:
                    aberth += 1 / (zi - zs[j])
            denom = 1 - newton * aberth
            if denom == 0:
                correction = newton
            else:
                correction = newton / denom
            zs[i] = zi - correction
            moved = max(moved, abs(correction) / (1 + abs(zi)))
            if abs(f) > res_tol * coeff_scale * max(ctx.mpf(1), abs(zi)) ** deg:
                done = False
        if done or moved <= step_tol:
            break
    else:
        raise NoConvergence(f"Aberth iteration did not settle in {max_iter} rounds")
    return zs


def match_rootsets(xs, ys) -> RootMatch:
    """Exact minimum over all pairings of the largest pairwise distance.

    Distances are normalized by 1 + the largest root magnitude across both
    sets.  Brute force over the 120 permutations: the minimum is genuine.
    """
    xs = list(xs)
    ys = list(ys)
    if len(xs) != len(ys):
        raise ValueError("root sets must have equal size")
    norm = 1 + max(max(abs(x) for x in xs), max(abs(y) for y in ys))
    best = None
    best_perm = None
    for perm in permutations(range(len(ys))):
        worst = max(abs(xs[i] - ys[perm[i]]) for i in range(len(xs)))
        if best is None or worst < best:
            best = worst
            best_perm = perm
    return RootMatch(pairing=best_perm, max_distance=best / norm, relative=True)
