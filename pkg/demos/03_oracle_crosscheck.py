"""Closed form vs iteration: cross-validating two independent root finders.

For a batch of random quintics, the closed-form pipeline and the
Aberth-Ehrlich simultaneous iteration compute the same five roots by
completely different routes; their agreement (after optimal pairing) is the
strongest evidence either is right.  Timings show where each approach pays.
"""

import random
import time

from quintic import MonicQuintic, PrecisionCtx, aberth_solve, match_rootsets, solve_quintic

DIGITS = 80
COUNT = 12
ctx = PrecisionCtx(digits=DIGITS, seed=5)
mp = ctx.mp
rng = random.Random(5)

print(f"{COUNT} random quintics, coefficients up to 1e3 in magnitude, {DIGITS} digits\n")
print(f"{'#':>2}  {'closed form':>12}  {'oracle':>9}  {'strategy':<16} {'match distance'}")

total_cf = total_or = 0.0
worst = ctx.mpf(0)
for k in range(COUNT):
    coeffs = [ctx.mpc(rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)) for _ in range(5)]
    quintic = MonicQuintic(*coeffs)

    t0 = time.perf_counter()
    report = solve_quintic(quintic, ctx)
    t_cf = time.perf_counter() - t0

    t0 = time.perf_counter()
    iterated = aberth_solve(quintic.as_poly(ctx), ctx)
    t_or = time.perf_counter() - t0

    match = match_rootsets(report.roots, iterated)
    worst = max(worst, match.max_distance)
    total_cf += t_cf
    total_or += t_or
    print(f"{k:>2}  {t_cf * 1e3:>10.1f}ms  {t_or * 1e3:>7.1f}ms  "
          f"{report.bring.strategy:<16} {mp.nstr(match.max_distance, 3)}")

print(f"\nworst normalized distance over the batch: {mp.nstr(worst, 3)}")
print(f"closed form total {total_cf:.2f}s, oracle total {total_or:.2f}s")
print("\nthe iteration is faster per solve; the closed form is a finite formula")
print("whose every intermediate quantity is checkable, and it exposes the")
print("Bring-Jerrard normal form (A, B, s) as a reusable invariant of the input.")
