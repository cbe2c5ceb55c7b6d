"""Cardano and Ferrari kernels, root selection, deflation, and the full solve.

The end-to-end path: reduce the quintic to y^5 + A*y + B, solve the Bring
form for one value y, solve the quartic substitution
x^4 + d*x^3 + c*x^2 + b*x + (a + y) = 0 with Ferrari's method, keep the one
quartic root that also satisfies the quintic, deflate it out, and Ferrari
the remaining quartic for the other four roots.  Every returned report is
residual- and Vieta-verified; failures escalate precision before erroring.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bring as bring_mod
from .bring import BringSolution, solve_bring
from .errors import (
    AmbiguousSelection,
    QuinticError,
    CancellationFailure,
    CrossCheckError,
    DegenerateCubic,
    NearBranchPoint,
    NotARoot,
    PrecisionExhausted,
    ResolventFailure,
    StageError,
)
from .mpfield import PrecisionCtx, pow_rational, sqrt_principal
from .polyring import deflate as poly_deflate
from .tschirnhaus import BringReduction, MonicQuintic, reduce_to_bring

__all__ = [
    "QuarticCoeffs",
    "RootReport",
    "cardano_roots",
    "ferrari_roots",
    "select_quintic_root",
    "deflate_quintic",
    "solve_quintic",
]


@dataclass(frozen=True)
class QuarticCoeffs:
    """Monic quartic x^4 + p3 x^3 + p2 x^2 + p1 x + p0."""

    p3: object
    p2: object
    p1: object
    p0: object

    def eval(self, x, ctx):
        x = ctx.convert(x)
        return (((x + self.p3) * x + self.p2) * x + self.p1) * x + self.p0

    def scale(self, ctx):
        return max(ctx.mpf(1), abs(self.p3), abs(self.p2), abs(self.p1), abs(self.p0))


@dataclass(frozen=True)
class RootReport:
    """Five verified roots plus the evidence used to produce them."""

    roots: tuple
    residuals: tuple
    bring: BringSolution
    reduction: BringReduction
    candidate_residuals: tuple
    precision_used: int
    shift_applied: object


def cardano_roots(c3, c2, c1, c0, ctx: PrecisionCtx):
    """All three roots of c3 x^3 + c2 x^2 + c1 x + c0.

    Index 0 is the principal-branch closed form (cube root and square root
    both principal); the other two rotate the cube-root term by the primitive
    cube roots of unity, ordered by increasing argument of the rotation
    factor in [0, 2*pi).
    """
    mp = ctx.mp
    c3, c2, c1, c0 = (ctx.convert(v) for v in (c3, c2, c1, c0))
    scale = max(ctx.mpf(1), abs(c3), abs(c2), abs(c1), abs(c0))
    if abs(c3) <= ctx.pow10(-(ctx.digits // 2)) * scale:
        raise DegenerateCubic("leading coefficient vanished")

    rad = (
        4 * c1**3 * c3
        - c1**2 * c2**2
        - 18 * c1 * c2 * c3 * c0
        + 27 * c0**2 * c3**2
        + 4 * c0 * c2**3
    )
    sq3 = mp.sqrt(mp.mpf(3))
    core = 36 * c1 * c2 * c3 - 108 * c0 * c3**2 - 8 * c2**3
    wing = 12 * sq3 * sqrt_principal(rad, ctx) * c3
    if abs(rad) <= ctx.pow10(-ctx.digits) * scale**4 and abs(core) <= ctx.pow10(
        -ctx.digits
    ) * scale**3:
        triple = -c2 / (3 * c3)  # discriminant and depressed cube both vanished
        return [triple, triple, triple]
    gscale = max(ctx.mpf(1), abs(core), abs(wing))
    big = core + wing
    if abs(big) <= ctx.pow10(-ctx.digits) * gscale:
        big = core - wing  # the other square-root sign avoids the cancellation
        if abs(big) <= ctx.pow10(-ctx.digits) * gscale:
            raise CancellationFailure("both cube-root arguments underflowed")

    cr = pow_rational(big, 1, 3, ctx)
    omega = mp.exp(2j * mp.pi / 3)
    mid = 3 * c1 * c3 - c2 * c2
    roots = []
    for rot in (1, omega, omega * omega):
        ck = cr * rot
        roots.append(ck / (6 * c3) - mp.mpf(2) / 3 * mid / (c3 * ck) - c2 / (3 * c3))
    return roots


def _quartic_root_residual_scale(quartic, root, ctx):
    return quartic.scale(ctx) * max(ctx.mpf(1), abs(root)) ** 4


def ferrari_roots(quartic: QuarticCoeffs, ctx: PrecisionCtx):
    """Four roots of a monic quartic via the resolvent-cubic factorization.

    The quartic splits as (x^2 + (p3/2)x + g)^2 - (e*x + f)^2 where g is a
    resolvent root, e = sqrt(p3^2/4 + 2g - p2) and f = (p3*g - p1)/(2e); the
    degenerate e ~ 0 case uses f = sqrt(g^2 - p0).  Resolvent roots are tried
    in cardano order until the four roots pass their residual check.
    """
    mp = ctx.mp
    p3, p2, p1, p0 = (ctx.convert(v) for v in (quartic.p3, quartic.p2, quartic.p1, quartic.p0))
    q = QuarticCoeffs(p3, p2, p1, p0)

    # resolvent cubic from the factorization identity
    # (p3 g - p1)^2 = 4 (p3^2/4 + 2g - p2)(g^2 - p0), expanded and made monic
    r2 = -p2 / 2
    r1 = (p1 * p3 - 4 * p0) / 4
    r0 = -(p1 * p1 + p3 * p3 * p0 - 4 * p2 * p0) / 8
    candidates = cardano_roots(ctx.mpc(1), r2, r1, r0, ctx)

    tol = ctx.pow10(-ctx.digits + 12)
    half = p3 / 2
    best = None
    best_worst = None
    for g in candidates:
        e = sqrt_principal(p3 * p3 / 4 + 2 * g - p2, ctx)
        if abs(e) <= ctx.pow10(-(ctx.digits // 2)) * max(ctx.mpf(1), abs(g)):
            f = sqrt_principal(g * g - p0, ctx)
        else:
            f = (p3 * g - p1) / (2 * e)
        s1 = sqrt_principal(p3 * p3 - 4 * p3 * e + 4 * e * e + 16 * f - 16 * g, ctx)
        s2 = sqrt_principal(p3 * p3 + 4 * p3 * e + 4 * e * e - 16 * f - 16 * g, ctx)
        roots = [
            -p3 / 4 + e / 2 + s1 / 4,
            -p3 / 4 + e / 2 - s1 / 4,
            -p3 / 4 - e / 2 + s2 / 4,
            -p3 / 4 - e / 2 - s2 / 4,
        ]
        worst = max(
            abs(q.eval(r, ctx)) / _quartic_root_residual_scale(q, r, ctx) for r in roots
        )
        if best_worst is None or worst < best_worst:
            best, best_worst = roots, worst
        if worst <= tol:
            return roots
    raise ResolventFailure(
        f"no resolvent root factored the quartic; best residual {mp.nstr(best_worst, 5)}"
    )


def select_quintic_root(quintic: MonicQuintic, candidates, ctx: PrecisionCtx):
    """Pick the quartic root that also satisfies the quintic.

    Returns (root, index, residuals).  The winner must beat the runner-up by
    a factor 10^(digits/4); anything less is reported as ambiguous rather
    than silently guessed.
    """
    mp = ctx.mp
    residuals = [abs(quintic.eval(cand, ctx)) for cand in candidates]
    scale = quintic.scale(ctx)
    low = min(residuals)
    winner = min(i for i, res in enumerate(residuals) if res <= 10 * low)
    others = [res for i, res in enumerate(residuals) if i != winner]
    runner_up = min(others)
    win_res = residuals[winner]
    ok_abs = win_res <= ctx.pow10(-(ctx.digits // 2)) * scale
    ok_sep = win_res * ctx.pow10(ctx.digits // 4) <= runner_up
    if not (ok_abs and ok_sep):
        raise AmbiguousSelection(
            "no quartic root decisively satisfies the quintic: residuals "
            + ", ".join(mp.nstr(r, 5) for r in residuals),
            residuals=residuals,
        )
    return candidates[winner], winner, residuals


def deflate_quintic(quintic: MonicQuintic, r1, ctx: PrecisionCtx) -> QuarticCoeffs:
    """Factor out a known root: the quartic left after dividing by (x - r1).

    Uses the direct coefficient formulas and cross-checks them against
    synthetic division.
    """
    m, n, p, q, r = (ctx.convert(v) for v in quintic.coeffs())
    r1 = ctx.convert(r1)
    scale = quintic.scale(ctx)
    if abs(quintic.eval(r1, ctx)) > ctx.pow10(-(ctx.digits // 2)) * scale:
        raise NotARoot("deflate_quintic called with a non-root")
    dd = m + r1
    cc = n + r1 * r1 + m * r1
    bb = p + r1 * n + r1**3 + m * r1 * r1
    aa = q + r1 * p + r1 * r1 * n + r1**4 + m * r1**3
    division = poly_deflate(quintic.as_poly(ctx), r1, ctx)
    tol = ctx.pow10(-ctx.digits + 15)
    for direct, divided in zip((aa, bb, cc, dd), division.coeffs[:4]):
        if abs(direct - divided) > tol * max(ctx.mpf(1), abs(direct)):
            raise CrossCheckError("deflation formulas disagree with synthetic division")
    return QuarticCoeffs(p3=dd, p2=cc, p1=bb, p0=aa)


class _VerificationFailure(Exception):
    pass


def _fifth_roots(value, ctx):
    mp = ctx.mp
    principal = pow_rational(value, 1, 5, ctx)
    omega = mp.exp(2j * mp.pi / 5)
    out = [principal]
    for _ in range(4):
        out.append(out[-1] * omega)
    return out


def _verify(quintic: MonicQuintic, roots, ctx, digits):
    residuals = tuple(abs(quintic.eval(x, ctx)) for x in roots)
    scale = quintic.scale(ctx)
    tol = ctx.pow10(-(digits // 2)) * scale
    if max(residuals) > tol:
        raise _VerificationFailure(f"root residuals exceed tolerance {ctx.mp.nstr(tol, 3)}")
    total = sum(roots, ctx.mpc(0))
    prod = ctx.mpc(1)
    for x in roots:
        prod = prod * x
    if abs(total + quintic.m) > tol or abs(prod + quintic.r) > tol:
        raise _VerificationFailure("Vieta identities violated")
    return residuals


def _solve_once(quintic: MonicQuintic, wctx: PrecisionCtx, base_digits: int, strategy: str) -> RootReport:
    stage = ["reduce"]
    try:
        return _solve_stages(quintic, wctx, base_digits, strategy, stage)
    except (_VerificationFailure, AmbiguousSelection, NearBranchPoint, PrecisionExhausted):
        raise
    except QuinticError as exc:
        raise StageError(stage[0], exc) from exc


def _solve_stages(quintic, wctx, base_digits, strategy, stage_holder):
    def stage(name):
        stage_holder[0] = name

    reduction = reduce_to_bring(quintic, wctx)
    rctx = reduction.ctx
    base = quintic.rebind(rctx)
    zero = rctx.mpf(0)

    if reduction.pure_radical == "quintic":
        stage("radical")
        shifted_roots = _fifth_roots(-reduction.B, rctx)
        roots = tuple(x - reduction.shift for x in shifted_roots)
        bring_sol = BringSolution(
            z=rctx.mpc(0), strategy=bring_mod.PURE_RADICAL, residual=zero, terms_or_steps=0
        )
        cand_res = (zero, zero, zero, zero)
    else:
        params = reduction.params
        shifted_q = base if reduction.shift == 0 else base.shifted(reduction.shift, rctx)
        if reduction.pure_radical == "bring_A":
            stage("radical")
            y = pow_rational(-reduction.B, 1, 5, rctx)
            bring_sol = BringSolution(
                z=rctx.mpc(0), strategy=bring_mod.PURE_RADICAL, residual=zero, terms_or_steps=0
            )
        elif reduction.pure_radical == "bring_B":
            stage("radical")
            y = rctx.mpc(0)
            bring_sol = BringSolution(
                z=rctx.mpc(0), strategy=bring_mod.PURE_RADICAL, residual=zero, terms_or_steps=0
            )
        else:
            stage("bring")
            bring_sol = solve_bring(reduction.s, rctx, strategy)
            y = reduction.quartic_root_scale * bring_sol.z

        stage("ferrari")
        tsh_quartic = QuarticCoeffs(p3=params.d, p2=params.c, p1=params.b, p0=params.a + y)
        candidates = ferrari_roots(tsh_quartic, rctx)
        stage("select")
        r1, _, cand_res_list = select_quintic_root(shifted_q, candidates, rctx)
        cand_res = tuple(cand_res_list)
        stage("deflate")
        rest = ferrari_roots(deflate_quintic(shifted_q, r1, rctx), rctx)
        roots = tuple(x - reduction.shift for x in [r1, *rest])

    stage("verify")
    residuals = _verify(base, roots, rctx, base_digits)
    return RootReport(
        roots=roots,
        residuals=residuals,
        bring=bring_sol,
        reduction=reduction,
        candidate_residuals=cand_res,
        precision_used=rctx.digits,
        shift_applied=reduction.shift,
    )


def solve_quintic(quintic: MonicQuintic, ctx: PrecisionCtx, strategy: str = "auto") -> RootReport:
    """All five roots of a monic quintic, in closed form, verified.

    Orchestrates reduction -> Bring root -> Ferrari -> selection ->
    deflation -> Ferrari, un-shifts if the reduction pre-shifted, and checks
    residuals and Vieta identities before returning.  Verification or
    selection trouble retries at 2x then 4x precision; structural failures
    propagate wrapped with their pipeline stage.
    """
    last = None
    for factor in (1, 2, 4):
        wctx = ctx if factor == 1 else ctx.escalated(factor)
        try:
            return _solve_once(quintic, wctx, ctx.digits, strategy)
        except (_VerificationFailure, AmbiguousSelection, NearBranchPoint) as exc:
            last = exc
    if isinstance(last, (AmbiguousSelection, NearBranchPoint)):
        raise StageError("select", last)
    raise PrecisionExhausted(f"verification still failing at 4x precision: {last}")
