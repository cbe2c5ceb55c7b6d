"""Reduction of a monic quintic to Bring-Jerrard form y^5 + A*y + B.

The quartic substitution x^4 + d*x^3 + c*x^2 + b*x + a + y is eliminated
against the quintic through a 5x5 determinant, and the parameters a, b, c, d
are solved so the y^4, y^3, y^2 coefficients of the transformed polynomial
vanish.  Every coefficient needed along the way is extracted numerically by
sampling the determinant at small integer nodes and interpolating with a
degree guard, so the structural facts the elimination relies on (the y^4
coefficient is affine in a, the y^3 coefficient is quadratic in d, its d^2
part is quadratic in alpha, ...) are verified at runtime instead of trusted.

Short closed forms for a and alpha are evaluated as independent cross-checks
of the sampled solves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CrossCheckError,
    DegenerateLeading,
    DegenerateTransform,
    PrecisionExhausted,
    ShiftLadderExhausted,
)
from .mpfield import PrecisionCtx, pow_rational, sqrt_principal
from .polyring import Poly, PolyMatrix5, det5, fit_coeffs

__all__ = [
    "MonicQuintic",
    "TschirnhausParams",
    "BringReduction",
    "build_matrix",
    "transformed_poly",
    "solve_a",
    "solve_alpha",
    "solve_eta_xi",
    "solve_d",
    "reduce_to_bring",
]

# Pre-shift ladder tried on degenerate eliminations, in order.
_SHIFT_LADDER = [(1, 0), (-1, 0), (0, 1), (0, -1), (2, 0), (-2, 0), (0, 2), (0, -2)]

# Branch choices pinned by the golden regression test: the sampled alpha / xi
# quadratics take the root matching the reference worked example, and solve_d
# takes this cardano_roots index.
_XI_BRANCH = -1
_D_INDEX = 0


@dataclass(frozen=True)
class MonicQuintic:
    """Coefficients of x^5 + m*x^4 + n*x^3 + p*x^2 + q*x + r."""

    m: object
    n: object
    p: object
    q: object
    r: object

    @staticmethod
    def make(ctx: PrecisionCtx, m, n, p, q, r) -> "MonicQuintic":
        return MonicQuintic(*(ctx.mpc(v) if isinstance(v, str) else ctx.convert(v) for v in (m, n, p, q, r)))

    def rebind(self, ctx: PrecisionCtx) -> "MonicQuintic":
        return MonicQuintic(*(ctx.convert(v) for v in self.coeffs()))

    def coeffs(self):
        return (self.m, self.n, self.p, self.q, self.r)

    def as_poly(self, ctx: PrecisionCtx) -> Poly:
        return Poly([self.r, self.q, self.p, self.n, self.m, ctx.mpc(1)])

    def eval(self, x, ctx: PrecisionCtx):
        x = ctx.convert(x)
        return ((((x + self.m) * x + self.n) * x + self.p) * x + self.q) * x + self.r

    def scale(self, ctx: PrecisionCtx):
        return max(ctx.mpf(1), *(abs(v) for v in self.coeffs()))

    def conjugate(self, ctx: PrecisionCtx) -> "MonicQuintic":
        mp = ctx.mp
        return MonicQuintic(*(mp.conj(ctx.convert(v)) for v in self.coeffs()))

    def shifted(self, t, ctx: PrecisionCtx) -> "MonicQuintic":
        """Coefficients of Q(x - t); roots move to root + t."""
        t = ctx.convert(t)
        # binomial expansion of (x - t)^k accumulated per original coefficient
        out = [ctx.mpc(0)] * 6
        src = [self.r, self.q, self.p, self.n, self.m, ctx.mpc(1)]
        for k, coeff in enumerate(src):
            row = [ctx.mpc(1)]
            for _ in range(k):
                nxt = [ctx.mpc(0)] * (len(row) + 1)
                for i, v in enumerate(row):
                    nxt[i] = nxt[i] - t * v
                    nxt[i + 1] = nxt[i + 1] + v
                row = nxt
            for i, v in enumerate(row):
                out[i] = out[i] + coeff * v
        return MonicQuintic(out[4], out[3], out[2], out[1], out[0])


@dataclass(frozen=True)
class TschirnhausParams:
    """Solved substitution parameters and the vanishing-check residuals."""

    a: object
    b: object
    c: object
    d: object
    alpha: object
    xi: object
    eta: object
    vanish_residuals: tuple


@dataclass(frozen=True)
class BringReduction:
    """Bring-Jerrard data: y^5 + A*y + B with s = -B/(-A)^(5/4).

    ``shift`` is subtracted from every root downstream when a pre-shift was
    needed; ``pure_radical`` marks reductions where the Bring step
    degenerates ("quintic": the input is a shifted pure fifth power;
    "bring_A": A ~ 0; "bring_B": B ~ 0).
    """

    A: object
    B: object
    s: object
    quartic_root_scale: object
    shift: object
    params: TschirnhausParams | None
    pure_radical: str | None
    precision_used: int
    ctx: PrecisionCtx


# ---------------------------------------------------------------------------
# Elimination matrix: the 25 entries, transcribed term by term.
# ---------------------------------------------------------------------------


def build_matrix(quintic: MonicQuintic, a, b, c, d, ctx: PrecisionCtx) -> PolyMatrix5:
    """The 5x5 elimination matrix; entries are degree<=1 polynomials in y."""
    m, n, p, q, r = (ctx.convert(v) for v in quintic.coeffs())
    a, b, c, d = (ctx.convert(v) for v in (a, b, c, d))
    one = ctx.mpc(1)
    m2 = m * m
    m3 = m2 * m
    m4 = m3 * m

    def C(v):
        return Poly([v])

    def L(v0, v1):
        return Poly([v0, v1])

    row1 = [L(a, one), C(b), C(c), C(d), C(one)]
    row2 = [C(r), L(q - a, -one), C(p - b), C(n - c), C(m - d)]
    row3 = [
        C(d * r - m * r),
        C(r - m * q + d * q),
        L(q - a - m * p + d * p, -one),
        C(p - b - m * n + d * n),
        C(n + d * m - m2 - c),
    ]
    row4 = [
        C(-m2 * r - c * r + n * r + d * m * r),
        C(m * r - d * r - m2 * q - c * q + d * m * q + n * q),
        C(n * p - r + d * m * p - d * q + m * q - m2 * p - c * p),
        L(a + d * m * n - d * p - m2 * n - q + n * n + m * p - c * n, one),
        C(-c * m - m3 + b - p + d * m2 + 2 * m * n - d * n),
    ]
    row5 = [
        C(b * r - m3 * r - d * n * r + d * m2 * r + 2 * m * n * r - p * r - c * m * r),
        C(b * q - c * m * q - n * r - d * m * r - d * n * q + c * r + m2 * r - m3 * q + 2 * m * n * q - p * q + d * m2 * q),
        C(c * q + 2 * m * n * p - d * n * p - p * p + b * p - n * q + d * m2 * p - m * r - d * m * q - c * m * p + m2 * q - m3 * p + d * r),
        C(-d * m * p + d * m2 * n + c * p + d * q + 2 * m * n * n - c * m * n - m3 * n - 2 * n * p - m * q + m2 * p + b * n - d * n * n + r),
        L(b * m - 2 * m * p + q + c * n - 2 * d * m * n - a + 3 * m2 * n - c * m2 + d * m3 - n * n - m4 + d * p, -one),
    ]
    return PolyMatrix5([row1, row2, row3, row4, row5])


def transformed_poly(quintic: MonicQuintic, a, b, c, d, ctx: PrecisionCtx) -> Poly:
    """Monic quintic in y produced by the elimination determinant."""
    det = det5(build_matrix(quintic, a, b, c, d, ctx), ctx)
    lead = det.coeff(5)
    # only the diagonal carries y, so a healthy determinant has y^5
    # coefficient exactly -1: an absolute test cannot false-positive on
    # large-coefficient quintics the way a largest-coefficient-relative
    # test does
    if abs(lead) <= ctx.pow10(-(ctx.digits // 2)):
        raise DegenerateTransform("elimination determinant lost its y^5 term")
    inv = 1 / lead
    return Poly([v * inv for v in det.coeffs])


# ---------------------------------------------------------------------------
# Short closed forms, used as independent cross-checks of the sampled
# solves (never as the normative computation).
# ---------------------------------------------------------------------------


def _closed_form_a(quintic, b, c, d, ctx):
    m, n, p, q, r = (ctx.convert(v) for v in quintic.coeffs())
    b, c, d = (ctx.convert(v) for v in (b, c, d))
    m2 = m * m
    m3 = m2 * m
    m4 = m3 * m
    f = ctx.mpf(1) / 5
    return (
        f * d * m3
        + f * b * m
        - 3 * f * d * m * n
        - 2 * f * n * n
        + 4 * f * q
        - f * c * m2
        + 2 * f * c * n
        - 4 * f * m * p
        + 4 * f * m2 * n
        + 3 * f * d * p
        - f * m4
    )


def _closed_form_alpha(quintic, ctx):
    """Quadratic-formula value of alpha; valid when |2m^2 - 5n| is healthy."""
    m, n, p, q, r = (ctx.convert(v) for v in quintic.coeffs())
    m2 = m * m
    m3 = m2 * m
    m4 = m3 * m
    m5 = m4 * m
    n2 = n * n
    n3 = n2 * n
    p2 = p * p
    rad = (
        -40 * q * m4
        + 80 * q * m2
        + 40 * m3 * p
        + 60 * n * p2
        - 15 * n2 * m4
        - 190 * m * p * n
        - 200 * n * q
        - 15 * n2 * m2
        + 400 * q * q
        + 60 * n3 * m2
        - 100 * n2 * q
        - 80 * m * p * n2
        + 200 * m2 * r
        + 225 * p2
        - 120 * m3 * r
        + 40 * m5 * p
        + 265 * m2 * p2
        - 40 * q * m3
        - 80 * m4 * p
        - 20 * q * m * n
        + 360 * m2 * p * n
        + 30 * n2 * m3
        + 600 * p * q
        - 510 * m * p2
        - 120 * n3 * m
        - 680 * m * p * q
        + 260 * m2 * n * q
        + 300 * m * n * r
        - 500 * n * r
        + 80 * p * n2
        - 170 * m3 * p * n
        + 60 * n3
    )
    num = (
        -13 * n * m
        - 10 * n2
        + 4 * m3
        + 20 * q
        + 17 * m2 * n
        - 4 * m4
        + 15 * p
        - 17 * m * p
        + sqrt_principal(rad, ctx)
    )
    return num / (2 * (2 * m2 - 5 * n))


# ---------------------------------------------------------------------------
# Sampling machinery.
# ---------------------------------------------------------------------------


class _Reducer:
    """Shared sampling state for one quintic at one precision."""

    def __init__(self, quintic: MonicQuintic, ctx: PrecisionCtx):
        self.q = quintic.rebind(ctx)
        self.ctx = ctx
        self.tp_calls = 0
        self.coeff_scale = self.q.scale(ctx)

    def tp(self, a, b, c, d) -> Poly:
        self.tp_calls += 1
        return transformed_poly(self.q, a, b, c, d, self.ctx)

    def _floor(self, polys, slot):
        """(reference scale, noise floor) for fits over coefficient ``slot``.

        Coefficient k of the transformed quintic is a sum of products of
        5 - k matrix-entry constants, so its characteristic magnitude is
        E**(5-k) where E is the entry scale; E is recovered from the sampled
        polynomials themselves as max |c_k|^(1/(5-k)).  Values below
        10^(-digits/2) of that reference count as identically zero, matching
        the vanishing thresholds used everywhere else; without the floor,
        probe points where a quantity vanishes identically would pit noise
        against noise in the degree guard.
        """
        ctx = self.ctx
        entry_scale = ctx.mpf(1)
        for poly in polys:
            for k in range(5):
                mag = abs(poly.coeff(k))
                if mag > 1:
                    entry_scale = max(entry_scale, ctx.mp.root(mag, 5 - k))
        ref = entry_scale ** (5 - slot)
        return ref, ctx.pow10(-(ctx.digits // 2)) * ref

    def solve_a(self, b, c, d):
        """The unique a killing the y^4 coefficient (affine sampling + guard)."""
        ctx = self.ctx
        polys = [self.tp(k, b, c, d) for k in (0, 1, 2)]
        _, floor = self._floor(polys, 4)
        samples = list(zip((0, 1, 2), (p.coeff(4) for p in polys)))
        scale = max(floor, *(abs(v) for _, v in samples))
        c0, c1 = fit_coeffs(samples, 1, ctx, scale=scale)
        a = -c0 / c1
        ref = _closed_form_a(self.q, b, c, d, ctx)
        if abs(a - ref) > ctx.pow10(-ctx.digits + 15) * max(1, abs(a)):
            raise CrossCheckError(
                f"sampled a disagrees with its closed form: {ctx.mp.nstr(abs(a - ref), 5)}"
            )
        return a

    def poly_at(self, alpha, eta, xi, d) -> Poly:
        """Transformed poly at b = alpha*d + xi, c = d + eta, a solved."""
        ctx = self.ctx
        alpha, eta, xi, d = (ctx.convert(v) for v in (alpha, eta, xi, d))
        b = alpha * d + xi
        c = d + eta
        a = self.solve_a(b, c, d)
        return self.tp(a, b, c, d)

    def poly3_in_d(self, alpha, eta, xi):
        """([d^0, d^1, d^2] of the y^3 coefficient in d, reference scale)."""
        polys = [self.poly_at(alpha, eta, xi, k) for k in (0, 1, 2, 3)]
        ref, floor = self._floor(polys, 3)
        samples = list(zip((0, 1, 2, 3), (p.coeff(3) for p in polys)))
        scale = max(floor, *(abs(v) for _, v in samples))
        return fit_coeffs(samples, 2, self.ctx, scale=scale), ref


def _root_of_sampled_poly(coeffs, ctx, branch, cardano_index, what, ref=1):
    """Deterministic root of a sampled polynomial, degrading degree gracefully.

    ``coeffs`` is [c0, c1, ..., ck] lowest power first.  Leading coefficients
    that vanish relative to the sampled scale (or to the reference scale of
    the polynomials they came from) are dropped: the equation is still
    solvable as long as anything nonzero is left in front of the constant
    term.
    """
    scale = max(ctx.mpf(1) * ref, *(abs(v) for v in coeffs))
    tol = ctx.pow10(-(ctx.digits // 2)) * scale
    live = len(coeffs) - 1
    while live > 0 and abs(coeffs[live]) <= tol:
        live -= 1
    if live == 0:
        if abs(coeffs[0]) <= tol:
            return ctx.mpc(0)  # identically zero: any value works
        raise DegenerateLeading(f"{what}: every coefficient above the constant vanished")
    if live == 1:
        return -coeffs[0] / coeffs[1]
    if live == 2:
        c0, c1, c2 = coeffs[0], coeffs[1], coeffs[2]
        disc = sqrt_principal(c1 * c1 - 4 * c2 * c0, ctx)
        return (-c1 + branch * disc) / (2 * c2)
    from .closedform import cardano_roots  # closedform imports this module

    roots = cardano_roots(coeffs[3], coeffs[2], coeffs[1], coeffs[0], ctx)
    return roots[cardano_index]


def solve_a(quintic: MonicQuintic, b, c, d, ctx: PrecisionCtx):
    """a making the y^4 coefficient of the transformed polynomial vanish."""
    return _Reducer(quintic, ctx).solve_a(ctx.convert(b), ctx.convert(c), ctx.convert(d))


def solve_alpha(quintic: MonicQuintic, ctx: PrecisionCtx):
    """Root of the quadratic that the d^2 part of the y^3 coefficient forms in alpha.

    Sampled with eta = xi = 0 over a (d, alpha) grid with degree guards on
    both directions, then cross-checked against its closed form when
    the quadratic's leading coefficient is healthy.
    """
    red = _Reducer(quintic, ctx)
    return _solve_alpha_inner(red)


def _solve_alpha_inner(red: _Reducer):
    ctx = red.ctx
    samples = []
    ref = ctx.mpf(1)
    for anode in (0, 1, 2, 3):
        dcoeffs, dref = red.poly3_in_d(anode, 0, 0)
        samples.append((anode, dcoeffs[2]))
        ref = max(ref, dref)
    floor = ctx.pow10(-(ctx.digits // 2)) * ref
    q0, q1, q2 = fit_coeffs(samples, 2, ctx, scale=max(floor, *(abs(v) for _, v in samples)))

    scale = max(ref, abs(q0), abs(q1), abs(q2))
    tol = ctx.pow10(-(ctx.digits // 2)) * scale
    alpha = _root_of_sampled_poly([q0, q1, q2], ctx, -1, 0, "alpha quadratic", ref=ref)

    if abs(q2) > tol:
        m, n = red.q.m, red.q.n
        lead = 2 * m * m - 5 * n
        if abs(lead) > ctx.pow10(-(ctx.digits // 2)) * max(1, abs(m) ** 2, abs(n)):
            check = _closed_form_alpha(red.q, ctx)
            # a nearly-double alpha root is ill conditioned: coefficient
            # noise is amplified by 1/sqrt(disc), so grant that much slack on
            # top of the nominal relative tolerance
            disc_mag = abs(q1 * q1 - 4 * q2 * q0)
            noise = ctx.pow10(-ctx.digits - ctx.guard_digits + 8) * scale
            amplified = noise * (1 + abs(alpha)) ** 2 / max(
                ctx.mp.sqrt(disc_mag), noise, ctx.pow10(-2 * ctx.digits)
            )
            tol_cc = ctx.pow10(-ctx.digits + 15) * max(1, abs(alpha)) + amplified
            if abs(alpha - check) > tol_cc:
                raise CrossCheckError(
                    "sampled alpha disagrees with its closed form: "
                    f"{ctx.mp.nstr(abs(alpha - check), 5)}"
                )
    return alpha


def solve_eta_xi(quintic: MonicQuintic, alpha, ctx: PrecisionCtx):
    """(eta, xi) making the y^3 coefficient vanish identically in d.

    The d^1 part is affine in (eta, xi); solving it for eta and substituting
    into the d^0 part leaves a quadratic in xi.
    """
    red = _Reducer(quintic, ctx)
    return _solve_eta_xi_inner(red, ctx.convert(alpha))


def _solve_eta_xi_inner(red: _Reducer, alpha):
    ctx = red.ctx
    p1 = {}
    ref = ctx.mpf(1)
    for eta, xi in ((0, 0), (1, 0), (0, 1), (1, 1)):
        dcoeffs, dref = red.poly3_in_d(alpha, eta, xi)
        p1[(eta, xi)] = dcoeffs[1]
        ref = max(ref, dref)
    u0 = p1[(0, 0)]
    u_eta = p1[(1, 0)] - u0
    u_xi = p1[(0, 1)] - u0
    floor = ctx.pow10(-(ctx.digits // 2)) * ref
    scale = max(floor, abs(u0), abs(u_eta), abs(u_xi))
    predicted = u0 + u_eta + u_xi
    if abs(p1[(1, 1)] - predicted) > ctx.pow10(-(ctx.digits // 2)) * scale:
        from .errors import DegreeGuardFailure

        raise DegreeGuardFailure("d^1 part of the y^3 coefficient is not affine in (eta, xi)")

    if abs(u_eta) > floor:
        def pair_of(t):  # eta eliminated; t is xi
            return -(u0 + u_xi * t) / u_eta, t
    elif abs(u_xi) > floor:
        def pair_of(t):  # xi eliminated instead; t is eta
            return t, -(u0 + u_eta * t) / u_xi
    elif abs(u0) <= floor:
        def pair_of(t):  # d^1 part already vanishes identically; pin eta = 0
            return ctx.mpc(0), t
    else:
        raise DegenerateLeading("d^1 part of the y^3 coefficient is a nonzero constant")

    # d^0 part of the y^3 coefficient equals its value at d = 0.
    polys = [red.poly_at(alpha, *pair_of(ctx.mpc(tn)), 0) for tn in (0, 1, 2, 3)]
    sref, sfloor = red._floor(polys, 3)
    samples = list(zip((0, 1, 2, 3), (p.coeff(3) for p in polys)))
    s0, s1, s2 = fit_coeffs(samples, 2, ctx, scale=max(sfloor, *(abs(v) for _, v in samples)))
    t_best = _root_of_sampled_poly([s0, s1, s2], ctx, _XI_BRANCH, 0, "xi quadratic", ref=sref)
    return pair_of(t_best)


def solve_d(quintic: MonicQuintic, alpha, eta, xi, ctx: PrecisionCtx):
    """Root of the cubic that the y^2 coefficient forms in d."""
    red = _Reducer(quintic, ctx)
    return _solve_d_inner(red, *(ctx.convert(v) for v in (alpha, eta, xi)))


def _solve_d_inner(red: _Reducer, alpha, eta, xi):
    ctx = red.ctx
    polys = [red.poly_at(alpha, eta, xi, k) for k in (0, 1, 2, 3, 4)]
    ref, floor = red._floor(polys, 2)
    samples = list(zip((0, 1, 2, 3, 4), (p.coeff(2) for p in polys)))
    t0, t1, t2, t3 = fit_coeffs(samples, 3, ctx, scale=max(floor, *(abs(v) for _, v in samples)))
    return _root_of_sampled_poly([t0, t1, t2, t3], ctx, -1, _D_INDEX, "d cubic", ref=ref)


# ---------------------------------------------------------------------------
# Orchestration.
# ---------------------------------------------------------------------------


def _depressed(quintic: MonicQuintic, ctx: PrecisionCtx):
    """Shift removing the x^4 term; returns (depressed quintic, shift t)."""
    t = quintic.m / 5
    return quintic.shifted(t, ctx), t


def _root_scale(quintic: MonicQuintic, ctx: PrecisionCtx):
    """Cauchy-style bound on root magnitude, used to weigh coefficient slots."""
    mp = ctx.mp
    return max(
        ctx.mpf(1),
        abs(quintic.m),
        mp.sqrt(abs(quintic.n)),
        mp.root(abs(quintic.p), 3),
        mp.root(abs(quintic.q), 4),
        mp.root(abs(quintic.r), 5),
    )


def _attempt(red: _Reducer):
    """One full parameter solve at fixed precision on an already-shifted quintic."""
    ctx = red.ctx
    alpha = _solve_alpha_inner(red)
    eta, xi = _solve_eta_xi_inner(red, alpha)
    d = _solve_d_inner(red, alpha, eta, xi)
    b = alpha * d + xi
    c = d + eta
    a = red.solve_a(b, c, d)
    poly = red.tp(a, b, c, d)
    A = poly.coeff(1)
    B = poly.coeff(0)
    norm = max(ctx.mpf(1), abs(A), abs(B))
    residuals = (
        abs(poly.coeff(4)) / norm,
        abs(poly.coeff(3)) / norm,
        abs(poly.coeff(2)) / norm,
    )
    params = TschirnhausParams(a=a, b=b, c=c, d=d, alpha=alpha, xi=xi, eta=eta, vanish_residuals=residuals)
    return params, A, B


def reduce_to_bring(quintic: MonicQuintic, ctx: PrecisionCtx) -> BringReduction:
    """Full reduction to y^5 + A*y + B = 0 with s = -B/(-A)^(5/4).

    Degenerate eliminations trigger a deterministic pre-shift ladder; failed
    vanishing checks trigger precision escalation (x2 then x4).  Shifted pure
    fifth powers, for which no quartic substitution can work, exit early as
    pure-radical reductions, as do reductions with A ~ 0 or B ~ 0.
    """
    base = quintic

    # a shifted pure power never admits the elimination: 2m^2-5n is shift
    # invariant and the alpha equation becomes 0 = nonzero
    dep, tdep = _depressed(base.rebind(ctx), ctx)
    rscale = _root_scale(base.rebind(ctx), ctx)
    dtol = ctx.pow10(-ctx.digits + 10)
    if (
        abs(dep.n) <= dtol * rscale**2
        and abs(dep.p) <= dtol * rscale**3
        and abs(dep.q) <= dtol * rscale**4
    ):
        return BringReduction(
            A=ctx.mpc(0),
            B=dep.r,
            s=None,
            quartic_root_scale=None,
            shift=tdep,
            params=None,
            pure_radical="quintic",
            precision_used=ctx.digits,
            ctx=ctx,
        )

    last_exc = None
    for factor in (1, 2, 4):
        wctx = ctx if factor == 1 else ctx.escalated(factor)
        for t_re, t_im in [(0, 0)] + _SHIFT_LADDER:
            t = wctx.mpc(t_re, t_im)
            shifted = base.rebind(wctx) if t == 0 else base.rebind(wctx).shifted(t, wctx)
            red = _Reducer(shifted, wctx)
            try:
                params, A, B = _attempt(red)
            except DegenerateLeading as exc:
                last_exc = exc
                continue
            tol = wctx.pow10(-(wctx.digits // 2))
            if max(params.vanish_residuals) > tol:
                last_exc = PrecisionExhausted(
                    f"vanishing residuals {[wctx.mp.nstr(v, 3) for v in params.vanish_residuals]} "
                    f"at digits={wctx.digits}"
                )
                break  # escalate precision rather than walk the ladder
            return _finish_reduction(params, A, B, t, red, wctx)
        else:
            if isinstance(last_exc, DegenerateLeading):
                raise ShiftLadderExhausted(
                    f"every pre-shift left the elimination degenerate: {last_exc}"
                )
    if isinstance(last_exc, PrecisionExhausted):
        raise last_exc
    raise PrecisionExhausted(f"reduction failed after escalation: {last_exc}")


def _finish_reduction(params, A, B, shift, red: _Reducer, ctx: PrecisionCtx) -> BringReduction:
    mp = ctx.mp
    tol = ctx.pow10(-(ctx.digits // 2))
    pure = None
    s = None
    scale4 = None
    # degeneracy scales follow the y-root magnitude: A ~ y^4, B ~ y^5
    if abs(A) <= tol * max(1, mp.root(abs(B), 5) ** 4):
        pure = "bring_A"
    else:
        scale4 = pow_rational(-A, 1, 4, ctx)
        s = -B / pow_rational(-A, 5, 4, ctx)
        if abs(B) <= tol * max(1, mp.root(abs(A), 4) ** 5):
            pure = "bring_B"
    return BringReduction(
        A=A,
        B=B,
        s=s,
        quartic_root_scale=scale4,
        shift=shift,
        params=params,
        pure_radical=pure,
        precision_used=ctx.digits,
        ctx=ctx,
    )
