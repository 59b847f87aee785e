"""Bound states of the hyperbolic two-term potential.

The potential is V(r) = A/cosh^2(alpha r) + B/sinh^2(alpha r) on r > 0,
with an attractive well A < 0 and repulsive core B > 0 in the cases of
physical interest.  For l > 0 the centrifugal term is approximated by
1/r^2 ~ alpha^2 [4 d0 + 1/sinh^2(alpha r)], d0 = 1/12, which folds the
angular momentum into a shifted core strength B1 and an additive energy
offset.  The reduced problem

    u'' + [K1 - A1/cosh^2(alpha r) - B1/sinh^2(alpha r)] u = 0
    A1 = 2 mu A / hbar^2,  B1 = 2 mu B / hbar^2 + l(l+1) alpha^2
    K1 = 2 mu E / hbar^2 - 4 l(l+1) alpha^2 d0

is solved by u = cosh^gamma * sinh^beta * F with exponents

    gamma = (1 +/- sqrt(1 - 4 A1/alpha^2)) / 2
    beta  = (1 -/+ sqrt(1 + 4 B1/alpha^2)) / 2

and quantization K1 = -alpha^2 (gamma + beta + 2n)^2.  Two sign choices
circulate: the "paper" pair (gamma+, beta-) underlying the published
closed-form energy, and the "regular" pair (gamma-, beta+) whose radial
functions are finite at the origin and square-integrable.  Both are
implemented; an independent shooting solver (see oracle) shows the
regular pair carries the true bound spectrum, and the disagreement is
surfaced rather than hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .aim import AimProblem
from .errors import DomainError
from .jets import SeriesJet, jet_div, jet_reciprocal, jet_scale
from .oracle import RadialProblem
from .specfun import hyp2f1_terminating, pochhammer

__all__ = [
    "D0",
    "HBARC_EV_ANG",
    "EnergyLevel",
    "LevelCount",
    "NRContext",
    "PTPotential",
    "SpectralParams",
    "centrifugal_approx_residual",
    "energy_from_k1",
    "energy_nr",
    "k1_from_energy",
    "level_count",
    "potential_value",
    "pt_aim_problem",
    "pt_radial_problem",
    "spectral_params",
    "wavefunction_nr",
]

D0 = 1.0 / 12.0
HBARC_EV_ANG = 1973.29

# Flag vocabulary for EnergyLevel diagnostics.
FLAG_DISCRIMINANT_EDGE = "discriminant_edge"
FLAG_BEYOND_NMAX = "beyond_nmax"
FLAG_ORACLE_MISMATCH = "oracle_mismatch"

_BRANCHES = ("paper", "regular")


@dataclass(frozen=True)
class PTPotential:
    """Two-term hyperbolic potential: A/cosh^2(alpha r) + B/sinh^2(alpha r).

    A and B carry energy units, alpha inverse length.  A < 0 with B >= 0
    is the physically expected shape; other signs are legal (special
    cases set B = 0) and merely reported via shape_notes.  Every routine
    depends on alpha only through even combinations or |alpha|, so the
    sign of alpha is immaterial; only alpha = 0 is rejected.
    """

    A: float
    B: float
    alpha: float

    def __post_init__(self):
        if not abs(self.alpha) > 0.0 or not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be nonzero and finite, got {self.alpha!r}")

    def shape_notes(self) -> tuple[str, ...]:
        notes = []
        if self.A >= 0.0:
            notes.append("A >= 0: no attractive well")
        if self.B < 0.0:
            notes.append("B < 0: attractive core, origin behavior changes")
        return tuple(notes)


@dataclass(frozen=True)
class NRContext:
    """Reduced mass and unit constants for the nonrelativistic problem.

    mu is the reduced mass in energy units (e.g. eV via amu conversion),
    hbar_c the conversion constant in energy*length (1973.29 eV*Angstrom
    by default; 1.0 recovers natural units).  d0 is the centrifugal
    approximation constant, fixed at 1/12 by convention.
    """

    mu: float
    hbar_c: float = HBARC_EV_ANG
    d0: float = D0

    def __post_init__(self):
        if not self.mu > 0.0:
            raise DomainError(f"reduced mass must be positive, got {self.mu!r}")
        if not self.hbar_c > 0.0:
            raise DomainError(f"hbar_c must be positive, got {self.hbar_c!r}")

    @classmethod
    def natural(cls, mu: float) -> "NRContext":
        return cls(mu=mu, hbar_c=1.0)


@dataclass(frozen=True)
class SpectralParams:
    """Exponent pair and scaled strengths for one (potential, l, branch)."""

    alpha: float
    a1: float
    b1: float
    gamma: float
    beta: float
    branch: str

    def k1(self, n: int) -> float:
        """Quantized scaled energy K1 = -alpha^2 (gamma + beta + 2n)^2."""
        if n < 0:
            raise DomainError(f"level index must be >= 0, got {n}")
        s = self.gamma + self.beta + 2.0 * n
        return -(self.alpha**2) * s * s

    def k2_from_k1(self, k1: float) -> float:
        """Shifted spectral constant used by the iterative engine."""
        return k1 + self.alpha**2 * (self.gamma + self.beta) ** 2

    def bound_possible(self, n: int) -> bool:
        """Decay at infinity needs gamma + beta + 2n < 0 (regular pair)."""
        return self.gamma + self.beta + 2.0 * n < 0.0


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    l: int
    E: float
    flags: frozenset = frozenset()


class LevelCount:
    """Result of the bound-level count: zeta, n_max = floor(zeta), note."""

    __slots__ = ("zeta", "n_max", "note")

    def __init__(self, zeta: float, n_max: int, note: Optional[str]):
        self.zeta = zeta
        self.n_max = n_max
        self.note = note

    def __iter__(self):
        yield self.zeta
        yield self.n_max

    def __repr__(self):
        return f"LevelCount(zeta={self.zeta!r}, n_max={self.n_max!r}, note={self.note!r})"


def potential_value(pot: PTPotential, r: float) -> float:
    """V(r) for r > 0; at r = 0 only the B = 0 case is finite."""
    if r < 0.0:
        raise DomainError(f"radius must be nonnegative, got {r!r}")
    if r == 0.0:
        if pot.B != 0.0:
            raise DomainError("potential is singular at r = 0 when B != 0")
        return pot.A
    x = pot.alpha * r
    return pot.A / math.cosh(x) ** 2 + pot.B / math.sinh(x) ** 2


def centrifugal_approx_residual(l: int, alpha: float, r: float) -> float:
    """Error of the centrifugal substitution, per unit l(l+1) alpha^2.

    Returns 1/(alpha r)^2 - [4 d0 + 1/sinh^2(alpha r)].  The limit at
    alpha r -> 0 is exactly 0; the leading behavior is -(alpha r)^2/15,
    so the substitution is only trustworthy for small alpha r.
    """
    if l < 1:
        raise DomainError(f"centrifugal term needs l >= 1, got {l}")
    if not r > 0.0:
        raise DomainError(f"radius must be positive, got {r!r}")
    x = alpha * r
    if x < 0.1:
        # Direct evaluation loses all significant digits here; use the
        # Laurent tail of 1/sinh^2, which is at machine accuracy for
        # x < 0.1.
        x2 = x * x
        return x2 * (-1.0 / 15.0 + x2 * (2.0 / 189.0 - x2 / 675.0))
    return 1.0 / (x * x) - 4.0 * D0 - 1.0 / math.sinh(x) ** 2


def _scaled_strengths(pot: PTPotential, ctx: NRContext, l: int) -> tuple[float, float]:
    if l < 0:
        raise DomainError(f"angular momentum must be >= 0, got {l}")
    two_mu = 2.0 * ctx.mu / ctx.hbar_c**2
    a1 = two_mu * pot.A
    b1 = two_mu * pot.B + l * (l + 1) * pot.alpha**2
    return a1, b1


def spectral_params(
    pot: PTPotential, ctx: NRContext, l: int, branch: str = "paper"
) -> SpectralParams:
    """Exponents (gamma, beta) for the chosen sign branch.

    "paper" selects (gamma+, beta-): the combination behind the
    published energy formula.  "regular" selects (gamma-, beta+): the
    origin-regular, normalizable combination the shooting solver
    confirms as the actual bound spectrum.
    """
    if branch not in _BRANCHES:
        raise DomainError(f"branch must be one of {_BRANCHES}, got {branch!r}")
    a1, b1 = _scaled_strengths(pot, ctx, l)
    alpha2 = pot.alpha**2
    disc_g = 1.0 - 4.0 * a1 / alpha2
    disc_b = 1.0 + 4.0 * b1 / alpha2
    if disc_g < 0.0:
        raise DomainError(f"well-depth discriminant negative: {disc_g!r}")
    if disc_b < 0.0:
        raise DomainError(f"core-strength discriminant negative: {disc_b!r}")
    root_g = math.sqrt(disc_g)
    root_b = math.sqrt(disc_b)
    if branch == "paper":
        gamma = 0.5 * (1.0 + root_g)
        beta = 0.5 * (1.0 - root_b)
    else:
        gamma = 0.5 * (1.0 - root_g)
        beta = 0.5 * (1.0 + root_b)
    return SpectralParams(alpha=pot.alpha, a1=a1, b1=b1, gamma=gamma, beta=beta, branch=branch)


def k1_from_energy(ctx: NRContext, alpha: float, l: int, energy: float) -> float:
    """Scaled energy: K1 = 2 mu E / hbar^2 - 4 l(l+1) alpha^2 d0."""
    return 2.0 * ctx.mu * energy / ctx.hbar_c**2 - 4.0 * l * (l + 1) * alpha**2 * ctx.d0


def energy_from_k1(ctx: NRContext, alpha: float, l: int, k1: float) -> float:
    return (ctx.hbar_c**2 / (2.0 * ctx.mu)) * (k1 + 4.0 * l * (l + 1) * alpha**2 * ctx.d0)


_EDGE_TOL = 1e-12


def energy_nr(
    pot: PTPotential, ctx: NRContext, n: int, l: int, branch: str = "paper"
) -> EnergyLevel:
    """Closed-form level via the published bracket expression.

    E = (2 alpha^2 hbar^2 / mu) [ l(l+1) d0 - (n + 1/2
        + (1/4) sqrt(1 - 8 mu A/(alpha hbar)^2)
        - (1/4) sqrt((2l+1)^2 + 8 mu B/(alpha hbar)^2) )^2 ]

    branch="regular" flips the signs of both square roots, matching the
    origin-regular exponent pair.  The value is computed directly from
    this expression (not through SpectralParams) so the algebraic
    equivalence with the quantized K1 route stays an actual test.
    """
    if branch not in _BRANCHES:
        raise DomainError(f"branch must be one of {_BRANCHES}, got {branch!r}")
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    if l < 0:
        raise DomainError(f"angular momentum must be >= 0, got {l}")
    ah = (pot.alpha * ctx.hbar_c) ** 2
    disc_a = 1.0 - 8.0 * ctx.mu * pot.A / ah
    disc_b = (2.0 * l + 1.0) ** 2 + 8.0 * ctx.mu * pot.B / ah
    flags = set()
    for disc in (disc_a, disc_b):
        if disc < 0.0:
            raise DomainError(f"square-root argument negative: {disc!r}")
        if disc <= _EDGE_TOL:
            flags.add(FLAG_DISCRIMINANT_EDGE)
    sign = 1.0 if branch == "paper" else -1.0
    bracket = n + 0.5 + sign * 0.25 * (math.sqrt(disc_a) - math.sqrt(disc_b))
    scale = 2.0 * pot.alpha**2 * ctx.hbar_c**2 / ctx.mu
    energy = scale * (l * (l + 1) * ctx.d0 - bracket * bracket)
    if n >= level_count(pot, ctx, l).n_max:
        flags.add(FLAG_BEYOND_NMAX)
    return EnergyLevel(n=n, l=l, E=energy, flags=frozenset(flags))


def level_count(pot: PTPotential, ctx: NRContext, l: int) -> LevelCount:
    """Bound-level budget zeta and n_max = floor(zeta).

    zeta = (1/4) sqrt(1 + 8 mu B/(alpha hbar)^2)
         - (1/4) sqrt(1 - 8 mu A/(alpha hbar)^2)
         - 1/2 + sqrt(l(l+1) d0)

    as printed in the source formula; note the l-dependence enters only
    through the last term here, unlike the energy bracket.  zeta <= 0
    reports n_max = 0 with a diagnostic note.
    """
    if l < 0:
        raise DomainError(f"angular momentum must be >= 0, got {l}")
    ah = (pot.alpha * ctx.hbar_c) ** 2
    disc_a = 1.0 - 8.0 * ctx.mu * pot.A / ah
    disc_b = 1.0 + 8.0 * ctx.mu * pot.B / ah
    if disc_a < 0.0 or disc_b < 0.0:
        raise DomainError("square-root argument negative in level count")
    zeta = (
        0.25 * math.sqrt(disc_b)
        - 0.25 * math.sqrt(disc_a)
        - 0.5
        + math.sqrt(l * (l + 1) * ctx.d0)
    )
    if zeta <= 0.0:
        return LevelCount(zeta, 0, "zeta <= 0: no bound level predicted by the count")
    return LevelCount(zeta, math.floor(zeta), None)


_ARGUMENTS = ("linear", "squared")


def wavefunction_nr(
    pot: PTPotential,
    ctx: NRContext,
    n: int,
    l: int,
    r: float,
    branch: str = "regular",
    argument: str = "linear",
) -> float:
    """Unnormalized radial amplitude u(r) (caller normalizes numerically).

    u = 2^n (-1)^n poch(c, n) cosh^gamma(alpha r) sinh^beta(alpha r)
        * 2F1(-n, beta + gamma + n; c; z)

    argument="linear" evaluates the published form, z = -sinh(alpha r)
    with c = beta + 1.  argument="squared" evaluates z = -sinh^2(alpha r)
    with c = beta + 1/2, the variant that actually solves the radial
    equation (the companion relativistic expressions use the squared
    argument): see the residual diagnostics in the test suite.  The
    branch switch selects the exponent pair as in spectral_params; node
    counts and square-integrability hold on the regular pair.
    """
    if argument not in _ARGUMENTS:
        raise DomainError(f"argument must be one of {_ARGUMENTS}, got {argument!r}")
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    if not r > 0.0:
        raise DomainError(f"radius must be positive, got {r!r}")
    params = spectral_params(pot, ctx, l, branch)
    if params.beta < 0.0 and r < 1e-8 / abs(pot.alpha):
        raise DomainError(
            "divergent-exponent branch evaluated inside the origin cutoff"
        )
    x = abs(pot.alpha) * r
    sh = math.sinh(x)
    if argument == "linear":
        c = params.beta + 1.0
        z = -sh
    else:
        c = params.beta + 0.5
        z = -sh * sh
    poly = hyp2f1_terminating(n, params.beta + params.gamma + n, c, z)
    prefactor = 2.0**n * (-1.0) ** n * pochhammer(c, n)
    return prefactor * math.cosh(x) ** params.gamma * sh**params.beta * poly


def _potential_minimum_z(a1: float, b1: float) -> float:
    # Stationary point of A1/cosh^2 + B1/sinh^2 solves tanh^4 = B1/|A1|;
    # outside the regime where that exists, fall back to z = 1.
    if a1 < 0.0 and 0.0 < b1 < -a1:
        t = (b1 / -a1) ** 0.25
        return t / math.sqrt(1.0 - t * t)
    return 1.0


def pt_aim_problem(
    pot: PTPotential,
    ctx: NRContext,
    l: int,
    depth: int,
    branch: str = "paper",
    z0: Optional[float] = None,
) -> AimProblem:
    """Iterative-engine formulation of the reduced radial equation.

    In the variable z = sinh(alpha r) the factored equation reads

        F'' + [((2 gamma + 1) z^2 + 2 beta (z^2 + 1)) / (z (z^2 + 1))] F'
            + [K2 / (alpha^2 (1 + z^2))] F = 0,
        K2 = K1 + alpha^2 (gamma + beta)^2,

    whose coefficients are negated into the canonical y'' = lambda0 y'
    + s0 y convention.  The scan parameter fed to the engine is K1, so
    reported roots compare directly against SpectralParams.k1(n).  The
    expansion point defaults to the potential-minimum abscissa mapped
    to z, falling back to z = 1 when no interior minimum exists.
    """
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    params = spectral_params(pot, ctx, l, branch)
    if z0 is None:
        z0 = _potential_minimum_z(params.a1, params.b1)
    if not z0 > 0.0:
        raise DomainError(f"expansion point must be positive, got {z0!r}")
    order = 2 * depth + 8
    alpha2 = pot.alpha**2
    gb_shift = alpha2 * (params.gamma + params.beta) ** 2
    two_gamma_1 = 2.0 * params.gamma + 1.0
    two_beta = 2.0 * params.beta

    def lambda0(_k1: float) -> SeriesJet:
        z = SeriesJet.variable(z0, order)
        z2 = z * z
        one_p_z2 = z2 + 1.0
        num = jet_scale(z2, two_gamma_1) + jet_scale(one_p_z2, two_beta)
        return jet_scale(jet_div(num, z * one_p_z2), -1.0)

    def s0(k1: float) -> SeriesJet:
        z = SeriesJet.variable(z0, order)
        one_p_z2 = z * z + 1.0
        k2 = k1 + gb_shift
        return jet_scale(jet_reciprocal(one_p_z2), -k2 / alpha2)

    return AimProblem(lambda0=lambda0, s0=s0, x0=z0, max_order=order)


def pt_radial_problem(
    pot: PTPotential,
    ctx: NRContext,
    l: int,
    *,
    centrifugal: str = "approx",
    k1_estimate: Optional[float] = None,
    r_min: Optional[float] = None,
    r_cut: Optional[float] = None,
    npts: int = 4001,
) -> RadialProblem:
    """Shooting-solver formulation of the radial equation, in K1 units.

    The returned problem solves u'' = (w(r) - q) u where q is the scaled
    energy K1 and w = A1/cosh^2 + B1/sinh^2 (centrifugal="approx", the
    reduced form) or w = 2 mu V/hbar^2 + l(l+1)/r^2 with q = 2 mu E/hbar^2
    (centrifugal="exact", the raw form; no d0 offset applies).  Both
    share the origin exponent s = (1 + sqrt(1 + 4 B1/alpha^2))/2.

    k1_estimate (the deepest level of interest) shortens the default
    integration window so the exponential tail neither dominates the
    mesh nor underflows.
    """
    if centrifugal not in ("approx", "exact"):
        raise DomainError(f"centrifugal must be 'approx' or 'exact', got {centrifugal!r}")
    a1, b1 = _scaled_strengths(pot, ctx, l)
    alpha = abs(pot.alpha)
    s_exp = 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * b1 / alpha**2))
    if r_cut is None:
        if k1_estimate is not None and k1_estimate < 0.0:
            kappa = math.sqrt(-k1_estimate)
            turn = 1.0 / alpha
            if a1 < k1_estimate:
                turn = max(turn, math.acosh(math.sqrt(a1 / k1_estimate)) / alpha)
            r_cut = turn + 32.0 / kappa
        else:
            r_cut = 40.0 / alpha
    if r_min is None:
        # Start inside the forbidden core, but not so deep that the stiff
        # b1/sinh^2 wall breaks the marching stencil: near the origin
        # w ~ (b1/alpha^2)/r^2, so keeping h^2 w(r_min)/12 below ~0.1 on
        # the coarsest mesh needs r_min >= h sqrt(b1/1.2)/alpha.  u ~ r^s
        # below the wall, so a larger start abscissa loses nothing.
        r_min = max(
            1e-4 / alpha,
            (r_cut / npts) * math.sqrt(max(b1, 0.0) / 1.2) / alpha,
        )
    if centrifugal == "approx":
        def w(r: float) -> float:
            x = alpha * r
            return a1 / math.cosh(x) ** 2 + b1 / math.sinh(x) ** 2
    else:
        two_mu = 2.0 * ctx.mu / ctx.hbar_c**2
        ll1 = float(l * (l + 1))
        def w(r: float) -> float:
            x = alpha * r
            return (
                two_mu * (pot.A / math.cosh(x) ** 2 + pot.B / math.sinh(x) ** 2)
                + ll1 / (r * r)
            )
    return RadialProblem(w=w, r_min=r_min, r_cut=r_cut, origin_exponent=s_exp, npts=npts)
