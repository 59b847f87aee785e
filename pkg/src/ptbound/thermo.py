"""High-temperature vibrational thermodynamics of the bound spectrum.

The level ladder E_n = (2 alpha^2 hbar^2/mu)[l(l+1) d0 - (n - zeta)^2],
n = 0..floor(zeta), turns the vibrational partition function into a
finite sum of e^{+((n-zeta)/gamma)^2} terms (the rotational prefactor
exp(-beta*E_rot) is dropped per its own "approximately 1" regime, and
restorable by flag).  In the classical regime the sum is replaced by

    Z = sqrt(pi) tau erfi(chi) / (2 sqrt(beta)),
    chi = zeta sqrt(beta) / tau,  tau = sqrt(mu/2) / (alpha hbar)

and all derived quantities follow from Z.  Both e^{chi^2} and erfi(chi)
overflow quickly, so U, C, S, F are evaluated through dawson(chi) and
ln(erfi) combinations in which every e^{chi^2} factor cancels
analytically; the small-chi region, where 1 - chi/dawson(chi) loses all
leading digits, switches to series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, OverflowRangeError
from .specfun import dawson, erfi, ln_erfi

__all__ = [
    "ThermoContext",
    "ThermoPoint",
    "chi",
    "entropy",
    "free_energy",
    "log_partition_closed",
    "mean_energy",
    "partition_closed",
    "partition_sum",
    "specific_heat",
    "thermo_point",
]

_LN_SQRTPI_HALF = 0.5 * math.log(math.pi) - math.log(2.0)
_EXP_MAX = 700.0
# Below this chi, 1 - chi/dawson(chi) is evaluated by series: the direct
# form has lost ~chi^-2 leading digits, the three-term series still has
# ~1e-12 relative truncation error at the cutover.
_SERIES_CHI = 0.02


@dataclass(frozen=True)
class ThermoContext:
    """Level-count parameter, molecular scale, and Boltzmann constant.

    rot_offset is the constant rotational energy shift whose Boltzmann
    factor the partition function drops by default; it only matters when
    a flag asks for it back.
    """

    zeta: float
    tau: float
    k: float = 1.0
    rot_offset: float = 0.0

    def __post_init__(self):
        if not self.tau > 0.0:
            raise DomainError(f"tau must be positive, got {self.tau!r}")
        if not math.isfinite(self.zeta):
            raise DomainError(f"zeta must be finite, got {self.zeta!r}")
        if not self.k > 0.0:
            raise DomainError(f"Boltzmann constant must be positive, got {self.k!r}")


@dataclass(frozen=True)
class ThermoPoint:
    beta: float
    chi: float
    Z: float
    U: float
    C: float
    F: float
    S: float


def _check_beta(beta: float) -> None:
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}")


def chi(ctx: ThermoContext, beta: float) -> float:
    """Scaling variable chi = zeta sqrt(beta) / tau."""
    _check_beta(beta)
    return ctx.zeta * math.sqrt(beta) / ctx.tau


def partition_sum(
    ctx: ThermoContext,
    beta: float,
    n_max: int,
    *,
    include_rotational_prefactor: bool = False,
) -> float:
    """Finite ladder sum: Z = sum_{n=0}^{n_max} e^{((n - zeta)/gamma)^2}.

    The exponent is positive as printed (the ladder is written relative
    to the zero crossing at n = zeta, not as a Boltzmann sum).  Exponents
    beyond the double range raise OverflowRangeError.
    """
    _check_beta(beta)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    gamma = ctx.tau / math.sqrt(beta)
    worst = ((0.0 - ctx.zeta) / gamma) ** 2
    if worst > _EXP_MAX:
        raise OverflowRangeError(
            f"leading term exponent {worst:.1f} exceeds the floating range"
        )
    total = math.fsum(
        math.exp(((n - ctx.zeta) / gamma) ** 2) for n in range(n_max + 1)
    )
    if include_rotational_prefactor:
        total *= math.exp(-beta * ctx.rot_offset)
    return total


def partition_closed(
    ctx: ThermoContext,
    beta: float,
    *,
    include_rotational_prefactor: bool = False,
) -> float:
    """Classical-limit partition function sqrt(pi) tau erfi(chi)/(2 sqrt(beta))."""
    x = chi(ctx, beta)
    z = 0.5 * math.sqrt(math.pi) * ctx.tau * erfi(x) / math.sqrt(beta)
    if include_rotational_prefactor:
        z *= math.exp(-beta * ctx.rot_offset)
    return z


def log_partition_closed(
    ctx: ThermoContext,
    beta: float,
    *,
    include_rotational_prefactor: bool = False,
) -> float:
    """ln of partition_closed via ln(erfi), finite far past the erfi overflow."""
    x = chi(ctx, beta)
    if x <= 0.0:
        raise DomainError("log of the closed form needs zeta > 0")
    val = _LN_SQRTPI_HALF + math.log(ctx.tau) - 0.5 * math.log(beta) + ln_erfi(x)
    if include_rotational_prefactor:
        val -= beta * ctx.rot_offset
    return val


def _one_minus_chi_over_dawson(x: float) -> float:
    # 1 - x/dawson(x); both branches agree to ~1e-12 at the cutover.
    if x < _SERIES_CHI:
        x2 = x * x
        return -x2 * (2.0 / 3.0 + x2 * (8.0 / 45.0 + x2 * (16.0 / 945.0)))
    return 1.0 - x / dawson(x)


def mean_energy(ctx: ThermoContext, beta: float) -> float:
    """U = (1/(2 beta)) [1 - chi/dawson(chi)]; tends to -zeta^2/(3 tau^2) as beta -> 0."""
    x = chi(ctx, beta)
    if x <= 0.0:
        raise DomainError("mean energy needs chi > 0")
    return _one_minus_chi_over_dawson(x) / (2.0 * beta)


def specific_heat(ctx: ThermoContext, beta: float) -> float:
    """C per the printed closed form, rearranged to cancel every e^{chi^2}.

    C = (k/2) [1 - chi (chi + (1 - 2 chi^2) dawson(chi)) / (2 dawson(chi)^2)]

    which is the printed erfi/exponential expression with
    erfi = (2/sqrt(pi)) e^{chi^2} dawson substituted through.
    """
    x = chi(ctx, beta)
    if x <= 0.0:
        raise DomainError("specific heat needs chi > 0")
    if x < _SERIES_CHI:
        x2 = x * x
        return 0.5 * ctx.k * x2 * x2 * (8.0 / 45.0 + x2 * (32.0 / 945.0))
    d = dawson(x)
    return 0.5 * ctx.k * (1.0 - x * (x + (1.0 - 2.0 * x * x) * d) / (2.0 * d * d))


def free_energy(ctx: ThermoContext, beta: float) -> float:
    """F = -(1/beta) ln Z, with the log-scaled erfi path."""
    return -log_partition_closed(ctx, beta) / beta


def entropy(ctx: ThermoContext, beta: float) -> float:
    """S = (k/2)[1 - chi/dawson(chi) + 2 ln(tau erfi(chi)/sqrt(beta)) + ln(pi/4)].

    The printed formula passes zeta to the Dawson factor; dimensional
    consistency and the defining identity S = k ln Z + k beta U require
    chi there, and chi is what this uses.  Algebraically this expression
    IS k ln Z + k beta U, so the identity holds to rounding.
    """
    x = chi(ctx, beta)
    if x <= 0.0:
        raise DomainError("entropy needs chi > 0")
    return 0.5 * ctx.k * (
        _one_minus_chi_over_dawson(x)
        + 2.0 * (math.log(ctx.tau) + ln_erfi(x))
        - math.log(beta)
        + math.log(math.pi / 4.0)
    )


def thermo_point(ctx: ThermoContext, beta: float) -> ThermoPoint:
    """All closed-form quantities at one temperature."""
    return ThermoPoint(
        beta=beta,
        chi=chi(ctx, beta),
        Z=partition_closed(ctx, beta),
        U=mean_energy(ctx, beta),
        C=specific_heat(ctx, beta),
        F=free_energy(ctx, beta),
        S=entropy(ctx, beta),
    )
