"""Sub-block and semi-global decoding thresholds.

Four nested sub-block thresholds order the channel range: local
decodability, strict inter-block erasure reduction, zero-preservation, and
target success with full side information.  The semi-global thresholds in
the many-helpers limit follow from the limit inter-block values
delta-hat(tau) fed into the target threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density_evolution import (
    BISECT_WIDTH,
    DEFAULT_CONFIG,
    DeConfig,
    Direction,
    bisect_threshold,
    helper_transfer,
    protograph_threshold,
    regular_fixed_point,
    target_de,
    target_threshold,
)
from .errors import NonConvergenceError
from .protograph import SubBlockProto, couple, is_symmetric_sb

TERMINATION = 0
NON_TERMINATION = 1

#: iteration schedule for the limit inter-block value
DHAT_TOL = 1e-10
DHAT_MAX_STEPS = 10_000


@dataclass(frozen=True)
class SbThresholds:
    """The four sub-block thresholds plus the regular-ensemble threshold."""

    eps1: float
    eps2: float
    eps3: float
    eps4: float
    eps_lr: float
    direction: str

    def as_dict(self):
        return {
            "eps1_local": self.eps1,
            "eps2_reduction": self.eps2,
            "eps3_zero_preserving": self.eps3,
            "eps4_full_side_info": self.eps4,
            "eps_regular": self.eps_lr,
        }


@dataclass(frozen=True)
class PhiPsi:
    """Coupling-row transfer values induced by the regular fixed point."""

    phi: np.ndarray
    psi: np.ndarray
    x_eps: float


@dataclass(frozen=True)
class SgThresholdReport:
    """Semi-global thresholds and the sampled limit inter-block values."""

    esg_11: float
    esg_01: float
    esg_00: float
    eps_grid: np.ndarray
    delta_hat_0: np.ndarray
    delta_hat_1: np.ndarray
    theorem1_applicable: bool
    equality_holds: bool
    thresholds: SbThresholds


def _validate_tau(tau):
    if tau not in (TERMINATION, NON_TERMINATION):
        raise ValueError(f"termination flag must be 0 or 1, got {tau!r}")


def delta_hat(sb: SubBlockProto, direction, eps, tau, cfg: DeConfig = DEFAULT_CONFIG,
              tol=DHAT_TOL, max_steps=DHAT_MAX_STEPS, strict=True) -> np.ndarray:
    """Limit of the inter-block value sequence d_{i+1} = transfer(eps, d_i).

    Starts from all-zero (tau=0, termination) or all-ones (tau=1).  With
    ``strict`` the iteration must reach sup-norm change < tol within
    ``max_steps``; otherwise the last iterate is returned as-is.
    """
    _validate_tau(tau)
    d = np.zeros(sb.t) if tau == TERMINATION else np.ones(sb.t)
    prev = d
    for _ in range(max_steps):
        d = helper_transfer(sb, direction, eps, prev, cfg)
        if np.abs(d - prev).max() < tol:
            return d
        prev = d
    if strict:
        raise NonConvergenceError(
            f"inter-block iteration did not settle within {max_steps} steps",
            last=d, prev=prev,
        )
    return d


def eps3_via_protograph(sb: SubBlockProto, direction, cfg: DeConfig = DEFAULT_CONFIG,
                        width=BISECT_WIDTH) -> float:
    """Zero-preservation threshold as a plain protograph threshold.

    With zero incoming values the incoming coupling rows act as local
    checks and the outgoing rows drop out, leaving [b_left; b_loc] for a
    left helper (mirrored for a right helper).
    """
    Direction.validate(direction)
    if sb.t == 0:
        return protograph_threshold(sb.b_loc, cfg, width)
    if direction == Direction.LEFT_HELPER:
        stacked = np.vstack([sb.b_left, sb.b_loc])
    else:
        stacked = np.vstack([sb.b_loc, sb.b_right])
    return protograph_threshold(stacked, cfg, width)


def sb_thresholds(sb: SubBlockProto, direction=Direction.LEFT_HELPER,
                  cfg: DeConfig = DEFAULT_CONFIG, width=BISECT_WIDTH) -> SbThresholds:
    """Compute all four sub-block thresholds and the regular-ensemble one.

    eps2 is the supremum channel parameter below which the all-ones-seeded
    inter-block sequence converges to zero; for scalar transfers this is
    equivalent to strict domination of the transfer map by the identity.
    """
    Direction.validate(direction)
    eps1 = protograph_threshold(sb.b_loc, cfg, width)
    eps_lr = protograph_threshold(np.ones((sb.l, sb.r), np.uint8), cfg, width)
    if sb.t == 0:
        # no coupling rows: every transfer is trivial and all thresholds
        # collapse onto the local one
        return SbThresholds(eps1, eps1, eps1, target_threshold(sb, [], [], cfg, width),
                            eps_lr, direction)

    zero = np.zeros(sb.t)

    def reduction_holds(eps):
        d = delta_hat(sb, direction, eps, NON_TERMINATION, cfg, strict=False)
        return bool(np.all(d < cfg.zero_tol))

    eps2 = bisect_threshold(reduction_holds, width)

    def zero_preserved(eps):
        d = helper_transfer(sb, direction, eps, zero, cfg)
        return bool(np.all(d < cfg.zero_tol))

    eps3 = bisect_threshold(zero_preserved, width)
    eps4 = target_threshold(sb, zero, zero, cfg, width)
    return SbThresholds(eps1, eps2, eps3, eps4, eps_lr, direction)


def phi_psi(sb: SubBlockProto, eps, cfg: DeConfig = DEFAULT_CONFIG) -> PhiPsi:
    """phi_i = 1-(1-x)^(r-d_i), psi_i = 1-(1-x)^d_i with d the b_left row degrees."""
    x = regular_fixed_point(sb.l, sb.r, eps, cfg)
    d = sb.b_left.sum(axis=1).astype(float)
    phi = 1.0 - (1.0 - x) ** (sb.r - d)
    psi = 1.0 - (1.0 - x) ** d
    return PhiPsi(phi, psi, x)


def sg_threshold(sb: SubBlockProto, tau_left, tau_right, cfg: DeConfig = DEFAULT_CONFIG,
                 width=BISECT_WIDTH, dhat_max_steps=DHAT_MAX_STEPS,
                 dhat_strict=True) -> float:
    """Semi-global threshold in the many-helpers limit.

    The target decodes iff eps is below its threshold at the limit
    incoming values from each side; requires a symmetric sub-block.
    """
    _validate_tau(tau_left)
    _validate_tau(tau_right)
    if is_symmetric_sb(sb) is None:
        raise ValueError("semi-global thresholds assume a symmetric sub-block")

    def sg_decodes(eps):
        d_l = delta_hat(sb, Direction.LEFT_HELPER, eps, tau_left, cfg,
                        max_steps=dhat_max_steps, strict=dhat_strict)
        d_r = delta_hat(sb, Direction.RIGHT_HELPER, eps, tau_right, cfg,
                        max_steps=dhat_max_steps, strict=dhat_strict)
        return target_de(sb, eps, d_l, d_r, cfg).decoded

    return bisect_threshold(sg_decodes, width)


def theorem1_report(sb: SubBlockProto, cfg: DeConfig = DEFAULT_CONFIG,
                    width=BISECT_WIDTH, grid_points=50) -> SgThresholdReport:
    """All three semi-global thresholds plus the applicability checks.

    The characterization esg(0,0) = esg(0,1) = eps3 applies when the
    regular-ensemble threshold does not exceed eps3 and the two limit
    inter-block values coincide above eps3 (checked on a grid, staying
    1e-4 clear of the measured threshold).
    """
    th = sb_thresholds(sb, Direction.LEFT_HELPER, cfg, width)
    esg_11 = sg_threshold(sb, 1, 1, cfg, width)
    esg_01 = sg_threshold(sb, 0, 1, cfg, width)
    esg_00 = sg_threshold(sb, 0, 0, cfg, width)
    lo = min(th.eps3 + 1e-4, 1.0)
    grid = np.linspace(lo, 1.0, grid_points)
    d0 = np.empty((grid_points, sb.t))
    d1 = np.empty((grid_points, sb.t))
    for i, eps in enumerate(grid):
        d0[i] = delta_hat(sb, Direction.LEFT_HELPER, eps, TERMINATION, cfg, strict=False)
        d1[i] = delta_hat(sb, Direction.LEFT_HELPER, eps, NON_TERMINATION, cfg, strict=False)
    dhat_equal = bool(np.abs(d0 - d1).max() < 1e-6)
    applicable = bool(th.eps_lr <= th.eps3 + 1e-6 and dhat_equal)
    equality = bool(abs(esg_00 - th.eps3) < 2e-4 and abs(esg_01 - th.eps3) < 2e-4)
    return SgThresholdReport(
        esg_11=esg_11, esg_01=esg_01, esg_00=esg_00,
        eps_grid=grid, delta_hat_0=d0, delta_hat_1=d1,
        theorem1_applicable=applicable, equality_holds=equality, thresholds=th,
    )


def global_threshold(sb: SubBlockProto, m: int, cfg: DeConfig = DEFAULT_CONFIG,
                     width=BISECT_WIDTH) -> float:
    """Threshold of the m-copy coupled protograph under cfg's iteration budget."""
    return protograph_threshold(couple(sb, m).matrix, cfg, width)
