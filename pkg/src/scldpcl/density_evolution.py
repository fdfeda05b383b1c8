"""BEC density evolution on protomatrices and sub-block erasure transfer.

The per-edge flooding recursion lives in the compiled/fallback kernel; this
module wraps it with clamping semantics (fixed incoming erasure values on
coupling-check rows), row exclusion, threshold bisections, and the helper /
target transfer operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ThresholdSearchError
from .kernels import de_fixed_point
from .protograph import Protomatrix, SubBlockProto

INFINITE = math.inf

#: interval width at which threshold bisections stop
BISECT_WIDTH = 1e-5


@dataclass(frozen=True)
class DeConfig:
    """Stopping criteria for a single DE run."""

    max_iters: int = 50_000
    stall_tol: float = 1e-12
    zero_tol: float = 1e-9

    def __post_init__(self):
        if not 0 < self.zero_tol < 1:
            raise ValueError("zero_tol must lie in (0, 1)")
        if not 0 < self.stall_tol < self.zero_tol:
            raise ValueError("stall_tol must lie in (0, zero_tol)")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


DEFAULT_CONFIG = DeConfig()


@dataclass(frozen=True)
class ClampSpec:
    """Fixed incoming erasure values per row, plus rows that do not participate."""

    clamped_rows: dict = field(default_factory=dict)
    excluded_rows: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "clamped_rows", dict(self.clamped_rows))
        object.__setattr__(self, "excluded_rows", frozenset(self.excluded_rows))
        if set(self.clamped_rows) & self.excluded_rows:
            raise ValueError("clamped and excluded row sets must be disjoint")
        for i, v in self.clamped_rows.items():
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"clamp value for row {i} outside [0, 1]: {v}")

    def validate_for(self, rows: int):
        for i in list(self.clamped_rows) + list(self.excluded_rows):
            if not 0 <= i < rows:
                raise ValueError(f"row index {i} out of range for {rows} rows")


@dataclass(frozen=True)
class DeResult:
    """Converged state of one DE run."""

    sigma: np.ndarray
    vn_to_cn: np.ndarray
    cn_to_vn: np.ndarray
    iterations: int
    converged: bool
    decoded: bool


class Direction:
    """Helper orientation: which coupling rows receive, which send."""

    LEFT_HELPER = "left"
    RIGHT_HELPER = "right"

    @staticmethod
    def validate(direction):
        if direction not in (Direction.LEFT_HELPER, Direction.RIGHT_HELPER):
            raise ValueError(f"unknown direction: {direction!r}")


def _as_array(b):
    return b.entries if isinstance(b, Protomatrix) else np.asarray(b)


def de_run(b, eps, clamps: ClampSpec | None = None, cfg: DeConfig = DEFAULT_CONFIG,
           x0=None) -> DeResult:
    """Flooding per-edge DE to a fixed point.

    Clamped rows mix the fixed incoming value delta as an extra
    ``(1 - delta)`` factor in their check update; excluded rows send
    nothing and are dropped from the posterior.  Messages start at
    all-erasure unless ``x0`` seeds them.
    """
    arr = _as_array(b)
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps outside [0, 1]: {eps}")
    a = arr.shape[0]
    clamps = clamps or ClampSpec()
    clamps.validate_for(a)
    base = np.ones(a)
    active = np.ones(a, dtype=np.uint8)
    for i, v in clamps.clamped_rows.items():
        base[i] = 1.0 - v
    for i in clamps.excluded_rows:
        active[i] = 0
    x, u, sigma, iters, converged = de_fixed_point(
        arr, eps, base, active, cfg.max_iters, cfg.stall_tol, x0
    )
    decoded = bool(np.all(sigma < cfg.zero_tol))
    return DeResult(sigma, x, u, iters, converged, decoded)


def bisect_threshold(predicate, width=BISECT_WIDTH, lo=0.0, hi=1.0):
    """Largest parameter with a true predicate, assuming monotone decrease.

    Re-probes the final bracket so a tolerance-induced predicate flip is
    reported instead of silently returned.
    """
    if not predicate(lo):
        return lo
    if predicate(hi):
        return hi
    while hi - lo >= width:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    if not predicate(lo) or predicate(hi):
        raise ThresholdSearchError(
            f"monotonicity check failed on re-probe at [{lo}, {hi}]"
        )
    return 0.5 * (lo + hi)


def protograph_threshold(b, cfg: DeConfig = DEFAULT_CONFIG, width=BISECT_WIDTH) -> float:
    """Largest eps where plain DE on the protomatrix drives all erasures to zero."""
    arr = _as_array(b)
    if np.any(arr.sum(axis=0) == 0):
        raise ValueError("degenerate protograph: a variable node has no checks")
    return bisect_threshold(lambda eps: de_run(arr, eps, None, cfg).decoded, width)


def regular_fixed_point(l: int, r: int, eps: float, cfg: DeConfig = DEFAULT_CONFIG) -> float:
    """Limit of x = eps*(1-(1-x)^(r-1))^(l-1) from all-erasure; 0 if below zero_tol."""
    if l < 2 or r <= l:
        raise ValueError(f"need l >= 2 and r > l, got ({l}, {r})")
    x = 1.0
    for _ in range(cfg.max_iters):
        x_new = eps * (1.0 - (1.0 - x) ** (r - 1)) ** (l - 1)
        if abs(x_new - x) < cfg.stall_tol:
            x = x_new
            break
        x = x_new
    return 0.0 if x < cfg.zero_tol else x


def _coerce_transfer(value, t):
    arr = np.atleast_1d(np.asarray(value, dtype=float))
    if arr.shape != (t,):
        raise ValueError(f"transfer value must have length {t}, got shape {arr.shape}")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("transfer values must lie in [0, 1]")
    return arr


def _helper_rows(sb: SubBlockProto, direction):
    Direction.validate(direction)
    if direction == Direction.LEFT_HELPER:
        return list(sb.left_rows), list(sb.right_rows), sb.b_right
    return list(sb.right_rows), list(sb.left_rows), sb.b_left


def helper_de(sb: SubBlockProto, direction, eps, d_in, cfg=DEFAULT_CONFIG) -> DeResult:
    """DE run of a helper: incoming rows clamped at d_in, outgoing rows excluded."""
    d_in = _coerce_transfer(d_in, sb.t)
    in_rows, out_rows, _ = _helper_rows(sb, direction)
    clamps = ClampSpec(
        clamped_rows={row: d_in[i] for i, row in enumerate(in_rows)},
        excluded_rows=frozenset(out_rows),
    )
    return de_run(sb.matrix, eps, clamps, cfg)


def transfer_from_sigma(sigma, out_incidence) -> np.ndarray:
    """Outgoing value per coupling row: 1 - prod_j (1 - sigma_j)^incidence."""
    out = np.asarray(out_incidence, dtype=float)
    return 1.0 - np.prod((1.0 - sigma[None, :]) ** out, axis=1)


def helper_transfer(sb: SubBlockProto, direction, eps, d_in, cfg=DEFAULT_CONFIG) -> np.ndarray:
    """Erasure transfer: outgoing values given channel eps and incoming d_in."""
    result = helper_de(sb, direction, eps, d_in, cfg)
    _, _, out_incidence = _helper_rows(sb, direction)
    return transfer_from_sigma(result.sigma, out_incidence)


def iterated_transfer(sb: SubBlockProto, direction, eps, d0, k: int,
                      cfg=DEFAULT_CONFIG) -> np.ndarray:
    """k-fold application of the erasure transfer starting from d0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = _coerce_transfer(d0, sb.t)
    for _ in range(k):
        d = helper_transfer(sb, direction, eps, d, cfg)
    return d


def q_of(sb: SubBlockProto, direction, eps, cfg=DEFAULT_CONFIG, cap: int = 1000):
    """Smallest k with all-zero k-fold transfer of all-ones input; INFINITE
    when the sequence stalls at a nonzero fixed point or the cap is hit."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    d = np.ones(sb.t)
    prev = None
    for k in range(1, cap + 1):
        d = helper_transfer(sb, direction, eps, d, cfg)
        if np.all(d < cfg.zero_tol):
            return k
        if prev is not None and np.abs(d - prev).max() < cfg.stall_tol:
            return INFINITE
        prev = d.copy()
    return INFINITE


def target_de(sb: SubBlockProto, eps, d_left, d_right, cfg=DEFAULT_CONFIG) -> DeResult:
    """DE run of the target: both coupling sides clamped, nothing excluded."""
    d_left = _coerce_transfer(d_left, sb.t)
    d_right = _coerce_transfer(d_right, sb.t)
    clamped = {row: d_left[i] for i, row in enumerate(sb.left_rows)}
    clamped.update({row: d_right[i] for i, row in enumerate(sb.right_rows)})
    return de_run(sb.matrix, eps, ClampSpec(clamped_rows=clamped), cfg)


def target_threshold(sb: SubBlockProto, d_left, d_right, cfg=DEFAULT_CONFIG,
                     width=BISECT_WIDTH) -> float:
    """Largest eps where the target decodes given fixed incoming values."""
    d_left = _coerce_transfer(d_left, sb.t)
    d_right = _coerce_transfer(d_right, sb.t)
    return bisect_threshold(
        lambda eps: target_de(sb, eps, d_left, d_right, cfg).decoded, width
    )
