"""Block-varying erasure channel, block-state chain, and success bounds.

The channel's erasure rate evolves over sub-blocks as a finite Markov
chain.  States are merged into four classes by the sub-block thresholds;
a pseudo-termination chain with q+2 states then tracks whether a run of
helper blocks outputs zero erasure values, yielding lower bounds on the
semi-global success probability for one- and two-sided decoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonConvergenceError

INFINITE = math.inf

ROW_SUM_TOL = 1e-12
STATIONARY_TOL = 1e-10


def stationary(p) -> np.ndarray:
    """Stationary distribution of a stochastic matrix by direct linear solve.

    Falls back to power iteration when the solve is singular; verifies the
    residual either way and rejects chains without a unique stationary law.
    """
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    if p.shape != (n, n):
        raise ValueError("transition matrix must be square")
    if np.any(p < 0) or np.abs(p.sum(axis=1) - 1.0).max() > ROW_SUM_TOL:
        raise ValueError("rows must be non-negative and sum to 1")
    a = (p.T - np.eye(n)).copy()
    a[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    try:
        nu = np.linalg.solve(a, rhs)
    except np.linalg.LinAlgError:
        nu = None
    if nu is None or np.any(nu < -1e-9) or abs(nu.sum() - 1.0) > 1e-8 \
            or np.abs(nu @ p - nu).max() > STATIONARY_TOL:
        nu = np.full(n, 1.0 / n)
        for _ in range(200_000):
            nxt = nu @ p
            if np.abs(nxt - nu).max() < 1e-15:
                nu = nxt
                break
            nu = nxt
        if np.abs(nu @ p - nu).max() > STATIONARY_TOL:
            raise NonConvergenceError("no stationary distribution found", last=nu)
        # uniqueness: eigenvalue 1 must be simple
        eigvals = np.linalg.eigvals(p.T)
        if np.sum(np.abs(eigvals - 1.0) < 1e-8) > 1:
            raise NonConvergenceError("stationary distribution is not unique", last=nu)
    nu = np.clip(nu, 0.0, None)
    return nu / nu.sum()


@dataclass(frozen=True)
class ChannelModel:
    """Erasure-state alphabet (ascending), transition matrix, stationary law."""

    states: np.ndarray
    p: np.ndarray
    nu: np.ndarray = None

    def __post_init__(self):
        states = np.asarray(self.states, dtype=float)
        p = np.asarray(self.p, dtype=float)
        if states.ndim != 1 or len(states) == 0:
            raise ValueError("states must be a non-empty vector")
        if np.any(states < 0) or np.any(states > 1):
            raise ValueError("erasure states must lie in [0, 1]")
        if np.any(np.diff(states) < 0):
            raise ValueError("states must be ascending")
        if p.shape != (len(states), len(states)):
            raise ValueError("transition matrix shape must match the state count")
        nu = stationary(p) if self.nu is None else np.asarray(self.nu, dtype=float)
        if np.abs(nu @ p - nu).max() > STATIONARY_TOL or abs(nu.sum() - 1.0) > 1e-10:
            raise ValueError("nu is not a stationary distribution of p")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "nu", nu)

    @property
    def expected_erasure_rate(self) -> float:
        return float(self.nu @ self.states)


def gilbert_elliott(states, alpha: float) -> ChannelModel:
    """Two-state channel that stays put with probability alpha."""
    if len(states) != 2:
        raise ValueError("the stay-probability constructor takes exactly 2 states")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    p = np.array([[alpha, 1.0 - alpha], [1.0 - alpha, alpha]])
    return ChannelModel(states, p)


def iid_channel(states, probs) -> ChannelModel:
    """Independent per-block states drawn from a fixed distribution."""
    probs = np.asarray(probs, dtype=float)
    if probs.shape != (len(states),) or abs(probs.sum() - 1.0) > 1e-9 or np.any(probs < 0):
        raise ValueError("need a probability vector matching the state count")
    p = np.tile(probs, (len(states), 1))
    return ChannelModel(states, p, probs)


def reverse_chain(model: ChannelModel) -> np.ndarray:
    """Transition matrix of the time-reversed chain: (nu_j / nu_i) * p[j, i]."""
    if np.any(model.nu <= 0):
        raise ValueError("reverse chain undefined: zero stationary mass")
    return (model.nu[None, :] / model.nu[:, None]) * model.p.T


@dataclass(frozen=True)
class SbStateMap:
    """Threshold-interval partition of channel states plus the worst-case q."""

    a_sets: tuple
    q: float

    @property
    def class_of(self):
        out = {}
        for cls, members in enumerate(self.a_sets):
            for k in members:
                out[k] = cls
        return out


def sb_state_map(model: ChannelModel, th, q_values) -> SbStateMap:
    """Partition states by [0,e1), [e1,e2), [e2,e3), [e3,1]; q = worst a2 case.

    A boundary state goes to the higher (worse) interval.  ``q_values``
    maps state index -> q for the states in the reduction interval; a
    reduction state with infinite q signals a tolerance failure.
    """
    cuts = (th.eps1, th.eps2, th.eps3)
    if not (cuts[0] <= cuts[1] + 1e-12 and cuts[1] <= cuts[2] + 1e-12):
        raise ValueError("thresholds must be ordered")
    sets = [[], [], [], []]
    for k, e in enumerate(model.states):
        cls = sum(e >= c for c in cuts)
        sets[cls].append(k)
    q = 2
    if sets[1]:
        qs = []
        for k in sets[1]:
            qk = q_values[k]
            if qk is None or qk == INFINITE:
                raise NonConvergenceError(
                    f"state {k} sits in the reduction interval but has infinite q"
                )
            if qk < 2:
                raise NonConvergenceError(
                    f"state {k} in the reduction interval reports q={qk} < 2"
                )
            qs.append(int(qk))
        q = max(qs)
    return SbStateMap(tuple(tuple(s) for s in sets), q)


@dataclass(frozen=True)
class SbStateChain:
    """Four-class block-state chain with its stationary distribution."""

    q_matrix: np.ndarray
    mu: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q_matrix, dtype=float)
        mu = np.asarray(self.mu, dtype=float)
        if q.shape != (4, 4) or mu.shape != (4,):
            raise ValueError("need a 4x4 matrix and length-4 distribution")
        if np.abs(q.sum(axis=1) - 1.0).max() > ROW_SUM_TOL:
            raise ValueError("rows must sum to 1")
        if np.abs(mu @ q - mu).max() > 1e-10:
            raise ValueError("mu is not stationary for the block-state chain")
        object.__setattr__(self, "q_matrix", q)
        object.__setattr__(self, "mu", mu)

    def reversed(self) -> "SbStateChain":
        """Time reversal with the empty-class self-loop convention."""
        q = self.q_matrix
        mu = self.mu
        out = np.zeros_like(q)
        for i in range(4):
            if mu[i] == 0:
                out[i, i] = 1.0
                continue
            for j in range(4):
                out[i, j] = mu[j] * q[j, i] / mu[i]
        return SbStateChain(out, mu)


def sb_state_chain(model: ChannelModel, state_map: SbStateMap) -> SbStateChain:
    """Merge channel states per the partition; empty classes self-loop."""
    nu, p = model.nu, model.p
    sets = state_map.a_sets
    mu = np.array([sum(nu[k] for k in s) for s in sets])
    q = np.zeros((4, 4))
    for i in range(4):
        if mu[i] == 0:
            q[i, i] = 1.0
            continue
        for j in range(4):
            q[i, j] = sum(nu[ki] * p[ki, kj] for ki in sets[i] for kj in sets[j]) / mu[i]
    return SbStateChain(q, mu)


@dataclass(frozen=True)
class DecoderChain:
    """Pseudo-termination chain over (s1~, s2~(1..q-1), s3~, s4~)."""

    q: int
    q_q: np.ndarray
    v: np.ndarray
    u: np.ndarray
    a_q: np.ndarray = field(repr=False, default=None)
    b: np.ndarray = field(repr=False, default=None)


def _assemble_band(q, entries):
    """(q+2)x(q+2) chain matrix from the four-class transition entries.

    ``entries`` is the 4x4 class matrix; rows s2~(k) advance on class-2,
    finish on class-1 (and on class-2 at level q-1), reset to s3~ on
    class-3, and abort on class-4.
    """
    n = q + 2
    m = np.zeros((n, n))
    m[0, 0] = 1.0
    m[n - 1, n - 1] = 1.0
    for k in range(1, q - 1):  # s2~(k), k = 1..q-2
        m[k, 0] = entries[1, 0]
        m[k, k + 1] = entries[1, 1]
        m[k, n - 2] = entries[1, 2]
        m[k, n - 1] = entries[1, 3]
    m[q - 1, 0] = entries[1, 0] + entries[1, 1]  # s2~(q-1)
    m[q - 1, n - 2] = entries[1, 2]
    m[q - 1, n - 1] = entries[1, 3]
    m[n - 2, 0] = entries[2, 0]  # s3~
    m[n - 2, 1] = entries[2, 1]
    m[n - 2, n - 2] = entries[2, 2]
    m[n - 2, n - 1] = entries[2, 3]
    return m


def decoder_chain(chain: SbStateChain, q: int) -> DecoderChain:
    """Assemble the (q+2)-state chain, its start/selector vectors, and the
    uniform counting pair."""
    if q < 2:
        raise ValueError("the pseudo-termination chain needs q >= 2")
    n = q + 2
    q_q = _assemble_band(q, chain.q_matrix)
    v = np.zeros(n)
    v[0], v[1], v[n - 2], v[n - 1] = chain.mu
    u = np.zeros(n)
    u[0] = 1.0
    a_q = np.zeros((n, n))
    a_q[0, 0] = 4.0
    a_q[n - 1, n - 1] = 4.0
    for k in range(1, q - 1):
        a_q[k, 0] = 1.0
        a_q[k, k + 1] = 1.0
        a_q[k, n - 2] = 1.0
        a_q[k, n - 1] = 1.0
    a_q[q - 1, 0] = 2.0
    a_q[q - 1, n - 2] = 1.0
    a_q[q - 1, n - 1] = 1.0
    a_q[n - 2, 0] = 1.0
    a_q[n - 2, 1] = 1.0
    a_q[n - 2, n - 2] = 1.0
    a_q[n - 2, n - 1] = 1.0
    b = np.zeros(n)
    b[0] = b[1] = b[n - 2] = b[n - 1] = 1.0
    return DecoderChain(q, q_q, v, u, a_q, b)


def _power_apply(matrix, vec, k):
    out = vec
    for _ in range(k):
        out = matrix @ out
    return out


def pseudo_termination_prob(dc: DecoderChain, c: int) -> float:
    """Probability that c consecutive block states form a pseudo-termination
    sequence: v . Q_q^(c-1) . u^T."""
    if c < 1:
        raise ValueError("need at least one block")
    return float(dc.v @ _power_apply(dc.q_q, dc.u, c - 1))


def count_sequences(c: int, q: int) -> int:
    """Number of pseudo-termination sequences of length c (uniform counting)."""
    if c < 1 or q < 2:
        raise ValueError("need c >= 1 and q >= 2")
    dc = decoder_chain(
        SbStateChain(np.full((4, 4), 0.25), np.full(4, 0.25)), q
    )
    count = dc.b @ _power_apply(dc.a_q, dc.u, c - 1)
    return int(round(count))


@dataclass(frozen=True)
class SequenceVerdict:
    member: bool
    final_state: str


_STATE_NAMES = {1: "s1", 2: "s2", 3: "s3", 4: "s4"}


def classify_sequence(seq, q: int) -> SequenceVerdict:
    """Deterministic automaton deciding pseudo-termination membership.

    ``seq`` lists block classes 1..4 ordered from the block decoded last
    (adjacent to the target) outward.  This is the brute-force oracle for
    the matrix-power formulas.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    states = [int(s) for s in seq]
    if any(s not in (1, 2, 3, 4) for s in states):
        raise ValueError("block states must be in {1, 2, 3, 4}")
    # positions: 0 = success, 1..q-1 = reduction run length, q = reset, q+1 = fail
    pos = {1: 0, 2: 1, 3: q, 4: q + 1}[states[0]]
    for s in states[1:]:
        if pos == 0 or pos == q + 1:
            break
        if pos < q:  # reduction run of length pos
            if s == 1:
                pos = 0
            elif s == 2:
                pos = 0 if pos == q - 1 else pos + 1
            elif s == 3:
                pos = q
            else:
                pos = q + 1
        else:  # reset state
            if s == 1:
                pos = 0
            elif s == 2:
                pos = 1
            elif s == 4:
                pos = q + 1
    if pos == 0:
        final = "s1~"
    elif pos == q + 1:
        final = "s4~"
    elif pos == q:
        final = "s3~"
    else:
        final = f"s2~({pos})"
    return SequenceVerdict(member=(pos == 0), final_state=final)


LEFT = "left"
RIGHT = "right"
ONE_SIDED = "one-sided"
TWO_SIDED = "two-sided"


def one_sided_success(dc: DecoderChain, dc_rev: DecoderChain, d: int, side) -> float:
    """Lower bound on success with d helpers on one side of the target."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if side == RIGHT:
        return float(dc.v @ _power_apply(dc.q_q, dc.u, d))
    if side == LEFT:
        return float(dc_rev.v @ _power_apply(dc_rev.q_q, dc_rev.u, d))
    raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")


def two_sided_success(dc: DecoderChain, dc_rev: DecoderChain, d: int) -> float:
    """Lower bound on success with d/2 helpers on each side (even d)."""
    if d < 0 or d % 2:
        raise ValueError("two-sided decoding needs an even, non-negative d")
    n = dc.q + 2
    half = d // 2
    m_fwd = np.linalg.matrix_power(dc.q_q, half)
    m_rev = np.linalg.matrix_power(dc_rev.q_q, half)
    kron = np.kron(m_fwd, m_rev)
    v2 = np.zeros(n * n)
    diag = {0: dc.v[0], 1: dc.v[1], n - 2: dc.v[n - 2], n - 1: dc.v[n - 1]}
    for i, w in diag.items():
        v2[i * n + i] = w
    u2 = np.zeros(n * n)
    for i in range(n):
        for j in range(n):
            if i == 0 or j == 0:
                u2[i * n + j] = 1.0
    return float(v2 @ kron @ u2)


def anti_termination_closed_form(alpha: float, q: int, d: int, mode) -> float:
    """Closed-form bound for the two-state stay-alpha channel whose bad
    state is anti-termination (good state in the reduction interval)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if mode == ONE_SIDED:
        return 0.5 * alpha ** (q - 1) if d >= q - 1 else 0.0
    if mode == TWO_SIDED:
        if d % 2:
            raise ValueError("two-sided mode needs even d")
        if d // 2 >= q - 1:
            return 0.5 * (2.0 * alpha ** (q - 1) - alpha ** (2 * (q - 1)))
        return 0.0
    raise ValueError(f"mode must be {ONE_SIDED!r} or {TWO_SIDED!r}")
