"""Sub-block protograph construction, validation, coupling, and symmetry.

A sub-block protomatrix is the stack [b_left; b_loc; b_right]: t coupling
rows toward the left neighbor, l-t all-ones local rows, and t coupling
rows toward the right neighbor, with b_left + b_right equal to the
all-ones matrix.  Everything here is pure and operates on immutable
values; entries are stored as uint8.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ProtographValidationError

MAX_SYMMETRY_SEARCH_T = 8


@dataclass(frozen=True)
class Protomatrix:
    """Bi-adjacency matrix of a protograph; entries are edge multiplicities."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.entries))
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ProtographValidationError("shape", "protomatrix must be a non-empty 2-D array")
        if np.any(arr < 0) or np.any(arr > 255):
            raise ProtographValidationError("entries", "entries must be integers in [0, 255]")
        if not np.issubdtype(arr.dtype, np.integer):
            if not np.all(arr == np.round(arr)):
                raise ProtographValidationError("entries", "entries must be integers")
        object.__setattr__(self, "entries", arr.astype(np.uint8))
        self.entries.setflags(write=False)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]


@dataclass(frozen=True)
class DegreeProfile:
    """Row (check) and column (variable) degree vectors of a protomatrix."""

    d_c: np.ndarray
    d_v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "d_c", np.asarray(self.d_c, dtype=int))
        object.__setattr__(self, "d_v", np.asarray(self.d_v, dtype=int))


@dataclass(frozen=True)
class PermutationWitness:
    """Row/column permutations carrying b_left onto b_right.

    ``apply(b_left)[i, j] = b_left[row_perm[i], col_perm[j]]`` equals
    b_right exactly (0-based permutations).
    """

    row_perm: tuple
    col_perm: tuple

    def apply(self, matrix):
        m = np.asarray(matrix)
        if len(self.row_perm) == 0:
            return m.copy()
        return m[np.ix_(list(self.row_perm), list(self.col_perm))]


_all_ones = np.ones


def _stack(b_left, b_loc, b_right):
    parts = [p for p in (b_left, b_loc, b_right) if p.shape[0] > 0]
    return np.vstack(parts) if parts else b_loc


@dataclass(frozen=True)
class SubBlockProto:
    """One sub-block's protomatrix split into coupling and local parts."""

    l: int
    r: int
    t: int
    b_left: np.ndarray
    b_loc: np.ndarray
    b_right: np.ndarray

    def __post_init__(self):
        for name in ("b_left", "b_loc", "b_right"):
            arr = np.asarray(getattr(self, name))
            arr = arr.reshape(-1, self.r) if arr.size else arr.reshape(0, self.r)
            arr = np.ascontiguousarray(arr.astype(np.uint8))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        validate_sub_block(self)

    @property
    def matrix(self) -> Protomatrix:
        """Full (l+t) x r sub-block protomatrix [b_left; b_loc; b_right]."""
        return Protomatrix(_stack(self.b_left, self.b_loc, self.b_right))

    @property
    def left_rows(self):
        return range(0, self.t)

    @property
    def loc_rows(self):
        return range(self.t, self.l)

    @property
    def right_rows(self):
        return range(self.l, self.l + self.t)


def validate_sub_block(sb: SubBlockProto):
    """Check every structural constraint; raise naming the first violated one."""
    l, r, t = sb.l, sb.r, sb.t
    if not (l >= 2 and r >= 1 and 0 <= t <= l - 2):
        raise ProtographValidationError("l-t>=2", f"need l-t >= 2 and t >= 0, got l={l}, t={t}")
    if sb.b_left.shape != (t, r) or sb.b_right.shape != (t, r):
        raise ProtographValidationError("shape", f"coupling blocks must be {t}x{r}")
    if sb.b_loc.shape != (l - t, r):
        raise ProtographValidationError("shape", f"local block must be {(l - t)}x{r}")
    for name, arr in (("b_left", sb.b_left), ("b_loc", sb.b_loc), ("b_right", sb.b_right)):
        if np.any(arr > 1):
            raise ProtographValidationError("binary", f"{name} must be binary")
    if t and np.any(sb.b_left.sum(axis=1) + sb.b_right.sum(axis=1) != r):
        raise ProtographValidationError("Eq.15a", "coupling row degrees must sum to r")
    if np.any(sb.b_loc.sum(axis=1) != r):
        raise ProtographValidationError("Eq.15b", "local rows must be full (all-ones)")
    if t and np.any(sb.b_left.sum(axis=0) + sb.b_right.sum(axis=0) != t):
        raise ProtographValidationError("Eq.15c", "coupling column degrees must sum to t")
    if np.any(sb.b_loc.sum(axis=0) != l - t):
        raise ProtographValidationError("Eq.15d", f"local column degrees must equal {l - t}")
    if t and np.any(sb.b_left + sb.b_right != 1):
        raise ProtographValidationError(
            "B_left+B_right=1", "coupling blocks must be element-wise complementary"
        )


@dataclass(frozen=True)
class CoupledChain:
    """M coupled copies of a sub-block, memory-1 diagonal placement."""

    sb: SubBlockProto
    m: int
    matrix: Protomatrix = field(init=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"need m >= 2 coupled copies, got {self.m}")
        sb = self.sb
        l, r, t = sb.l, sb.r, sb.t
        out = np.zeros((self.m * l + t, self.m * r), dtype=np.uint8)
        for k in range(self.m):
            r0, c0 = k * l, k * r
            if t:
                out[r0 : r0 + t, c0 : c0 + r] = sb.b_left
                out[r0 + l : r0 + l + t, c0 : c0 + r] = sb.b_right
            out[r0 + t : r0 + l, c0 : c0 + r] = sb.b_loc
        object.__setattr__(self, "matrix", Protomatrix(out))


def degree_profile(a) -> DegreeProfile:
    """Row and column sums of a protomatrix (or raw array)."""
    arr = a.entries if isinstance(a, Protomatrix) else np.asarray(a)
    return DegreeProfile(arr.sum(axis=1), arr.sum(axis=0))


def is_realizable_binary(dp: DegreeProfile) -> bool:
    """Gale-Ryser test: does a binary matrix with these margins exist?"""
    d_c, d_v = dp.d_c, dp.d_v
    a, b = len(d_c), len(d_v)
    if np.any(d_c < 0) or np.any(d_v < 0) or np.any(d_c > b) or np.any(d_v > a):
        return False
    if d_c.sum() != d_v.sum():
        return False
    rows = np.sort(d_c)[::-1]
    for k in range(1, a + 1):
        if rows[:k].sum() > np.minimum(d_v, k).sum():
            return False
    return True


def cutting_vector_sb(l: int, r: int, t: int) -> SubBlockProto:
    """Uniform-staircase coupling: b_left[i, j] = 1 iff j <= (i+1)*w, w = floor(r/(t+1))."""
    if not (1 <= t <= l - 2):
        raise ValueError(f"need 1 <= t <= l-2, got l={l}, t={t}")
    if r < t + 1:
        raise ValueError(f"need r >= t+1, got r={r}, t={t}")
    w = r // (t + 1)
    b_left = np.zeros((t, r), dtype=np.uint8)
    for i in range(t):
        b_left[i, : (i + 1) * w] = 1
    return SubBlockProto(l, r, t, b_left, np.ones((l - t, r), np.uint8), 1 - b_left)


def uncoupled_sb(l: int, r: int) -> SubBlockProto:
    """t = 0 sub-block: purely local (l, r)-regular code, no coupling rows."""
    empty = np.zeros((0, r), dtype=np.uint8)
    return SubBlockProto(l, r, 0, empty, np.ones((l, r), np.uint8), empty)


def couple(sb: SubBlockProto, m: int) -> CoupledChain:
    """Diagonally place m copies of [b_left; b_loc; b_right] (memory 1)."""
    return CoupledChain(sb, m)


def is_symmetric_degree_profile(dp: DegreeProfile, a: int, b: int) -> bool:
    """True iff sorted degrees pair up to b (rows) and a (columns)."""
    d_c, d_v = dp.d_c, dp.d_v
    if len(d_c) != a or len(d_v) != b:
        raise ValueError(f"profile shape ({len(d_c)}, {len(d_v)}) != ({a}, {b})")
    sc = np.sort(d_c)
    sv = np.sort(d_v)
    return bool(np.all(sc + sc[::-1] == b) and np.all(sv + sv[::-1] == a))


def _witness_t1(b_left, b_right):
    ones = list(np.nonzero(b_left[0])[0])
    zeros = list(np.nonzero(b_left[0] == 0)[0])
    col_perm = np.arange(b_left.shape[1])
    # swap the ones-positions with the zeros-positions pairwise
    for p, q in zip(ones, zeros):
        col_perm[p], col_perm[q] = q, p
    return PermutationWitness((0,), tuple(int(c) for c in col_perm))


def _witness_t2(b_left, b_right):
    r = b_left.shape[1]
    cols = b_left[0] + 2 * b_left[1]  # 0: none, 1: row0 only, 2: row1 only, 3: both
    j_both = list(np.nonzero(cols == 3)[0])
    j_none = list(np.nonzero(cols == 0)[0])
    if len(j_both) != len(j_none):
        return None
    col_perm = np.arange(r)
    for p, q in zip(j_both, j_none):
        col_perm[p], col_perm[q] = q, p
    return PermutationWitness((1, 0), tuple(int(c) for c in col_perm))


def _witness_search(b_left, b_right):
    """Backtracking over row assignments with column-multiset pruning."""
    t, r = b_left.shape
    rows_left = [tuple(row) for row in b_left]
    deg_left = b_left.sum(axis=1)
    deg_right = b_right.sum(axis=1)
    for row_perm in itertools.permutations(range(t)):
        if any(deg_left[row_perm[i]] != deg_right[i] for i in range(t)):
            continue
        permuted = b_left[list(row_perm), :]
        cols_p = sorted(map(tuple, permuted.T))
        cols_r = sorted(map(tuple, b_right.T))
        if cols_p != cols_r:
            continue
        # match equal column vectors to build the column permutation
        buckets = {}
        for j in range(r):
            buckets.setdefault(tuple(permuted[:, j]), []).append(j)
        col_perm = [0] * r
        ok = True
        for j in range(r):
            key = tuple(b_right[:, j])
            pool = buckets.get(key)
            if not pool:
                ok = False
                break
            col_perm[j] = pool.pop()
        if ok:
            return PermutationWitness(tuple(row_perm), tuple(col_perm))
    return None


def is_symmetric_sb(sb: SubBlockProto):
    """Witness (row, column permutations mapping b_left to b_right) or None."""
    t = sb.t
    if t == 0:
        return PermutationWitness((), ())
    dp = degree_profile(sb.b_left)
    if t <= 2:
        if not is_symmetric_degree_profile(dp, t, sb.r):
            return None
        witness = _witness_t1(sb.b_left, sb.b_right) if t == 1 else _witness_t2(sb.b_left, sb.b_right)
    else:
        if t > MAX_SYMMETRY_SEARCH_T:
            raise ValueError(f"symmetry search unsupported for t > {MAX_SYMMETRY_SEARCH_T}")
        witness = _witness_search(sb.b_left, sb.b_right)
    if witness is None:
        return None
    if not np.array_equal(witness.apply(sb.b_left), sb.b_right):
        # construction recipes cover t <= 2 exactly; fall back to search
        witness = _witness_search(sb.b_left, sb.b_right)
        if witness is None or not np.array_equal(witness.apply(sb.b_left), sb.b_right):
            return None
    return witness


def _canonical_key(b_left):
    rows = b_left[np.argsort(b_left.sum(axis=1), kind="stable"), :]
    return tuple(sorted(map(tuple, rows.T)))


def enumerate_symmetric_designs(l: int, r: int, t: int):
    """All symmetric sub-block designs for one t in {0, 1, 2}, canonical order.

    t=0: the single uncoupled design.  t=1: the left-aligned row of r/2 ones
    (only when r is even).  t=2: first row left-aligned with degree d1 in
    1..r/2, second row a contiguous run of r-d1 ones starting at offset j,
    keeping symmetric designs and deduplicating permutation-equivalent ones
    by their sorted column multiset.
    """
    if t > 2:
        raise ValueError("enumeration covers t <= 2")
    if l - t < 2:
        raise ValueError(f"need l-t >= 2, got l={l}, t={t}")
    if t == 0:
        return [uncoupled_sb(l, r)]
    if t == 1:
        if r % 2:
            return []
        b_left = np.zeros((1, r), np.uint8)
        b_left[0, : r // 2] = 1
        return [SubBlockProto(l, r, 1, b_left, np.ones((l - 1, r), np.uint8), 1 - b_left)]
    designs = []
    seen = set()
    for d1 in range(1, r // 2 + 1):
        d2 = r - d1
        for j in range(1, r - d2 + 2):
            b_left = np.zeros((2, r), np.uint8)
            b_left[0, :d1] = 1
            b_left[1, j - 1 : j - 1 + d2] = 1
            if not is_symmetric_degree_profile(degree_profile(b_left), 2, r):
                continue
            key = _canonical_key(b_left)
            if key in seen:
                continue
            seen.add(key)
            designs.append(SubBlockProto(l, r, 2, b_left, np.ones((l - 2, r), np.uint8), 1 - b_left))
    return designs


def load_protograph(source) -> SubBlockProto:
    """Parse a sub-block document: {"l", "r", "t", "b_left", "b_loc"?, "b_right"}.

    b_loc may be omitted (all-ones implied).  Validation errors name the
    first violated constraint (e.g. "Eq.15a").
    """
    if isinstance(source, (str, bytes)):
        with open(source) as fh:
            doc = json.load(fh)
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        doc = source
    try:
        l, r, t = int(doc["l"]), int(doc["r"]), int(doc["t"])
    except KeyError as exc:
        raise ProtographValidationError("missing-key", f"document lacks {exc}") from None
    for key in ("b_left", "b_right"):
        if key not in doc:
            raise ProtographValidationError("missing-key", f"document lacks '{key}'")
    b_left = np.asarray(doc["b_left"], dtype=np.int64).reshape(t, r) if t else np.zeros((0, r), int)
    b_right = np.asarray(doc["b_right"], dtype=np.int64).reshape(t, r) if t else np.zeros((0, r), int)
    if "b_loc" in doc and doc["b_loc"] is not None:
        b_loc = np.asarray(doc["b_loc"], dtype=np.int64)
    else:
        b_loc = np.ones((l - t, r), dtype=np.int64)
    return SubBlockProto(l, r, t, b_left, b_loc, b_right)


def dump_protograph(sb: SubBlockProto) -> dict:
    return {
        "l": sb.l,
        "r": sb.r,
        "t": sb.t,
        "b_left": sb.b_left.tolist(),
        "b_loc": sb.b_loc.tolist(),
        "b_right": sb.b_right.tolist(),
    }
