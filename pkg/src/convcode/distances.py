"""Distance parameters of convolutional codes.

Every family is available two ways: from the weight adjacency matrix (entry
delays of matrix powers, computed by min-plus products since all entries have
nonnegative coefficients and delays therefore add) and by brute-force
enumeration of message prefixes (``brute_*``), which works directly from the
encoder coefficients and never touches the WAM.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .code import ConvCode
from .config import check_budget, default_budgets
from .errors import BudgetExceededError, NotReducedError, PreconditionError
from .polyalg import PolyMatrix, is_reduced
from .wam import WAM, wam, wam_hat, wam_tilde
from .wenum import ONE, WPoly, WSeries, series_invert

INF = math.inf

FAMILIES = ("column", "extended_row", "active_column", "active_segment", "active_burst", "active_row")


@dataclass(frozen=True)
class DistanceProfile:
    family: str
    start: int
    values: tuple[float | int, ...]

    @property
    def jmax(self) -> int:
        return self.start + len(self.values) - 1

    def __getitem__(self, j: int) -> float | int:
        if not self.start <= j <= self.jmax:
            raise IndexError(f"j={j} outside {self.start}..{self.jmax}")
        return self.values[j - self.start]

    def items(self) -> list[tuple[int, float | int]]:
        return [(self.start + i, v) for i, v in enumerate(self.values)]

    def as_ints(self) -> list[int | str]:
        return [int(v) if v != INF else "inf" for v in self.values]


@dataclass(frozen=True)
class OmegaSeries:
    """Omega_1 .. Omega_N; Omega_l enumerates atomic codewords of degree l-1."""

    omegas: tuple[WPoly, ...]
    phi: WSeries | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.omegas)

    def __getitem__(self, l: int) -> WPoly:
        if not 1 <= l <= self.order:
            raise IndexError(f"Omega_{l} outside 1..{self.order}")
        return self.omegas[l - 1]

    def weight_enumerator(self) -> WSeries:
        return WSeries([ONE, *self.omegas], self.order)


def _wam_of(C: ConvCode) -> WAM:
    L = C.__dict__.get("_wam")
    if L is None:
        L = wam(C.reduced_encoder)
        C.__dict__["_wam"] = L
    return L


def _as_wam(C: ConvCode | WAM) -> WAM:
    return C if isinstance(C, WAM) else _wam_of(C)


# min-plus machinery on sparse delay matrices


class DelayMatrix:
    """Sparse matrix of entry delays; products are min-plus products."""

    def __init__(self, L: WAM):
        self.size = L.size
        self.xs, self.ys, self.ds = L.sparse_delays()

    def step(self, v: np.ndarray) -> np.ndarray:
        """Row vector v times the matrix in the (min, +) semiring."""
        out = np.full(self.size, INF)
        if len(self.xs):
            np.minimum.at(out, self.ys, v[self.xs] + self.ds)
        return out

    def dense(self) -> np.ndarray:
        D = np.full((self.size, self.size), INF)
        D[self.xs, self.ys] = self.ds
        return D


def _unit(size: int, i: int = 0) -> np.ndarray:
    v = np.full(size, INF)
    v[i] = 0.0
    return v


def _num(x: float) -> float | int:
    return INF if x == INF else int(x)


def delay_matrix_powers(L: WAM, jmax: int) -> list[np.ndarray]:
    """[M_1, ..., M_jmax] with M_j the entry delays of L^j (dense; small delta only)."""
    D = DelayMatrix(L).dense()
    out = [D]
    for _ in range(jmax - 1):
        P = out[-1]
        out.append(np.min(P[:, :, None] + D[None, :, :], axis=1))
    return out


def tilde_delay_matrices(C: ConvCode | WAM, jmax: int) -> list[np.ndarray]:
    """M_j = (del (tilde Lambda^j)_{X,Y}) for j = 1 .. jmax."""
    return delay_matrix_powers(wam_tilde(_as_wam(C)), jmax)


# WAM-based distances


def column_distances(C: ConvCode | WAM, jmax: int) -> DistanceProfile:
    """d^c_j = min_Y del((hat Lambda Lambda^j)_{0,Y})."""
    L = _as_wam(C)
    D = DelayMatrix(L)
    v = DelayMatrix(wam_hat(L)).step(_unit(L.size))
    vals = [v.min()]
    for _ in range(jmax):
        v = D.step(v)
        vals.append(v.min())
    return DistanceProfile("column", 0, tuple(_num(x) for x in vals))


def _tilde_iterates(L: WAM, start: np.ndarray, jmax: int) -> list[np.ndarray]:
    D = DelayMatrix(wam_tilde(L))
    out, v = [], start
    for _ in range(jmax + 1):
        v = D.step(v)
        out.append(v)
    return out


def burst_start(forney: Sequence[int]) -> int:
    """Smallest j for which the active burst distance is defined: min{1, nu_1, ..., nu_k}."""
    return min([1, *forney])


def active_distances(C: ConvCode | WAM, family: str, jmax: int, forney: Sequence[int] | None = None) -> DistanceProfile:
    """Active column / segment / burst distances from powers of tilde Lambda."""
    L = _as_wam(C)
    if family in ("column", "active_column"):
        vals = [v.min() for v in _tilde_iterates(L, _unit(L.size), jmax)]
        return DistanceProfile("active_column", 0, tuple(_num(x) for x in vals))
    if family in ("segment", "active_segment"):
        vals = [v.min() for v in _tilde_iterates(L, np.zeros(L.size), jmax)]
        return DistanceProfile("active_segment", 0, tuple(_num(x) for x in vals))
    if family in ("burst", "active_burst"):
        if forney is None:
            if isinstance(C, WAM):
                raise PreconditionError("Forney indices are needed for the burst range")
            forney = C.forney_indices
        j0 = burst_start(forney)
        if jmax < j0:
            raise PreconditionError(f"active burst distances start at j={j0}")
        vals = [v[0] for v in _tilde_iterates(L, _unit(L.size), jmax)]
        return DistanceProfile("active_burst", j0, tuple(_num(x) for x in vals[j0:]))
    raise ValueError(f"unknown active family {family!r}")


def omega_series(C: ConvCode | WAM, N: int | None = None) -> OmegaSeries:
    """Omega_1 .. Omega_N from we(C) = 2 - Phi^{-1}, Phi = sum_j L^j (hat Lambda^j)_{0,0}."""
    N = default_budgets().series_order if N is None else N
    L = _as_wam(C)
    H = wam_hat(L)
    vec: dict[int, WPoly] = {0: ONE}
    phi = [ONE]
    for _ in range(N):
        vec = H.row_times(vec)
        phi.append(vec.get(0, WPoly()))
    Phi = WSeries(phi, N)
    inv = series_invert(Phi)
    we = [(2 if l == 0 else 0) - inv[l] for l in range(N + 1)]
    if we[0] != ONE:
        raise AssertionError("weight enumerator must start with 1")
    return OmegaSeries(tuple(we[1:]), Phi)


def extended_row_distances(C: ConvCode | WAM, jmax: int) -> DistanceProfile:
    """hat d^r_j = del(Omega_{j+1})."""
    om = omega_series(C, jmax + 1)
    return DistanceProfile("extended_row", 0, tuple(om[j + 1].delay for j in range(jmax + 1)))


def active_burst_by_composition(C: ConvCode | WAM, jmax: int, forney: Sequence[int] | None = None) -> DistanceProfile:
    """a^b_j = min sum del(Omega_{M_l}) over compositions of j+1 into parts M_l >= 2."""
    if forney is None:
        if isinstance(C, WAM):
            raise PreconditionError("Forney indices are needed for the burst range")
        forney = C.forney_indices
    om = omega_series(C, jmax + 1)
    best = [0.0] + [INF] * (jmax + 1)
    for s in range(2, jmax + 2):
        best[s] = min((best[s - M] + om[M].delay for M in range(2, s + 1)), default=INF)
    j0 = burst_start(forney)
    return DistanceProfile("active_burst", j0, tuple(_num(best[j + 1]) for j in range(j0, jmax + 1)))


def free_distance(C: ConvCode | WAM, max_steps: int | None = None) -> int:
    """Running minimum of del(Omega_l); stops once every path of l+1 tilde-steps is heavier.

    Paths of tilde Lambda never use the trivial 0 -> 0 loop, so an atomic
    codeword of degree >= l traverses at least l+1 such steps and has weight
    at least a^s_l; once a^s_l exceeds the running minimum nothing longer can
    improve it.
    """
    max_steps = default_budgets().free_distance_steps if max_steps is None else max_steps
    L = _as_wam(C)
    H = wam_hat(L)
    Dt = DelayMatrix(wam_tilde(L))
    best = INF
    # Omega_1 collects the nonzero degree-0 codewords: the non-constant part of Lambda_{0,0}
    if H[0, 0]:
        best = H[0, 0].delay
    seg = np.zeros(L.size)  # min delay over all tilde paths of length l
    first = _unit(L.size)  # min delay over tilde paths from 0 avoiding 0 in the interior
    for l in range(1, max_steps + 1):
        # atomic codewords of degree >= l - 1 not seen yet have weight >= seg.min()
        if seg.min() >= best:
            return int(best)
        seg = Dt.step(seg)
        first = Dt.step(first)
        best = min(best, first[0])
        first[0] = INF
    raise BudgetExceededError(f"free distance not certified within {max_steps} steps")


# brute force from the encoder coefficients


@dataclass
class PathBatch:
    """All message prefixes u_0 .. u_{T-1} with their states and outputs.

    states[:, t] is x_t for t = 0 .. T, outputs[:, t] is v_t for t = 0 .. T-1.
    States are the controller-canonical ones: per row i the last nu_i inputs.
    """

    messages: np.ndarray  # (N, T, k)
    states: np.ndarray  # (N, T+1, delta)
    outputs: np.ndarray  # (N, T, n)


def enumerate_paths(G: PolyMatrix, T: int, budget: int | None = None) -> PathBatch:
    if not is_reduced(G):
        raise NotReducedError("brute force needs a reduced encoder")
    F = G.field
    q, k, n = F.q, G.k, G.n
    budget = default_budgets().enumeration if budget is None else budget
    check_budget(q ** (k * T), budget, "message enumeration")
    nu = [int(d) for d in G.row_degrees()]
    delta = sum(nu)
    flat = linalg.all_vectors(F, k * T)
    msgs = flat.reshape(-1, T, k)
    N = len(msgs)
    mdeg = max(nu, default=0)
    coeffs = [G.coefficient(s) for s in range(mdeg + 1)]
    outputs = np.zeros((N, T, n), dtype=np.int64)
    for t in range(T):
        acc = np.zeros((N, n), dtype=np.int64)
        for s in range(min(t, mdeg) + 1):
            acc = linalg.np_add(F, acc, linalg.np_matmul(F, msgs[:, t - s, :], coeffs[s], n))
        outputs[:, t] = acc
    states = np.zeros((N, T + 1, delta), dtype=np.int64)
    off = 0
    for i, ni in enumerate(nu):
        for r in range(ni):
            # coordinate r of block i at time t is u_{i, t-1-r}
            for t in range(r + 1, T + 1):
                states[:, t, off + r] = msgs[:, t - 1 - r, i]
        off += ni
    return PathBatch(msgs, states, outputs)


def _weights(outputs: np.ndarray, lo: int, hi: int) -> np.ndarray:
    return np.count_nonzero(outputs[:, lo:hi + 1, :], axis=(1, 2))


def _no_zero_pairs(states: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """(x_i, x_{i+1}) != (0, 0) for all i in lo .. hi."""
    nz = np.any(states != 0, axis=2)
    ok = np.ones(len(states), dtype=bool)
    for i in range(lo, hi + 1):
        ok &= nz[:, i] | nz[:, i + 1]
    return ok


def _min_or_inf(w: np.ndarray) -> float | int:
    return int(w.min()) if w.size else INF


def _encoder(C: ConvCode | PolyMatrix) -> PolyMatrix:
    return C.reduced_encoder if isinstance(C, ConvCode) else C


def brute_column_distance(C: ConvCode | PolyMatrix, j: int) -> float | int:
    P = enumerate_paths(_encoder(C), j + 1)
    mask = np.any(P.outputs[:, 0, :] != 0, axis=1)
    return _min_or_inf(_weights(P.outputs[mask], 0, j))


def brute_active_column(C: ConvCode | PolyMatrix, j: int) -> float | int:
    P = enumerate_paths(_encoder(C), j + 1)
    mask = _no_zero_pairs(P.states, 0, j)
    return _min_or_inf(_weights(P.outputs[mask], 0, j))


def brute_active_burst(C: ConvCode | PolyMatrix, j: int) -> float | int:
    P = enumerate_paths(_encoder(C), j + 1)
    mask = _no_zero_pairs(P.states, 0, j) & ~np.any(P.states[:, j + 1, :] != 0, axis=1)
    return _min_or_inf(_weights(P.outputs[mask], 0, j))


def brute_active_segment(C: ConvCode | PolyMatrix, j: int) -> float | int:
    G = _encoder(C)
    m = int(max(G.row_degrees(), default=0))
    P = enumerate_paths(G, m + j + 1)
    mask = _no_zero_pairs(P.states, m, m + j)
    return _min_or_inf(_weights(P.outputs[mask], m, m + j))


def _atomic_mask(P: PathBatch, deg: int) -> np.ndarray:
    """Messages of length deg+1 whose full codeword is atomic of degree exactly deg."""
    nz_state = np.any(P.states != 0, axis=2)
    ok = np.any(P.outputs[:, 0, :] != 0, axis=1)
    ok &= np.all(nz_state[:, 1:deg + 1], axis=1)
    # the codeword must end: state returns to zero right after time deg
    ok &= ~nz_state[:, deg + 1]
    ok &= np.any(P.outputs[:, deg, :] != 0, axis=1)
    return ok


def brute_extended_row(C: ConvCode | PolyMatrix, j: int) -> float | int:
    P = enumerate_paths(_encoder(C), j + 1)
    return _min_or_inf(_weights(P.outputs[_atomic_mask(P, j)], 0, j))


def brute_omegas(C: ConvCode | PolyMatrix, N: int) -> tuple[WPoly, ...]:
    """Omega_1 .. Omega_N by enumerating every message of degree <= N-1."""
    out = []
    for l in range(1, N + 1):
        P = enumerate_paths(_encoder(C), l)
        w = _weights(P.outputs[_atomic_mask(P, l - 1)], 0, l - 1)
        out.append(WPoly(np.bincount(w).tolist()) if w.size else WPoly())
    return tuple(out)


def brute_free_distance(C: ConvCode | PolyMatrix, max_deg: int) -> int:
    """Minimum weight of nonzero codewords generated by messages of degree <= max_deg."""
    G = _encoder(C)
    m = int(max(G.row_degrees(), default=0))
    P = enumerate_paths(G, max_deg + 1)
    full = _tail_outputs(G, P, m)
    w = np.count_nonzero(full, axis=(1, 2))
    nonzero = np.any(P.messages != 0, axis=(1, 2))
    return int(w[nonzero].min())


def _tail_outputs(G: PolyMatrix, P: PathBatch, m: int) -> np.ndarray:
    """Outputs including the m flush steps after the message ends."""
    F = G.field
    N, T, k = P.messages.shape
    padded = np.concatenate([P.messages, np.zeros((N, m, k), dtype=np.int64)], axis=1)
    coeffs = [G.coefficient(s) for s in range(m + 1)]
    out = np.zeros((N, T + m, G.n), dtype=np.int64)
    for t in range(T + m):
        acc = np.zeros((N, G.n), dtype=np.int64)
        for s in range(min(t, m) + 1):
            acc = linalg.np_add(F, acc, linalg.np_matmul(F, padded[:, t - s, :], coeffs[s], G.n))
        out[:, t] = acc
    return out


def active_row_distances(G: PolyMatrix, jmax: int) -> DistanceProfile:
    """a^r_j = min wt(uG) over u with deg u = j and uG in S_j (brute force)."""
    if not is_reduced(G):
        raise NotReducedError("active row distances need a reduced encoder")
    m = int(max(G.row_degrees(), default=0))
    vals = []
    for j in range(jmax + 1):
        P = enumerate_paths(G, j + 1)
        full = _tail_outputs(G, P, m)
        # pad states through time j+1 (already present since T = j+1)
        mask = _no_zero_pairs(P.states, 0, j) & np.any(P.messages[:, j, :] != 0, axis=1)
        vals.append(_min_or_inf(np.count_nonzero(full[mask], axis=(1, 2))))
    return DistanceProfile("active_row", 0, tuple(vals))


def brute_profile(C: ConvCode, family: str, jmax: int) -> DistanceProfile:
    """Def-level brute force for any WAM-computable family."""
    fn = {
        "column": brute_column_distance,
        "active_column": brute_active_column,
        "active_segment": brute_active_segment,
        "extended_row": brute_extended_row,
        "active_burst": brute_active_burst,
    }[family]
    start = burst_start(C.forney_indices) if family == "active_burst" else 0
    return DistanceProfile(family, start, tuple(fn(C, j) for j in range(start, jmax + 1)))


def profile(C: ConvCode, family: str, jmax: int) -> DistanceProfile:
    """WAM-based profile for any family name in FAMILIES (active_row uses the reduced encoder)."""
    if family == "column":
        return column_distances(C, jmax)
    if family == "extended_row":
        return extended_row_distances(C, jmax)
    if family == "active_row":
        return active_row_distances(C.reduced_encoder, jmax)
    if family in FAMILIES:
        return active_distances(C, family, jmax)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
