"""Reproduction suite for the worked examples.

Each example is a function yielding :class:`Check` records; the expected
values below are the published ones, and the encoders come from the bundled
data files so the CLI and the tests read the same matrices.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import linalg
from .code import ConvCode
from .distances import (
    INF,
    active_burst_by_composition,
    active_distances,
    active_row_distances,
    column_distances,
    extended_row_distances,
    free_distance,
    omega_series,
    tilde_delay_matrices,
)
from .equivalence import (
    code_isometric,
    code_me,
    code_strongly_isometric,
    matrix_zme,
    orbit_size,
    paired_isometry,
    reduced_encoder_orbit,
    reduced_encoder_transforms,
)
from .io import example_encoder
from .polyalg import Poly, PolyMatrix, forney_indices, is_basic, is_reduced, matrix_degree, reduce, weight
from .wam import WAM, check_state_map, wam, wam_equivalent


@dataclass(frozen=True)
class Check:
    example: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status}  {self.example}: {self.name}{tail}"


def _check(example: str, name: str, got: Any, want: Any) -> Check:
    ok = bool(np.array_equal(got, want)) if isinstance(got, np.ndarray) else got == want
    return Check(example, name, ok, "" if ok else f"got {got!r}, expected {want!r}")


def _code(name: str) -> ConvCode:
    return ConvCode(example_encoder(name))


def _wam_strings(L: WAM) -> list[list[str]]:
    return L.to_strings()


def _closed(rows: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array(rows, dtype=float)


# exa3.1: strongly isometric 1 x 4 encoders with different WAMs


def _m31(j: int) -> tuple[np.ndarray, np.ndarray]:
    if j % 2 == 0:
        c = 5 * j // 2
        return _closed([[c, c], [c + 1, c]]), _closed([[c, c + 2], [c - 1, c]])
    c = 5 * (j - 1) // 2
    return _closed([[c + 3, c + 2], [c + 3, c + 3]]), _closed([[c + 3, c + 4], [c + 1, c + 3]])


def exa3_1() -> Iterator[Check]:
    ex = "exa3.1"
    C, Cp = _code("exa3.1-G"), _code("exa3.1-Gp")
    yield _check(ex, "WAM of G", _wam_strings(wam(C.reduced_encoder)), [["1", "W^2"], ["W^3", "W^3"]])
    yield _check(ex, "WAM of G'", _wam_strings(wam(Cp.reduced_encoder)), [["1", "W^4"], ["W", "W^3"]])
    dc, dcp = column_distances(C, 10), column_distances(Cp, 10)
    yield _check(ex, "d^c_0 = 2 and 4", (dc[0], dcp[0]), (2, 4))
    yield _check(ex, "d^c_j = 5 for j = 1..10", (dc.values[1:], dcp.values[1:]), ((5,) * 10, (5,) * 10))
    yield _check(ex, "free distance 5", (free_distance(C), free_distance(Cp)), (5, 5))
    M, Mp = tilde_delay_matrices(C, 10), tilde_delay_matrices(Cp, 10)
    yield _check(ex, "M_1", M[0], _closed([[INF, 2], [3, 3]]))
    yield _check(ex, "M'_1", Mp[0], _closed([[INF, 4], [1, 3]]))
    for j in range(2, 11):
        want, wantp = _m31(j)
        yield _check(ex, f"closed forms M_{j}, M'_{j}", (M[j - 1].tolist(), Mp[j - 1].tolist()), (want.tolist(), wantp.tolist()))
    ac, acp = active_distances(C, "column", 10), active_distances(Cp, "column", 10)
    differ = [j for j in range(11) if ac[j] != acp[j]]
    yield _check(ex, "active column distances differ exactly at even j", differ, list(range(0, 11, 2)))
    sg, sgp = active_distances(C, "segment", 10), active_distances(Cp, "segment", 10)
    yield _check(ex, "active segment distances differ for all j", all(sg[j] != sgp[j] for j in range(11)), True)
    yield _check(ex, "same weight enumerator", omega_series(C, 8), omega_series(Cp, 8))
    yield _check(ex, "same extended row distances", extended_row_distances(C, 8), extended_row_distances(Cp, 8))
    yield _check(ex, "same active burst distances", active_distances(C, "burst", 8), active_distances(Cp, "burst", 8))
    yield _check(ex, "same active row distances", active_row_distances(C.reduced_encoder, 5), active_row_distances(Cp.reduced_encoder, 5))
    yield _check(ex, "strongly isometric", code_strongly_isometric(C, Cp) is not None, True)


# exa3.2 and the appendix tables


LAMBDA_32 = [
    ["1+W", "W^3+W^4", "W^5+W^6", "W^2+W^3"],
    ["W+W^2", "W^4+W^5", "W^4+W^5", "W+W^2"],
    ["W+W^2", "W^4+W^5", "W^6+W^7", "W^3+W^4"],
    ["W^2+W^3", "W^5+W^6", "W^5+W^6", "W^2+W^3"],
]
LAMBDA_32P = [
    ["1+W", "W^2+W^3", "W^5+W^6", "W^3+W^4"],
    ["W^2+W^3", "W^4+W^5", "W^5+W^6", "W^3+W^4"],
    ["W+W^2", "W^3+W^4", "W^6+W^7", "W^4+W^5"],
    ["W+W^2", "W^3+W^4", "W^4+W^5", "W^2+W^3"],
]


def exa3_2() -> Iterator[Check]:
    ex = "exa3.2"
    C, Cp = _code("exa3.2-G"), _code("exa3.2-Gp")
    L, Lp = wam(C.reduced_encoder), wam(Cp.reduced_encoder)
    yield _check(ex, "WAM of G", _wam_strings(L), LAMBDA_32)
    yield _check(ex, "WAM of G'", _wam_strings(Lp), LAMBDA_32P)
    count = lambda M: sum(str(e) == "W^5+W^6" for r in M.dense() for e in r)
    yield _check(ex, "W^5+W^6 appears 3 and 2 times", (count(L), count(Lp)), (3, 2))
    yield _check(ex, "WAMs not equivalent", wam_equivalent(L, Lp), None)
    yield _check(ex, "not ME", code_me(C, Cp), None)
    w = code_strongly_isometric(C, Cp)
    yield _check(ex, "strongly isometric", w is not None and w.verify(), True)
    yield _check(ex, "column distances all 1", (column_distances(C, 8).values, column_distances(Cp, 8).values), ((1,) * 9, (1,) * 9))
    yield _check(ex, "free distance 1", (free_distance(C), free_distance(Cp)), (1, 1))
    yield _check(ex, "same weight enumerator", omega_series(C, 8), omega_series(Cp, 8))
    yield _check(ex, "same extended row distances", extended_row_distances(C, 8), extended_row_distances(Cp, 8))
    yield _check(ex, "same active burst distances", active_distances(C, "burst", 8), active_distances(Cp, "burst", 8))
    yield _check(ex, "same active row distances", active_row_distances(C.reduced_encoder, 4), active_row_distances(Cp.reduced_encoder, 4))


APPENDIX_M = [
    [[INF, 3, 5, 2], [1, 4, 4, 1], [1, 4, 6, 3], [2, 5, 5, 2]],
    [[4, 7, 7, 4], [3, 4, 6, 3], [5, 4, 6, 3], [4, 5, 7, 4]],
    [[6, 7, 9, 6], [5, 6, 8, 5], [5, 8, 8, 5], [6, 7, 9, 6]],
]
APPENDIX_MP = [
    [[INF, 2, 5, 3], [2, 4, 5, 3], [1, 3, 6, 4], [1, 3, 4, 2]],
    [[4, 6, 7, 5], [4, 4, 7, 5], [5, 3, 6, 4], [3, 3, 6, 4]],
    [[6, 6, 9, 7], [6, 6, 9, 7], [5, 7, 8, 6], [5, 5, 8, 6]],
]


def appendix_closed(j: int) -> tuple[list[list[int]], list[list[int]]]:
    """Delay matrices M_j, M'_j of the exa3.2 codes for j >= 4."""
    t = 2 * j
    M = [[t, t + 1, t + 3, t], [t - 1, t, t + 2, t - 1], [t - 1, t, t + 2, t - 1], [t, t + 1, t + 3, t]]
    Mp = [[t, t, t + 3, t + 1], [t, t, t + 3, t + 1], [t - 1, t - 1, t + 2, t], [t - 1, t - 1, t + 2, t]]
    return M, Mp


def appendix() -> Iterator[Check]:
    ex = "appendix"
    C, Cp = _code("exa3.2-G"), _code("exa3.2-Gp")
    M, Mp = tilde_delay_matrices(C, 10), tilde_delay_matrices(Cp, 10)
    for j in range(1, 4):
        yield _check(ex, f"M_{j}", M[j - 1], _closed(APPENDIX_M[j - 1]))
        yield _check(ex, f"M'_{j}", Mp[j - 1], _closed(APPENDIX_MP[j - 1]))
    for j in range(4, 11):
        want, wantp = appendix_closed(j)
        yield _check(ex, f"closed forms M_{j}, M'_{j}", (M[j - 1].tolist(), Mp[j - 1].tolist()), (want, wantp))
    want_c = tuple(2 * (j + 1) for j in range(9))
    want_s = tuple(2 * j + 1 for j in range(9))
    for tag, D in (("G", C), ("G'", Cp)):
        yield _check(ex, f"a^c_j = 2(j+1), j <= 8, {tag}", active_distances(D, "column", 8).values, want_c)
        yield _check(ex, f"a^s_j = 2j+1, j <= 8, {tag}", active_distances(D, "segment", 8).values, want_s)


# exa3.3: same WAM through a nontrivial state map, yet not ME


LAMBDA_33 = [
    ["1+W^6", "W^3+W^5", "W^3+W^5", "W^2+W^4"],
    ["W+W^7", "W^4+W^6", "W^4+W^6", "W^3+W^5"],
    ["W^2+W^4", "W^3+W^5", "W^3+W^5", "W^2+W^4"],
    ["W^3+W^5", "W^4+W^6", "W^4+W^6", "W^3+W^5"],
]
LAMBDA_33B = [
    ["1+W^6", "W^3+W^5", "W^2+W^4", "W^3+W^5"],
    ["W+W^7", "W^4+W^6", "W^3+W^5", "W^4+W^6"],
    ["W^3+W^5", "W^4+W^6", "W^3+W^5", "W^4+W^6"],
    ["W^2+W^4", "W^3+W^5", "W^2+W^4", "W^3+W^5"],
]


def exa3_3() -> Iterator[Check]:
    ex = "exa3.3"
    C, Cb = _code("exa3.3-G"), _code("exa3.3-Gb")
    G, Gb = C.generator, Cb.generator
    yield _check(ex, "both encoders basic and reduced", (is_basic(G), is_reduced(G), is_basic(Gb), is_reduced(Gb)), (True,) * 4)
    L, Lb = wam(G), wam(Gb)
    yield _check(ex, "WAM of G", _wam_strings(L), LAMBDA_33)
    yield _check(ex, "WAM of G-bar", _wam_strings(Lb), LAMBDA_33B)
    T = wam_equivalent(L, Lb)
    yield _check(ex, "state map T = ((1,1),(0,1))", T, [[1, 1], [0, 1]])
    yield _check(ex, "Lambda_{XT,YT} = Lambda-bar_{X,Y}", T is not None and check_state_map(Lb, L, T), True)
    M = matrix_zme(G, Gb)
    yield _check(ex, "matrices zME via columns 7, 8", None if M is None else M.exponents, (0, 0, 0, 0, 0, 0, -1, 1))
    yield _check(ex, "strongly isometric", code_strongly_isometric(C, Cb) is not None, True)
    F = G.field
    Tpoly = PolyMatrix.from_constant(F, [[1, 1], [0, 1]])
    fixed_v = sum(1 for U in reduced_encoder_transforms(F, (1, 1, 0)) if [[U[i, j] for j in range(2)] for i in range(2)] == [list(r) for r in Tpoly.rows])
    yield _check(ex, "16 transforms with V = T", fixed_v, 16)
    yield _check(ex, "orbit size 6 * 16", orbit_size(2, (1, 1, 0)), 96)
    yield _check(ex, "not ME", code_me(C, Cb), None)


# exa3.4/4.3 (non-reduced encoder): isometric but not strongly isometric


def exa4_3() -> Iterator[Check]:
    ex = "exa3.4/4.3"
    G, Gb = example_encoder("exa4.3-G"), example_encoder("exa4.3-Gb")
    Gp, Gt1, Gt2 = (example_encoder(f"exa4.3-{s}") for s in ("Gp", "Gt1", "Gt2"))
    yield _check(ex, "G basic and reduced, G-bar basic and not reduced", (is_basic(G), is_reduced(G), is_basic(Gb), is_reduced(Gb)), (True, True, True, False))
    C, Cb = ConvCode(G), ConvCode(Gb)
    yield _check(ex, "G' is a reduced encoder of the second code", ConvCode(Gp) == Cb and is_reduced(Gp), True)
    yield _check(ex, "degree 4, Forney indices 2, 2", (C.degree, Cb.degree, C.forney_indices, Cb.forney_indices), (4, 4, (2, 2), (2, 2)))
    _, R = reduce(Gb)
    yield _check(ex, "row reduction of G-bar is reduced with indices 2, 2", (is_reduced(R), forney_indices(R), matrix_degree(R)), (True, (2, 2), 4))
    yield _check(ex, "G and G-bar zME", matrix_zme(G, Gb) is not None, True)
    yield _check(ex, "wt(uG) = wt(uG-bar) for deg u <= nu", paired_isometry(G, Gb), True)
    F = G.field
    u = (Poly(F, (1, 1)), Poly(F, ()))
    wts = tuple(weight(M.left_mul_vector(u)) for M in (G, Gt1, Gt2))
    yield _check(ex, "weights 4/6/8 for u = (z+1, 0)", wts, (4, 6, 8))
    heavy = [M for M in reduced_encoder_orbit(Gp) if all(weight(r) == 4 for r in M.rows)]
    yield _check(ex, "only G~1, G~2 have both row weights 4", sorted(M.to_strings() for M in heavy), sorted([Gt1.to_strings(), Gt2.to_strings()]))
    yield _check(ex, "G and G~1 not paired isometric", paired_isometry(G, Gt1), False)
    w = code_isometric(C, Cb)
    yield _check(ex, "codes isometric", w is not None and w.verify(), True)
    yield _check(ex, "codes not strongly isometric", code_strongly_isometric(C, Cb), None)


# exa4.2: same WAM, not isometric


def exa4_2() -> Iterator[Check]:
    ex = "exa4.2"
    C, Cb = _code("exa4.2-G"), _code("exa4.2-Gb")
    T = wam_equivalent(wam(C.reduced_encoder), wam(Cb.reduced_encoder))
    yield _check(ex, "same WAM", T is not None, True)
    yield _check(ex, "not ME", code_me(C, Cb), None)
    yield _check(ex, "not isometric", code_isometric(C, Cb), None)


# exa4.3': strongly isometric codes with non-isometric duals


def exa4_3p() -> Iterator[Check]:
    ex = "exa4.3'"
    C, Cb = _code("exa4.3p-G"), _code("exa4.3p-Gb")
    w = code_strongly_isometric(C, Cb)
    yield _check(ex, "strongly isometric", w is not None and w.verify(), True)
    yield _check(ex, "not ME", code_me(C, Cb), None)
    D, Db = C.dual(), Cb.dual()
    yield _check(ex, "dual of first code = im H", D == _code("exa4.3p-H"), True)
    yield _check(ex, "dual of second code = im H-bar", Db == _code("exa4.3p-Hb"), True)
    yield _check(ex, "duals not isometric", code_isometric(D, Db), None)
    yield _check(ex, "dual and C-hat not ME", code_me(D, _code("exa4.3p-Hhat")), None)


# Remark on active row distances: an encoder property, not a code property


def rem2_3() -> Iterator[Check]:
    ex = "rem2.3"
    G, Gp = example_encoder("rem2.3-G"), example_encoder("rem2.3-Gp")
    yield _check(ex, "same code", ConvCode(G) == ConvCode(Gp), True)
    yield _check(ex, "a^r_1 = 3 and 2", (active_row_distances(G, 1)[1], active_row_distances(Gp, 1)[1]), (3, 2))
    F = G.field
    u = (Poly(F, (1,)), Poly(F, (0, 1)))
    yield _check(ex, "wt((1,z)G) = 3, wt((1,z)G') = 2", (weight(G.left_mul_vector(u)), weight(Gp.left_mul_vector(u))), (3, 2))


# GF(4) arithmetic: a degree- and weight-preserving F-linear map between two codes


def _phi_shift_check(G: PolyMatrix, Gb: PolyMatrix, t: int) -> bool:
    F = G.field
    S = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    a2 = F.parse_element("a2")
    S2 = linalg.matmul(F, S, S, 3)
    aS = [[F.mul(a2, c) for c in r] for r in S]
    Ms = (linalg.identity(3), S2, aS)
    scale = a2 if t % 3 == 2 else 1
    row, rowb = G.rows[0], Gb.rows[0]
    for s in range(int(G.max_degree()) + 1):
        vs = [p[s] for p in row]
        image = linalg.vecmat(F, vs, Ms[(t + s) % 3], 3)
        if image != [F.mul(scale, p[s]) for p in rowb]:
            return False
    return True


def gf4_5_1() -> Iterator[Check]:
    ex = "gf4-5.1"
    G, Gb = example_encoder("gf4-5.1-G"), example_encoder("gf4-5.1-Gb")
    F = G.field
    yield _check(ex, "alpha^2 = alpha + 1", F.mul(2, 2), 3)
    yield _check(ex, "both encoders basic", (is_basic(G), is_basic(Gb)), (True, True))
    for t in range(9):
        yield _check(ex, f"phi(z^{t} G) relation", _phi_shift_check(G, Gb, t), True)
    C, Cb = ConvCode(G), ConvCode(Gb)
    yield _check(ex, "identical Omega series to order 6", omega_series(C, 6), omega_series(Cb, 6))
    yield _check(ex, "encoders not zME", matrix_zme(G, Gb), None)
    yield _check(ex, "different WAMs", wam_equivalent(wam(C.reduced_encoder), wam(Cb.reduced_encoder)), None)


EXAMPLES: dict[str, Callable[[], Iterator[Check]]] = {
    "exa3.1": exa3_1,
    "exa3.2": exa3_2,
    "exa3.3": exa3_3,
    "exa3.4/4.3": exa4_3,
    "exa4.2": exa4_2,
    "exa4.3'": exa4_3p,
    "rem2.3": rem2_3,
    "appendix": appendix,
    "gf4-5.1": gf4_5_1,
}


def run(names: Sequence[str] | None = None) -> list[Check]:
    names = list(EXAMPLES) if names is None else list(names)
    unknown = [n for n in names if n not in EXAMPLES]
    if unknown:
        raise KeyError(f"unknown example(s): {', '.join(unknown)}")
    out: list[Check] = []
    for n in names:
        out.extend(EXAMPLES[n]())
    return out


def active_burst_agreement(C: ConvCode, jmax: int) -> bool:
    """Both active burst formulas give the same profile."""
    return active_distances(C, "burst", jmax) == active_burst_by_composition(C, jmax)
