"""Randomized and exhaustive property suites for the structural results.

Each suite returns a :class:`PropertyResult` with the number of instances
examined, how many of them the property actually constrained, and the
violations found.  The acceptance tests and ``scripts/property_suites.py``
both call these.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .code import ConvCode
from .distances import (
    FAMILIES,
    active_burst_by_composition,
    active_distances,
    active_row_distances,
    brute_profile,
    burst_start,
    extended_row_distances,
    omega_series,
    profile,
)
from .equivalence import (
    ZMonomialMatrix,
    code_isometric,
    code_me,
    code_strongly_isometric,
    encoders_strongly_isometric,
    is_delay_free,
    matrix_me,
    matrix_zme,
    me_key,
    paired_isometry,
    weight_profile_constant,
)
from .errors import NotPolynomialError
from .gf import GF, Field
from .polyalg import Poly, PolyMatrix, delay, is_basic, is_reduced, weight
from .realization import is_atomic
from .sampling import (
    polynomial_zmonomial,
    random_matrix,
    random_message,
    random_monomial,
    random_reduced_encoder,
    random_unimodular,
)
from .wam import wam, wam_equivalent


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    relevant: int = 0
    violations: list[str] = field(default_factory=list)
    outcomes: dict[str, int] = field(default_factory=dict)

    def note(self, outcome: bool) -> None:
        """Count which side of a biconditional an instance fell on."""
        key = "both" if outcome else "neither"
        self.outcomes[key] = self.outcomes.get(key, 0) + 1

    @property
    def passed(self) -> bool:
        return not self.violations and self.relevant > 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"; first: {self.violations[0]}" if self.violations else ""
        seen = "".join(f", {k} {v}" for k, v in sorted(self.outcomes.items()))
        return f"{status}  {self.name}: {self.trials} trials, {self.relevant} relevant{seen}, {len(self.violations)} violations{tail}"


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _perturb(G: PolyMatrix, rng: np.random.Generator) -> PolyMatrix:
    """Change one coefficient of one entry."""
    F = G.field
    rows = [list(r) for r in G.rows]
    i, j = int(rng.integers(0, G.k)), int(rng.integers(0, G.n))
    d = max(int(G.max_degree()), 0)
    s = int(rng.integers(0, d + 1))
    c = list(rows[i][j].coeffs) + [0] * (d + 1)
    c[s] = F.add(c[s], int(rng.integers(1, F.q)))
    rows[i][j] = Poly(F, c)
    return PolyMatrix(F, rows, n=G.n)


def weight_iff_zme(trials: int = 100, seed: int = 1) -> PropertyResult:
    """Weights of uG, u Gb agree for all short u exactly when G, Gb are zME (matrix level)."""
    res = PropertyResult("paired isometry <=> matrix zME")
    rng = _rng(seed)
    for t in range(trials):
        F = GF((2, 3)[t % 2])
        k, n = 1 + t % 2, 2 + t % 3
        G = random_matrix(F, k, n, 2, rng)
        Gb = polynomial_zmonomial(G, rng).apply(G)
        if t % 4 >= 2:
            Gb = _perturb(Gb, rng)
        res.trials += 1
        res.relevant += 1
        iso = paired_isometry(G, Gb)
        zme = matrix_zme(G, Gb) is not None
        res.note(iso)
        if iso != zme:
            res.violations.append(f"{G} vs {Gb}: isometric={iso}, zME={zme}")
    return res


def _column_multisets(q: int, k: int, n: int):
    return itertools.combinations_with_replacement(range(q**k), n)


def block_weights_iff_me(kmax: int = 3, nmax: int = 6) -> PropertyResult:
    """Constant binary matrices: equal weight profiles exactly when ME (exhaustive).

    Over GF(2) two matrices are ME iff their column multisets agree, so it
    suffices to check that distinct multisets give distinct weight profiles
    and that the library's ME test and key agree on every reordering.
    """
    res = PropertyResult(f"block MacWilliams, q=2, k<={kmax}, n<={nmax}")
    F = GF(2)
    rng = _rng(0)
    for k in range(1, kmax + 1):
        cols = [[(c >> (k - 1 - i)) & 1 for i in range(k)] for c in range(2**k)]
        for n in range(1, nmax + 1):
            seen: dict[bytes, tuple[int, ...]] = {}
            for ms in _column_multisets(2, k, n):
                G = [[cols[c][i] for c in ms] for i in range(k)]
                prof = weight_profile_constant(G, F).tobytes()
                res.trials += 1
                res.relevant += 1
                if prof in seen:
                    res.violations.append(f"k={k} n={n}: {seen[prof]} and {ms} share weights")
                seen[prof] = ms
                perm = rng.permutation(n)
                Gp = [[row[p] for p in perm] for row in G]
                A, B = PolyMatrix.from_constant(F, G), PolyMatrix.from_constant(F, Gp)
                M = matrix_me(A, B)
                if M is None or M.apply(A) != B or me_key(A) != me_key(B):
                    res.violations.append(f"k={k} n={n}: reordering of {ms} not recognised as ME")
    return res


def _reduced_encoders(F: Field, nu: tuple[int, ...], n: int):
    polys = {d: [Poly(F, c) for c in itertools.product(range(F.q), repeat=d + 1)] for d in set(nu)}
    for rows in itertools.product(*[itertools.product(polys[d], repeat=n) for d in nu]):
        G = PolyMatrix(F, [list(r) for r in rows], n=n)
        if tuple(G.row_degrees()) == nu and is_reduced(G) and is_basic(G):
            yield G


def positive_indices_wam_iff_me(random_trials: int = 60, seed: int = 2) -> PropertyResult:
    """All Forney indices positive: Lambda(G) = Lambda(Gb) exactly when G, Gb are ME.

    Exhaustive over binary reduced encoders with shapes (k, n, nu) in a small
    list, plus random pairs that share a WAM by construction or by chance.
    """
    res = PropertyResult("positive Forney indices: equal WAM <=> ME")
    F = GF(2)
    for nu, n in (((1,), 2), ((1,), 3), ((2,), 2), ((2,), 3), ((1, 1), 3)):
        encs = list(_reduced_encoders(F, nu, n))
        by_wam: dict[object, list[PolyMatrix]] = {}
        for G in encs:
            by_wam.setdefault(wam(G), []).append(G)
        for group in by_wam.values():
            keys = {me_key(G) for G in group}
            res.trials += len(group)
            if len(group) > 1:
                res.relevant += len(group)
            for G in group[1:]:
                if matrix_me(group[0], G) is None:
                    res.violations.append(f"{group[0]} and {G}: same WAM, not ME")
                    break
            if len(keys) != 1 and not res.violations:
                res.violations.append(f"WAM class with {len(keys)} ME classes")
        # distinct WAMs must never be ME: ME keys are class-unique
        key_owner: dict[tuple, object] = {}
        for L, group in by_wam.items():
            for G in group:
                other = key_owner.setdefault(me_key(G), L)
                if other != L:
                    res.violations.append(f"{G}: ME to an encoder with a different WAM")
    rng = _rng(seed)
    for t in range(random_trials):
        Fr = GF((2, 3)[t % 2])
        nu = [(1,), (2,), (1, 1), (2, 1)][t % 4]
        G = random_reduced_encoder(Fr, nu, 3, rng)
        Gb = random_monomial(Fr, 3, rng).apply(G) if t % 3 else random_reduced_encoder(Fr, nu, 3, rng)
        res.trials += 1
        res.relevant += 1
        same = wam(G) == wam(Gb)
        me = matrix_me(G, Gb) is not None
        res.note(same)
        if same != me:
            res.violations.append(f"{G} vs {Gb}: equal WAM={same}, ME={me}")
    return res


def _strong_partner(G: PolyMatrix, rng: np.random.Generator, tries: int = 20) -> PolyMatrix | None:
    """Random basic reduced G M with M z-monomial and the same row degrees."""
    for _ in range(tries):
        Gb = polynomial_zmonomial(G, rng, -1, 1).apply(G)
        if Gb.row_degrees() == G.row_degrees() and is_reduced(Gb) and is_basic(Gb):
            return Gb
    return None


def same_wam_strong_encoders_me(trials: int = 80, seed: int = 3) -> PropertyResult:
    """Strongly isometric reduced encoders with Lambda(G) = Lambda(Gb) are ME."""
    res = PropertyResult("strongly isometric encoders with equal WAM are ME")
    rng = _rng(seed)
    for t in range(trials):
        F = GF((2, 3)[t % 2])
        nu = [(1, 0), (1, 1, 0), (2, 0), (1,), (2, 1, 0)][t % 5]
        n = len(nu) + 1 + t % 2
        G = random_reduced_encoder(F, nu, n, rng)
        Gb = _strong_partner(G, rng)
        res.trials += 1
        if Gb is None or not encoders_strongly_isometric(G, Gb):
            continue
        if wam(G) != wam(Gb):
            continue
        res.relevant += 1
        if matrix_me(G, Gb) is None:
            res.violations.append(f"{G} vs {Gb}")
    # the code-level search: witnesses from code_strongly_isometric
    for name_pair in _example_pairs():
        C, Cb = (ConvCode(G) for G in name_pair)
        w = code_strongly_isometric(C, Cb)
        res.trials += 1
        if w is None or wam(w.G) != wam(w.Gb):
            continue
        res.relevant += 1
        if matrix_me(w.G, w.Gb) is None:
            res.violations.append(f"witness pair {w.G} vs {w.Gb}")
    return res


def _example_pairs() -> list[tuple[PolyMatrix, PolyMatrix]]:
    from .io import example_encoder

    names = [("exa3.1-G", "exa3.1-Gp"), ("exa3.2-G", "exa3.2-Gp"), ("exa3.3-G", "exa3.3-Gb"), ("exa4.3p-G", "exa4.3p-Gb")]
    return [(example_encoder(a), example_encoder(b)) for a, b in names]


def _partner_code(C: ConvCode, rng: np.random.Generator, mode: int) -> ConvCode | None:
    """A code related to C: ME image, strongly isometric image, re-encoded, or unrelated."""
    G = C.reduced_encoder
    F = G.field
    if mode == 0:
        return ConvCode(random_monomial(F, G.n, rng).apply(G))
    if mode == 1:
        Gb = _strong_partner(G, rng)
        return None if Gb is None else ConvCode(Gb)
    if mode == 2:
        Gb = _strong_partner(G, rng)
        if Gb is None:
            return None
        U = random_unimodular(F, G.k, rng, steps=3, maxdeg=1)
        return ConvCode(random_monomial(F, G.n, rng).apply(U * Gb))
    return ConvCode(random_reduced_encoder(F, C.row_degrees, G.n, rng))


def one_positive_index(trials: int = 80, seed: int = 4) -> PropertyResult:
    """At most one positive Forney index: (strongly isometric and same WAM) <=> ME."""
    res = PropertyResult("at most one positive index: strong isometry + WAM <=> ME")
    rng = _rng(seed)
    for t in range(trials):
        F = GF((2, 3)[t % 2])
        nu = [(1,), (1, 0), (0,), (0, 0), (1, 0, 0)][t % 5]
        n = len(nu) + 1 + t % 3
        C = ConvCode(random_reduced_encoder(F, nu, n, rng))
        Cb = _partner_code(C, rng, t % 4)
        res.trials += 1
        if Cb is None:
            continue
        res.relevant += 1
        strong = code_strongly_isometric(C, Cb) is not None
        same = wam_equivalent(wam(C.reduced_encoder), wam(Cb.reduced_encoder)) is not None
        me = code_me(C, Cb) is not None
        res.note(me)
        if (strong and same) != me:
            res.violations.append(f"{C.generator} vs {Cb.generator}: strong={strong}, WAM={same}, ME={me}")
    return res


def delay_free_iso_iff_me(trials: int = 60, seed: int = 5) -> PropertyResult:
    """Codes with delay-free encoders: isometric exactly when ME."""
    res = PropertyResult("delay-free codes: isometric <=> ME")
    rng = _rng(seed)
    pairs: list[tuple[ConvCode, ConvCode]] = []
    from .io import example_encoder

    pairs.append((ConvCode(example_encoder("exa4.2-G")), ConvCode(example_encoder("exa4.2-Gb"))))
    t = 0
    while len(pairs) < trials and t < 20 * trials:
        t += 1
        F = GF((2, 3)[t % 2])
        nu = [(1,), (1, 0), (2,), (1, 1), (2, 0)][t % 5]
        G = random_reduced_encoder(F, nu, 3, rng)
        if not is_delay_free(G):
            continue
        mode = t % 3
        if mode == 0:
            Gb = random_monomial(F, 3, rng).apply(random_unimodular(F, G.k, rng, 2, 1) * G)
        elif mode == 1:
            Gb = random_reduced_encoder(F, nu, 3, rng)
        else:
            Gb = _perturb(G, rng)
        if not is_basic(Gb) or not is_delay_free(ConvCode(Gb).reduced_encoder):
            continue
        pairs.append((ConvCode(G), ConvCode(Gb)))
    for C, Cb in pairs:
        res.trials += 1
        if C.k != Cb.k:
            continue
        res.relevant += 1
        iso = code_isometric(C, Cb) is not None
        me = code_me(C, Cb) is not None
        res.note(me)
        if iso != me:
            res.violations.append(f"{C.generator} vs {Cb.generator}: isometric={iso}, ME={me}")
    return res


def _strong_pairs(count: int, rng: np.random.Generator) -> list[tuple[PolyMatrix, PolyMatrix]]:
    out = list(_example_pairs())
    out = [(a, b) for a, b in out]
    # replace the example pairs by their witness encoders, which are strongly isometric as matrices
    pairs = []
    for a, b in out:
        w = code_strongly_isometric(ConvCode(a), ConvCode(b))
        if w is not None:
            pairs.append((w.G, w.Gb))
    t = 0
    while len(pairs) < count and t < 20 * count:
        t += 1
        F = GF((2, 3)[t % 2])
        nu = [(1,), (2,), (1, 0), (1, 1), (2, 1)][t % 5]
        G = random_reduced_encoder(F, nu, 3 + t % 2, rng)
        Gb = _strong_partner(G, rng)
        if Gb is not None and Gb != G:
            pairs.append((G, Gb))
    return pairs


def strong_isometry_consequences(count: int = 30, seed: int = 6) -> list[PropertyResult]:
    """Atomic codewords, Omega, extended row, active burst and active row distances are preserved."""
    rng = _rng(seed)
    atomic = PropertyResult("strong isometries preserve atomic codewords")
    shared = PropertyResult("strongly isometric codes share Omega, extended row, active burst")
    row = PropertyResult("strongly isometric reduced encoders share active row distances")
    for G, Gb in _strong_pairs(count, rng):
        C, Cb = ConvCode(G), ConvCode(Gb)
        F = G.field
        for _ in range(12):
            u = random_message(F, G.k, 3, rng)
            v, vb = G.left_mul_vector(u), Gb.left_mul_vector(u)
            if all(not p for p in v):
                continue
            atomic.trials += 1
            atomic.relevant += 1
            a, b = is_atomic(C, v), is_atomic(Cb, vb)
            if a != b:
                atomic.violations.append(f"u={u} on {G} / {Gb}: {a} vs {b}")
        shared.trials += 1
        shared.relevant += 1
        N = 7
        if omega_series(C, N) != omega_series(Cb, N):
            shared.violations.append(f"Omega differs for {G} / {Gb}")
        if extended_row_distances(C, N - 1) != extended_row_distances(Cb, N - 1):
            shared.violations.append(f"extended row differs for {G} / {Gb}")
        if active_distances(C, "burst", N) != active_distances(Cb, "burst", N):
            shared.violations.append(f"active burst differs for {G} / {Gb}")
        jr = 3 if F.q ** (G.k * 4) <= 1 << 14 else 2
        row.trials += 1
        row.relevant += 1
        if active_row_distances(G, jr) != active_row_distances(Gb, jr):
            row.violations.append(f"active row differs for {G} / {Gb}")
    return [atomic, shared, row]


def isometry_preserves_delay(trials: int = 30, seed: int = 7) -> PropertyResult:
    """The isomorphism v -> v M of an isometry witness keeps del(v) and lands in the target code."""
    res = PropertyResult("isometries preserve delay")
    rng = _rng(seed)
    from .io import example_encoder

    pairs = [(ConvCode(example_encoder("exa4.3-G")), ConvCode(example_encoder("exa4.3-Gb")))]
    t = 0
    while len(pairs) < trials and t < 20 * trials:
        t += 1
        F = GF((2, 3)[t % 2])
        nu = [(1,), (2,), (1, 0), (1, 1)][t % 4]
        G = random_reduced_encoder(F, nu, 3, rng)
        Gb = polynomial_zmonomial(G, rng, -1, 2).apply(G)
        if is_basic(Gb):
            pairs.append((ConvCode(G), ConvCode(random_unimodular(F, G.k, rng, 2, 1) * Gb)))
    for C, Cb in pairs:
        w = code_isometric(C, Cb)
        res.trials += 1
        if w is None:
            res.violations.append(f"no isometry found for {C.generator} / {Cb.generator}")
            continue
        F = C.field
        for _ in range(10):
            u = random_message(F, C.k, 3, rng)
            if rng.random() < 0.5:
                u = tuple(p.shift(int(rng.integers(1, 3))) for p in u)
            v = w.G.left_mul_vector(u)
            try:
                img = w.M.apply_vector(v)
            except NotPolynomialError:
                res.violations.append(f"image of {v} not polynomial")
                continue
            res.relevant += 1
            if delay(v) != delay(img) or weight(v) != weight(img) or Cb.contains(img) is None:
                res.violations.append(f"{v} -> {img}")
    return res


def wam_formulas_vs_brute_force(codes: int = 25, jmax: int = 5, seed: int = 8) -> tuple[PropertyResult, PropertyResult]:
    """WAM-based distance profiles equal the brute-force definitions; both burst formulas agree."""
    res = PropertyResult(f"WAM distance formulas vs brute force ({codes} codes, jmax {jmax})")
    burst = PropertyResult("active burst: composition formula = tilde-power formula")
    rng = _rng(seed)
    F = GF(2)
    shapes = [((1,), 2), ((1,), 3), ((2,), 2), ((2,), 4), ((1, 1), 3), ((1, 1), 4), ((1, 0), 3), ((2, 0), 4), ((1,), 4)]
    for t in range(codes):
        nu, n = shapes[t % len(shapes)]
        C = ConvCode(random_reduced_encoder(F, nu, n, rng))
        for family in ("column", "active_column", "active_segment", "extended_row", "active_burst"):
            if family == "active_burst" and jmax < burst_start(C.forney_indices):
                continue
            res.trials += 1
            res.relevant += 1
            got, want = profile(C, family, jmax), brute_profile(C, family, jmax)
            if got != want:
                res.violations.append(f"{family} on {C.generator}: {got.values} vs {want.values}")
        burst.trials += 1
        burst.relevant += 1
        if active_distances(C, "burst", 10) != active_burst_by_composition(C, 10):
            burst.violations.append(f"{C.generator}")
    assert set(FAMILIES) >= {"column", "extended_row"}
    return res, burst


def strong_isometry_criterion_exhaustive(max_n: int = 3, max_deg: int = 2, msg_deg: int = 4) -> PropertyResult:
    """All binary one-row codes: the strong-isometry search agrees with a direct check.

    For k = 1 every isomorphism im g -> im gb is u g -> c u gb with c a unit,
    so strong isometry means deg g = deg gb and wt(u g) = wt(u gb) for all u.
    The direct check compares weights over every u of degree <= msg_deg.
    """
    res = PropertyResult(f"strong isometry criterion, q=2, k=1, n<={max_n}, degree<={max_deg}")
    F = GF(2)
    polys = [Poly(F, c) for c in itertools.product(range(2), repeat=max_deg + 1)]
    msgs = [Poly(F, c) for c in itertools.product(range(2), repeat=msg_deg + 1)]
    for n in range(1, max_n + 1):
        codes = []
        for row in itertools.product(polys, repeat=n):
            G = PolyMatrix(F, [list(row)], n=n)
            if is_basic(G):
                sig = (int(G.max_degree()), tuple(weight(G.left_mul_vector((u,))) for u in msgs))
                codes.append((ConvCode(G), sig))
        for (C, s), (Cb, sb) in itertools.product(codes, repeat=2):
            if C.degree != Cb.degree:
                continue
            res.trials += 1
            res.relevant += 1
            found = code_strongly_isometric(C, Cb) is not None
            res.note(s == sb)
            if found != (s == sb):
                res.violations.append(f"{C.generator} vs {Cb.generator}: search={found}, direct={s == sb}")
    return res


SUITES: dict[str, Callable[[], PropertyResult | list[PropertyResult] | tuple[PropertyResult, ...]]] = {
    "weight_iff_zme": weight_iff_zme,
    "block_weights_iff_me": block_weights_iff_me,
    "positive_indices_wam_iff_me": positive_indices_wam_iff_me,
    "same_wam_strong_encoders_me": same_wam_strong_encoders_me,
    "one_positive_index": one_positive_index,
    "delay_free_iso_iff_me": delay_free_iso_iff_me,
    "strong_isometry_consequences": strong_isometry_consequences,
    "isometry_preserves_delay": isometry_preserves_delay,
    "wam_formulas_vs_brute_force": wam_formulas_vs_brute_force,
    "strong_isometry_criterion_exhaustive": strong_isometry_criterion_exhaustive,
}


def run_all(names=None) -> list[PropertyResult]:
    out: list[PropertyResult] = []
    for name in names or SUITES:
        r = SUITES[name]()
        out.extend(r if isinstance(r, (list, tuple)) else [r])
    return out
