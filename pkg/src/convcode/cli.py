"""Command-line frontend: ``convcode <command> ...``.

Exit codes: 0 success, 2 parse or usage error, 3 precondition (non-basic
input and the like), 4 budget exceeded, 5 example-suite mismatch.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from dataclasses import asdict, dataclass, field
from typing import Any

from . import io, suite
from .code import ConvCode
from .config import Budgets, default_budgets, set_default_budgets
from .distances import FAMILIES, free_distance, omega_series, profile
from .equivalence import (
    CodeWitness,
    StrongWitness,
    ZMonomialMatrix,
    code_isometric,
    code_me,
    code_strongly_isometric,
    matrix_zme,
)
from .errors import BudgetExceededError, ParseError, PreconditionError
from .polyalg import PolyMatrix, is_basic, is_reduced
from .wam import wam, wam_hat, wam_tilde

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_SUITE = 0, 2, 3, 4, 5


@dataclass
class AnalysisReport:
    n: int
    k: int
    basic: bool
    reduced: bool
    delta: int
    forney_indices: list[int]
    memory: int
    free_distance: int | None = None
    reduced_encoder: list[list[str]] | None = None
    provenance: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> AnalysisReport:
        return cls(**obj)

    def render(self) -> str:
        lines = [
            f"n = {self.n}, k = {self.k}",
            f"basic: {'yes' if self.basic else 'no'}",
            f"reduced: {'yes' if self.reduced else 'not reduced'}",
            f"degree = {self.delta}",
            f"Forney indices: {', '.join(map(str, self.forney_indices))}",
            f"memory = {self.memory}",
        ]
        if self.free_distance is not None:
            lines.append(f"free distance = {self.free_distance}")
        if self.reduced_encoder is not None:
            lines.append("reduced encoder:")
            lines.append(_grid(self.reduced_encoder))
        return "\n".join(lines)


def _grid(cells: Sequence[Sequence[str]], labels: Sequence[str] | None = None) -> str:
    cols = len(cells[0]) if cells else 0
    widths = [max(len(r[j]) for r in cells) for j in range(cols)]
    lw = max((len(l) for l in labels), default=0) if labels else 0
    out = []
    for i, r in enumerate(cells):
        head = (labels[i].ljust(lw) + "  ") if labels else "  "
        out.append((head + "  ".join(c.ljust(w) for c, w in zip(r, widths))).rstrip())
    return "\n".join(out)


def _provenance(path: str) -> dict[str, Any]:
    return {"input": path, "sha256": io.digest(path), "budgets": asdict(default_budgets())}


def _emit(args, obj: Any, text: str) -> None:
    print(io.dumps(obj) if args.json else text)


# commands


def cmd_analyze(args) -> int:
    G = io.load_encoder(args.encoder)
    if not is_basic(G):
        raise PreconditionError("matrix is not basic, so it does not define a code by itself")
    C = ConvCode(G)
    red = is_reduced(G)
    report = AnalysisReport(
        n=C.n,
        k=C.k,
        basic=True,
        reduced=red,
        delta=C.degree,
        forney_indices=list(C.forney_indices),
        memory=C.memory,
        free_distance=free_distance(C),
        reduced_encoder=None if red else C.reduced_encoder.to_strings(),
        provenance=_provenance(args.encoder),
    )
    _emit(args, report.to_json(), report.render())
    return EXIT_OK


def _code_from(path: str) -> ConvCode:
    return ConvCode(io.load_encoder(path))


def cmd_ccf(args) -> int:
    C = _code_from(args.encoder)
    R = C.realization
    obj = {"A": R.A, "B": R.B, "C": R.C, "D": R.D, "nu": list(R.nu)}
    F = R.field
    parts = []
    for name in ("A", "B", "C", "D"):
        M = obj[name]
        parts.append(f"{name} =" + ("\n" + _grid([[F.name(c) for c in r] for r in M]) if M and M[0] else " (empty)"))
    _emit(args, obj, "\n".join(parts))
    return EXIT_OK


def cmd_wam(args) -> int:
    C = _code_from(args.encoder)
    L = wam(C.reduced_encoder)
    if args.reduced == "tilde":
        L = wam_tilde(L)
    elif args.reduced == "hat":
        L = wam_hat(L)
    labels = [L.state_label(i) for i in range(L.size)]
    obj = {"states": labels, "matrix": L.to_strings(), "reduced": args.reduced}
    _emit(args, obj, str(L))
    return EXIT_OK


def cmd_distances(args) -> int:
    C = _code_from(args.encoder)
    families = FAMILIES if args.family == "all" else (args.family,)
    profiles = [profile(C, f, args.jmax) for f in families]
    obj = {
        "profiles": [{"family": p.family, "start": p.start, "values": list(p.values)} for p in profiles],
        "free_distance": free_distance(C),
    }
    lines = []
    for p in profiles:
        vals = "  ".join(f"{j}:{'inf' if v == float('inf') else v}" for j, v in p.items())
        lines.append(f"{p.family:15s} {vals}")
    lines.append(f"free distance   {obj['free_distance']}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_wenum(args) -> int:
    C = _code_from(args.encoder)
    om = omega_series(C, args.lmax)
    pairs = om.weight_enumerator().pairs()
    obj = {"order": args.lmax, "weight_enumerator": [[l, str(w)] for l, w in pairs]}
    text = "\n".join(f"L^{l}: {w}" for l, w in pairs)
    _emit(args, obj, text)
    return EXIT_OK


def cmd_dual(args) -> int:
    C = _code_from(args.encoder)
    D = C.dual()
    H = D.reduced_encoder
    if args.json:
        print(io.dumps(io.encoder_to_json(H)))
    else:
        print("reduced encoder of the dual code:")
        print(_grid(H.to_strings()))
        print("canonical (Hermite) form:")
        print(_grid(D.canonical.to_strings()))
    return EXIT_OK


def _witness_json(w: CodeWitness | StrongWitness | ZMonomialMatrix) -> dict[str, Any]:
    if isinstance(w, ZMonomialMatrix):
        return {**w.to_json(), "U": None}
    M = w.M.to_json()
    M.setdefault("exponents", [0] * len(M["perm"]))
    if isinstance(w, CodeWitness):
        return {**M, "U": w.U.to_strings(), "G": w.G.to_strings(), "Gb": w.Gb.to_strings()}
    return {**M, "U": None, "G": w.G.to_strings(), "Gb": w.Gb.to_strings()}


def _failing_invariant(mode: str, A: PolyMatrix, B: PolyMatrix, C: ConvCode | None, Cb: ConvCode | None) -> str:
    if A.field != B.field or A.shape != B.shape:
        return "field or shape differs"
    if mode == "zme":
        return "column multisets differ up to factors a*z^m"
    if C is not None and Cb is not None and mode in ("me", "strong") and C.forney_indices != Cb.forney_indices:
        return "Forney indices differ"
    if mode == "me":
        return "no reduced encoder of the second code is ME to one of the first"
    if mode == "iso":
        return "delay-normalized modules are not ME (no z-monomial equivalence)"
    return "no pair of reduced encoders with equal row degrees is zME"


def cmd_equiv(args) -> int:
    A, B = io.load_encoder(args.first), io.load_encoder(args.second)
    C = Cb = None
    if args.mode == "zme":
        w = matrix_zme(A, B) if A.shape == B.shape and A.field == B.field else None
    else:
        C, Cb = ConvCode(A), ConvCode(B)
        if A.field != B.field or A.shape != B.shape:
            w = None
        else:
            fn = {"me": code_me, "iso": code_isometric, "strong": code_strongly_isometric}[args.mode]
            w = fn(C, Cb)
    if w is None:
        reason = _failing_invariant(args.mode, A, B, C, Cb)
        _emit(args, {"mode": args.mode, "equivalent": False, "reason": reason}, f"not equivalent: {reason}")
        return EXIT_OK
    obj = {"mode": args.mode, "equivalent": True, "witness": _witness_json(w)}
    W = obj["witness"]
    lines = [f"equivalent ({args.mode})", f"perm = {W['perm']}", f"scalars = {W['scalars']}", f"exponents = {W['exponents']}"]
    if W.get("U") is not None:
        lines += ["U =", _grid(W["U"])]
    if W.get("G") is not None:
        lines += ["G =", _grid(W["G"]), "G-bar =", _grid(W["Gb"])]
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.list:
        for name in suite.EXAMPLES:
            print(name)
        return EXIT_OK
    names = None if args.filter is None else [args.filter]
    checks = suite.run(names)
    failed = [c for c in checks if not c.passed]
    if args.json:
        print(io.dumps({"checks": [asdict(c) for c in checks], "failed": len(failed)}))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_SUITE if failed else EXIT_OK


# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convcode", description="Analyze convolutional codes over finite fields.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--budget", default="", help="search budget overrides, e.g. orbit=1e5,gl_search=1e6")
    sub = p.add_subparsers(dest="command", required=True)

    def with_encoder(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("encoder", help="encoder JSON file")
        return sp

    with_encoder("analyze", "parameters, reducedness and free distance").set_defaults(func=cmd_analyze)
    with_encoder("ccf", "controller canonical form (A, B, C, D)").set_defaults(func=cmd_ccf)
    sp = with_encoder("wam", "weight adjacency matrix")
    sp.add_argument("--reduced", choices=("tilde", "hat"), default=None)
    sp.set_defaults(func=cmd_wam)
    sp = with_encoder("distances", "distance profiles")
    sp.add_argument("--family", choices=(*FAMILIES, "all"), default="all")
    sp.add_argument("--jmax", type=int, default=8)
    sp.set_defaults(func=cmd_distances)
    sp = with_encoder("wenum", "weight enumerator series up to L^lmax")
    sp.add_argument("--lmax", type=int, default=8)
    sp.set_defaults(func=cmd_wenum)
    with_encoder("dual", "dual code").set_defaults(func=cmd_dual)
    sp = sub.add_parser("equiv", help="equivalence test with witness")
    sp.add_argument("--mode", choices=("me", "zme", "iso", "strong"), default="iso")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_equiv)
    sp = sub.add_parser("examples", help="reproduce the worked examples")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--filter", default=None, metavar="NAME")
    sp.set_defaults(func=cmd_examples)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "examples" and args.filter is not None and args.filter not in suite.EXAMPLES:
        parser.error(f"unknown example {args.filter!r}; see --list")
    for name in ("jmax", "lmax"):
        if getattr(args, name, 0) < 0:
            parser.error(f"--{name} must be nonnegative")
    previous = default_budgets()
    try:
        set_default_budgets(Budgets.parse(args.budget, previous))
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        set_default_budgets(previous)


if __name__ == "__main__":
    sys.exit(main())
