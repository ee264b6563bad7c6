"""Command-line front end.

Exit codes: 0 success / verdict true, 1 verdict false or failed check,
2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .core import KNTableau, Partition
from .crystal import crystal_graph, reflect, rotate, sigma
from .csp import (
    a_chi_blocks,
    check_equiv_theorem,
    check_orbit_theorem,
    check_residue_lemma,
    hypotheses_hold,
    verify_csp,
    weight_rotation_holds,
)
from .enumeration import DEFAULT_CAP, EnumerationCapExceeded, TableauSet, enumerate_by_crystal, enumerate_by_filter
from .qpoly import (
    closed_form_det,
    denominator_closed_form,
    denominator_det,
    determinant_poly,
    f_sp,
    hook_content_count,
    numerator_det,
    pwr_tab,
    pwr_wt,
    staircase_parts,
    x_poly,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FORMATS = {
    "enumerate": ("json", "table"),
    "graph": ("dot", "json"),
    "csp": ("json", "table"),
    "check": ("json", "table"),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    shape: Partition
    m: int
    fmt: str
    out: str | None
    cap: int

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        try:
            shape = Partition.parse(ns.shape)
        except ValueError as exc:
            raise UsageError(f"bad --shape {ns.shape!r}: {exc}") from exc
        if ns.m < 1:
            raise UsageError("--m must be at least 1")
        if shape.length > ns.m:
            raise UsageError(f"shape {shape} has {shape.length} rows but m={ns.m}")
        if ns.cap < 1:
            raise UsageError("--cap must be at least 1")
        fmt = ns.format or FORMATS[ns.command][0]
        if fmt not in FORMATS[ns.command]:
            raise UsageError(f"--format {fmt} is not available for {ns.command}")
        return cls(ns.command, shape, ns.m, fmt, ns.out, ns.cap)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig) -> tuple[int, str]:
    s = enumerate_by_crystal(cfg.shape, cfg.m, cfg.cap)
    if cfg.fmt == "json":
        return EXIT_OK, _dump(s.to_dict())
    lines = [f"SP({cfg.shape}, {2 * cfg.m}): {len(s)} tableaux", ""]
    for t in s.members:
        lines.append(t.pretty())
        lines.append(f"wt={t.weight}  pwr={pwr_tab(t)}")
        lines.append("")
    return EXIT_OK, "\n".join(lines)


def cmd_graph(cfg: RunConfig) -> tuple[int, str]:
    g = crystal_graph(cfg.shape, cfg.m, cfg.cap)
    if cfg.fmt == "dot":
        return EXIT_OK, g.to_dot()
    data = {
        "shape": list(cfg.shape.parts),
        "m": cfg.m,
        "vertices": [t.to_dict() for t in g.vertices],
        "edges": [{"source": a, "target": b, "i": i} for a, b, i in g.edges],
    }
    return EXIT_OK, _dump(data)


def cmd_csp(cfg: RunConfig) -> tuple[int, str]:
    report = verify_csp(cfg.shape, cfg.m, cap=cfg.cap)
    code = EXIT_OK if report.verdict else EXIT_FALSE
    if cfg.fmt == "json":
        return code, _dump(report.to_dict())
    h = report.hypotheses
    lines = [
        f"shape {cfg.shape}, m={cfg.m}, |SP|={report.census.total}",
        f"hypotheses: {'hold' if h.holds else 'fail (' + str(h.witness()) + ')'}",
        "orbit sizes: " + ", ".join(f"{k}x{v}" for k, v in report.census.as_dict().items()),
        f"f_sp(q) = {report.polynomial}",
        f"{'d':>3} {'fixed':>8} {'f_sp':>8} {'X':>8}",
    ]
    for e in report.evaluations:
        poly = "n/a" if e.poly is None else str(e.poly)
        xv = "n/a" if e.x_poly is None else str(e.x_poly)
        mark = "" if e.agrees else "  <- mismatch"
        lines.append(f"{e.d:>3} {e.fixed:>8} {poly:>8} {xv:>8}{mark}")
    lines.append(f"verdict: {report.verdict}")
    return code, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# check


def _symmetry_ok(s: TableauSet) -> bool:
    counts = s.weight_index
    m = s.m
    for chi, k in counts.items():
        images = [reflect(chi, i) for i in range(1, m + 1)] + [tuple(-x for x in chi)]
        if any(counts.get(w, 0) != k for w in images):
            return False
    return True


def run_checks(shape: Partition, m: int, cap: int = DEFAULT_CAP) -> list[dict]:
    """Every identity and orbit/residue statement for one ``(shape, m)``.

    Each entry has ``name``, ``status`` (``pass``/``fail``/``n/a``) and ``detail``.
    ``n/a`` marks statements whose hypotheses fail; their diagnostics are still reported.
    """
    results: list[dict] = []
    hyp = hypotheses_hold(shape, m)

    def add(name: str, ok: bool, detail: str = "", applicable: bool = True) -> None:
        status = ("pass" if ok else "fail") if applicable else "n/a"
        results.append({"name": name, "status": status, "detail": detail})

    def guarded(name: str, fn: Callable[[], tuple[bool, str]], applicable: bool = True) -> None:
        try:
            ok, detail = fn()
        except (ArithmeticError, ValueError, RuntimeError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        add(name, ok, detail, applicable)

    s = enumerate_by_crystal(shape, m, cap)
    n = shape.size
    kappa = shape.kappa()
    xq = x_poly(s)

    guarded("crystal-equals-filter", lambda: (enumerate_by_filter(shape, m, cap).members == s.members, f"{len(s)} tableaux"))
    guarded("kn-closure", lambda: (all(t.is_valid() for t in s.members), ""))
    guarded("hook-content-count", lambda: (hook_content_count(shape, m) == len(s), f"{hook_content_count(shape, m)} vs {len(s)}"))
    guarded("pwr-from-weight", lambda: (all(pwr_wt(t.weight, n, m) == pwr_tab(t) for t in s.members), ""))
    mu = staircase_parts(shape, m)
    guarded("determinant-closed-form", lambda: (closed_form_det(mu, m) == numerator_det(shape, m), f"mu={mu}"))
    guarded("denominator-closed-form", lambda: (denominator_closed_form(m) == denominator_det(m), ""))
    guarded("q-hook-content", lambda: (xq == f_sp(shape, m).shift(kappa), f"kappa={kappa}"))
    guarded("determinant-quotient", lambda: (xq == determinant_poly(shape, m), ""))
    guarded("weight-symmetry", lambda: (_symmetry_ok(s), f"{len(s.weight_index)} weights"))
    guarded("weight-rotation", lambda: (weight_rotation_holds(s), ""))

    def sigma_order():
        bad = 0
        for t in s.members:
            u = t
            for _ in range(2 * m):
                u = sigma(u)
            bad += u != t
        return bad == 0, f"{bad} tableaux not fixed by sigma^{2 * m}"

    guarded("sigma-order", sigma_order)

    orbits = check_orbit_theorem(shape, m, tableaux=s)
    census = ", ".join(f"{k}x{v}" for k, v in orbits.census.as_dict().items())
    hyp_note = "" if hyp.holds else f"; hypotheses fail: {hyp.witness()}"
    add("orbit-sizes", orbits.all_full, f"census {census}{hyp_note}", hyp.holds)

    def residues():
        bad = [chi for chi in s.weight_index if not check_residue_lemma(chi, n, m).complete]
        return not bad, f"{len(bad)} of {len(s.weight_index)} weights fail{hyp_note}"

    guarded("residue-systems", residues, hyp.holds)

    def classes():
        blocks = a_chi_blocks(s.weight_index)
        sizes = Counter(len(b) for b in blocks)
        uniform = all(len(set(s.weight_index[w] for w in b)) == 1 for b in blocks)
        ok = uniform and (not hyp.holds or set(sizes) == {2 * m})
        return ok, f"block sizes {dict(sorted(sizes.items()))}"

    guarded("weight-classes", classes)

    eq = check_equiv_theorem(shape, m, tableaux=s)
    add("cyclic-residue", eq.flat, f"X(q) mod q^{2 * m}-1 = {eq.residue}{hyp_note}", hyp.holds)

    report = verify_csp(shape, m, tableaux=s)
    fixed = [e.fixed for e in report.evaluations]
    vals = [e.poly for e in report.evaluations]
    add("cyclic-sieving", report.verdict, f"fixed {fixed}, f_sp {vals}{hyp_note}", hyp.holds)
    add("census-consistency", report.census_consistent, "")
    return results


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    results = run_checks(cfg.shape, cfg.m, cfg.cap)
    ok = all(r["status"] != "fail" for r in results)
    code = EXIT_OK if ok else EXIT_FALSE
    if cfg.fmt == "json":
        h = hypotheses_hold(cfg.shape, cfg.m)
        data = {"shape": list(cfg.shape.parts), "m": cfg.m, "hypotheses": h.to_dict(), "checks": results, "ok": ok}
        return code, _dump(data)
    width = max(len(r["name"]) for r in results)
    lines = [f"{r['status']:>4}  {r['name']:<{width}}  {r['detail']}".rstrip() for r in results]
    lines.append(f"overall: {'ok' if ok else 'FAILED'}")
    return code, "\n".join(lines) + "\n"


COMMANDS = {"enumerate": cmd_enumerate, "graph": cmd_graph, "csp": cmd_csp, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symplectic-csp", description="Crystal combinatorics of symplectic KN tableaux.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "enumerate": "list SP(shape, 2m) and its weight multiplicities",
        "graph": "export the crystal graph",
        "csp": "verify cyclic sieving for the Coxeter-element action",
        "check": "run every identity and orbit check",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--shape", required=True, help="comma-separated parts, e.g. 2,1 (empty string for the empty shape)")
        p.add_argument("--m", type=int, required=True, help="rank of C_m")
        p.add_argument("--format", choices=("json", "table", "dot"), default=None)
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of tableaux to enumerate")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, text = COMMANDS[cfg.command](cfg)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
