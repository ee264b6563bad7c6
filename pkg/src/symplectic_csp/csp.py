"""Orbit structure, residue systems and the cyclic sieving check for SP(λ, 2m)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import KNTableau, Partition, Weight, as_partition
from .crystal import OrbitCensus, orbit_census, rotate, sigma
from .enumeration import DEFAULT_CAP, TableauSet, enumerate_by_crystal
from .qpoly import (
    CyclotomicContext,
    IntPoly,
    NonIntegralValue,
    f_sp,
    pwr_wt,
    reduce_mod_cyclic,
    x_poly,
)

Action = Callable[[KNTableau], KNTableau]


def odd_primes_upto(n: int) -> list[int]:
    return [p for p in range(3, n + 1, 2) if all(p % d for d in range(3, int(p**0.5) + 1, 2))]


@dataclass(frozen=True)
class Hypotheses:
    """``n = |λ|`` odd and no odd prime ``p <= n`` divides ``m``."""

    n: int
    m: int
    n_odd: bool
    violating_prime: int | None

    @property
    def holds(self) -> bool:
        return self.n_odd and self.violating_prime is None

    def __bool__(self) -> bool:
        return self.holds

    def witness(self) -> str | None:
        if self.holds:
            return None
        if not self.n_odd:
            return f"n={self.n} is even"
        return f"odd prime p={self.violating_prime} <= n={self.n} divides m={self.m}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "n_odd": self.n_odd,
            "violating_prime": self.violating_prime,
            "holds": self.holds,
        }


def hypotheses_hold(shape: Partition | Iterable[int], m: int) -> Hypotheses:
    n = as_partition(shape).size
    bad = next((p for p in odd_primes_upto(n) if m % p == 0), None)
    return Hypotheses(n, m, n % 2 == 1, bad)


# ---------------------------------------------------------------------------
# orbits


@dataclass
class OrbitReport:
    shape: Partition
    m: int
    hypotheses: Hypotheses
    census: OrbitCensus

    @property
    def all_full(self) -> bool:
        return set(self.census.sizes) <= {2 * self.m}

    @property
    def verdict(self) -> bool:
        """True when the orbit sizes are as predicted (always true when the hypotheses fail)."""
        return self.all_full or not self.hypotheses.holds


def check_orbit_theorem(
    shape: Partition | Iterable[int],
    m: int,
    action: Action = sigma,
    tableaux: TableauSet | None = None,
) -> OrbitReport:
    shape = as_partition(shape)
    s = tableaux if tableaux is not None else enumerate_by_crystal(shape, m)
    census = orbit_census(s.members, action, key=KNTableau.sort_key)
    return OrbitReport(shape, m, hypotheses_hold(shape, m), census)


# ---------------------------------------------------------------------------
# weight classes


def gamma(chi: Sequence[int]) -> Weight:
    """Long cycle ``(1 2 ... m)``; ``theta chi = (chi_{theta^-1(1)}, ..., chi_{theta^-1(m)})``."""
    return (chi[-1],) + tuple(chi[:-1]) if chi else ()


def beta(chi: Sequence[int]) -> Weight:
    """Involution ``(2 m)(3 m-1)...``; fixes position 1."""
    return (chi[0],) + tuple(reversed(chi[1:])) if chi else ()


def negate(chi: Sequence[int]) -> Weight:
    return tuple(-x for x in chi)


def a_chi_list(chi: Sequence[int]) -> list[Weight]:
    """The 2m weights ``gamma^t chi`` then ``-gamma^t beta chi``, t = 0..m-1 (with repeats)."""
    m = len(chi)
    out = []
    w = tuple(chi)
    for _ in range(m):
        out.append(w)
        w = gamma(w)
    w = beta(chi)
    for _ in range(m):
        out.append(negate(w))
        w = gamma(w)
    return out


def a_chi(chi: Sequence[int]) -> frozenset[Weight]:
    return frozenset(a_chi_list(chi))


def a_chi_blocks(weights: Iterable[Weight]) -> list[frozenset[Weight]]:
    """Group weights into their ``A_chi`` classes.

    Raises ``ValueError`` if two classes overlap without coinciding or a class
    leaves the given weight set.
    """
    pool = set(weights)
    blocks: list[frozenset[Weight]] = []
    owner: dict[Weight, frozenset[Weight]] = {}
    for chi in sorted(pool):
        block = a_chi(chi)
        if chi in owner:
            if owner[chi] != block:
                raise ValueError(f"A_chi classes of {chi} and {sorted(owner[chi])[0]} overlap but differ")
            continue
        if not block <= pool:
            raise ValueError(f"A_{chi} leaves the weight set: {sorted(block - pool)}")
        for w in block:
            if w in owner and owner[w] != block:
                raise ValueError(f"A_{chi} meets another class at {w} without coinciding")
            owner[w] = block
        blocks.append(block)
    return blocks


@dataclass(frozen=True)
class ResidueCheck:
    chi: Weight
    n: int
    m: int
    residues: tuple[int, ...]
    hypotheses_ok: bool

    @property
    def complete(self) -> bool:
        return sorted(self.residues) == list(range(2 * self.m))


def check_residue_lemma(chi: Sequence[int], n: int, m: int | None = None) -> ResidueCheck:
    """pwr mod 2m over the 2m weights of ``A_chi``; runs even when the lemma's hypotheses fail."""
    chi = tuple(chi)
    m = len(chi) if m is None else m
    if len(chi) != m:
        raise ValueError(f"weight {chi} does not have length m={m}")
    ok = n % 2 == 1 and sum(chi) % 2 == 1 and all(m % p for p in odd_primes_upto(n))
    residues = tuple(pwr_wt(w, n, m) % (2 * m) for w in a_chi_list(chi))
    return ResidueCheck(chi, n, m, residues, ok)


# ---------------------------------------------------------------------------
# X(q) modulo q^{2m} - 1


@dataclass(frozen=True)
class EquivCheck:
    count: int
    m: int
    residue: IntPoly
    hypotheses: Hypotheses

    @property
    def flat(self) -> bool:
        n = 2 * self.m
        return self.count % n == 0 and self.residue == IntPoly([self.count // n] * n)

    @property
    def verdict(self) -> bool:
        return self.flat or not self.hypotheses.holds


def check_equiv_theorem(
    shape: Partition | Iterable[int], m: int, tableaux: TableauSet | None = None
) -> EquivCheck:
    shape = as_partition(shape)
    s = tableaux if tableaux is not None else enumerate_by_crystal(shape, m)
    hyp = hypotheses_hold(shape, m)
    if hyp.holds and len(s) % (2 * m):
        raise ArithmeticError(f"|SP| = {len(s)} is not divisible by 2m = {2 * m}")
    return EquivCheck(len(s), m, reduce_mod_cyclic(x_poly(s), 2 * m), hyp)


# ---------------------------------------------------------------------------
# cyclic sieving


@dataclass
class Evaluation:
    d: int
    fixed: int
    poly: int | None
    x_poly: int | None
    residue: IntPoly | None = None  # set when poly is not an integer

    @property
    def agrees(self) -> bool:
        return self.poly is not None and self.poly == self.fixed

    def to_dict(self) -> dict:
        out: dict = {"d": self.d, "fixed": self.fixed, "poly": self.poly, "x_poly": self.x_poly}
        if self.residue is not None:
            out["residue"] = self.residue.to_pairs()
        return out


@dataclass
class CspReport:
    shape: Partition
    m: int
    hypotheses: Hypotheses
    census: OrbitCensus
    evaluations: list[Evaluation]
    polynomial: IntPoly
    census_consistent: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return len(self.evaluations) == 2 * self.m and all(e.agrees for e in self.evaluations)

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "m": self.m,
            "hypotheses": self.hypotheses.to_dict(),
            "census": {str(k): v for k, v in self.census.as_dict().items()},
            "evaluations": [e.to_dict() for e in self.evaluations],
            "polynomial": self.polynomial.to_pairs(),
            "census_consistent": self.census_consistent,
            "verdict": self.verdict,
        }


def action_table(s: TableauSet, action: Action) -> dict[KNTableau, KNTableau]:
    table = {t: action(t) for t in s.members}
    if set(table.values()) != set(table):
        raise ValueError("action is not a bijection of the tableau set")
    return table


def fixed_point_counts(s: TableauSet, action: Action, order: int) -> list[int]:
    """``|{T : action^d(T) = T}|`` for d = 0..order-1, iterating each tableau."""
    table = action_table(s, action)
    counts = []
    for d in range(order):
        c = 0
        for t in s.members:
            u = t
            for _ in range(d):
                u = table[u]
            c += u == t
        counts.append(c)
    return counts


def _value(ctx: CyclotomicContext, p: IntPoly, d: int) -> tuple[int | None, IntPoly | None]:
    try:
        return ctx.evaluate(p, d), None
    except NonIntegralValue as exc:
        return None, exc.residue


def verify_csp(
    shape: Partition | Iterable[int],
    m: int,
    action: Action = sigma,
    tableaux: TableauSet | None = None,
    cap: int = DEFAULT_CAP,
) -> CspReport:
    shape = as_partition(shape)
    s = tableaux if tableaux is not None else enumerate_by_crystal(shape, m, cap)
    order = 2 * m
    census = orbit_census(s.members, action, key=KNTableau.sort_key)
    fixed = fixed_point_counts(s, action, order)
    fsp = f_sp(shape, m)
    xq = x_poly(s)
    ctx = CyclotomicContext(order)
    evaluations = []
    for d in range(order):
        val, residue = _value(ctx, fsp, d)
        xval, _ = _value(ctx, xq, d)
        evaluations.append(Evaluation(d, fixed[d], val, xval, residue))
    consistent = all(census.fixed_points(d) == fixed[d] for d in range(order))
    report = CspReport(shape, m, hypotheses_hold(shape, m), census, evaluations, fsp, consistent)
    if not consistent:
        report.notes.append("fixed-point counts disagree with the orbit census")
    return report


def weight_rotation_holds(s: TableauSet, action: Action = sigma) -> bool:
    """``wt(action^d T)`` is the d-fold signed rotation of ``wt(T)`` for all T and d < 2m."""
    table = action_table(s, action)
    for t in s.members:
        u = t
        for d in range(1, 2 * s.m + 1):
            u = table[u]
            if u.weight != rotate(t.weight, d):
                return False
    return True
