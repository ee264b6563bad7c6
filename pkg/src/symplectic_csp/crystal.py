"""Type C_m crystal operators on words and KN tableaux.

A word is an element ``x_1 ⊗ ... ⊗ x_n`` of the n-fold tensor power of the
standard crystal, stored as a tuple of letter ranks.  In rank coordinates
every ``f_i`` moves exactly one letter up by one rank and every ``e_i`` moves
one letter down by one rank, which keeps the signature rule branch-free.
"""

from __future__ import annotations

import functools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .core import KNTableau, Letter, Partition, Weight, as_partition, rank_str, rows_weight

S = TypeVar("S", bound=Hashable)


class CrystalError(RuntimeError):
    """Raised when an operator misbehaves (broken crystal implementation)."""


class BrokenAction(RuntimeError):
    """An action left the set it was supposed to permute."""


def _check_index(i: int, m: int) -> None:
    if not 1 <= i <= m:
        raise ValueError(f"crystal index {i} out of range 1..{m}")


# ---------------------------------------------------------------------------
# Weights and reflections


def simple_root(i: int, m: int) -> Weight:
    _check_index(i, m)
    a = [0] * m
    if i < m:
        a[i - 1], a[i] = 1, -1
    else:
        a[m - 1] = 2
    return tuple(a)


def pairing(chi: Sequence[int], i: int) -> int:
    """``<chi, alpha_i^vee>``."""
    m = len(chi)
    _check_index(i, m)
    return chi[i - 1] - chi[i] if i < m else chi[m - 1]


def reflect(chi: Sequence[int], i: int) -> Weight:
    """Simple reflection ``s_i`` on a weight."""
    m = len(chi)
    _check_index(i, m)
    w = list(chi)
    if i < m:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        w[m - 1] = -w[m - 1]
    return tuple(w)


def rotate(chi: Sequence[int], times: int = 1) -> Weight:
    """Signed cyclic shift ``(c_1..c_m) -> (-c_m, c_1, ..., c_{m-1})`` applied ``times`` times."""
    w = tuple(chi)
    for _ in range(times % (2 * len(w)) if w else 0):
        w = (-w[-1],) + w[:-1]
    return w


# ---------------------------------------------------------------------------
# Words


def _signs(i: int, m: int) -> tuple[frozenset[int], frozenset[int]]:
    """Ranks carrying ``-`` and ``+`` for index ``i``."""
    if i < m:
        return frozenset((i, 2 * m - i)), frozenset((i + 1, 2 * m + 1 - i))
    return frozenset((m,)), frozenset((m + 1,))


def bracket(word: Sequence[int], i: int, m: int) -> tuple[list[int], list[int]]:
    """Positions of the unbracketed ``-`` and ``+`` letters, left to right.

    Single stack pass: a ``+`` is pushed, a ``-`` pops the nearest open ``+``
    to its left (bracketing them) or stays unbracketed if there is none.
    """
    minus, plus = _signs(i, m)
    opened: list[int] = []
    free_minus: list[int] = []
    for pos, x in enumerate(word):
        if x in plus:
            opened.append(pos)
        elif x in minus:
            if opened:
                opened.pop()
            else:
                free_minus.append(pos)
    return free_minus, opened


def _f(word: tuple[int, ...], i: int, m: int) -> tuple[int, ...] | None:
    free_minus, _ = bracket(word, i, m)
    if not free_minus:
        return None
    j = free_minus[-1]
    return word[:j] + (word[j] + 1,) + word[j + 1 :]


def _e(word: tuple[int, ...], i: int, m: int) -> tuple[int, ...] | None:
    _, free_plus = bracket(word, i, m)
    if not free_plus:
        return None
    j = free_plus[0]
    return word[:j] + (word[j] - 1,) + word[j + 1 :]


@dataclass(frozen=True)
class Word:
    """Element of B(1)^{⊗n}; ``ranks`` read left to right."""

    ranks: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        if any(not 1 <= x <= 2 * self.m for x in self.ranks):
            raise ValueError(f"letter out of range for m={self.m}")

    @classmethod
    def from_letters(cls, letters: Iterable[int | str | Letter], m: int) -> Word:
        return cls(tuple((x if isinstance(x, Letter) else Letter.parse(x)).rank(m) for x in letters), m)

    def letters(self) -> list[Letter]:
        return [Letter.from_rank(x, self.m) for x in self.ranks]

    @property
    def weight(self) -> Weight:
        return rows_weight([self.ranks], self.m)

    def __len__(self) -> int:
        return len(self.ranks)

    def __str__(self) -> str:
        return " ⊗ ".join(rank_str(x, self.m) for x in self.ranks)


def f_word(w: Word, i: int) -> Word | None:
    _check_index(i, w.m)
    out = _f(w.ranks, i, w.m)
    return None if out is None else Word(out, w.m)


def e_word(w: Word, i: int) -> Word | None:
    _check_index(i, w.m)
    out = _e(w.ranks, i, w.m)
    return None if out is None else Word(out, w.m)


def phi(w: Word, i: int) -> int:
    _check_index(i, w.m)
    return len(bracket(w.ranks, i, w.m)[0])


def epsilon(w: Word, i: int) -> int:
    _check_index(i, w.m)
    return len(bracket(w.ranks, i, w.m)[1])


# ---------------------------------------------------------------------------
# Tableaux


@functools.lru_cache(maxsize=None)
def reading_positions(shape: Partition) -> tuple[tuple[int, int], ...]:
    """0-based ``(row, col)`` cells in column reading order (up each column, left to right)."""
    t = shape.conjugate
    return tuple((r, c) for c, h in enumerate(t.parts) for r in range(h - 1, -1, -1))


def reading_word(t: KNTableau) -> tuple[int, ...]:
    return tuple(t.rows[r][c] for r, c in reading_positions(t.shape))


def column_reading_word(t: KNTableau) -> Word:
    return Word(reading_word(t), t.m)


def from_reading_word(word: Sequence[int], shape: Partition, m: int) -> KNTableau:
    rows = [[0] * p for p in shape.parts]
    for x, (r, c) in zip(word, reading_positions(shape)):
        rows[r][c] = x
    return KNTableau(shape, tuple(map(tuple, rows)), m)


def f_tab(t: KNTableau, i: int) -> KNTableau | None:
    _check_index(i, t.m)
    out = _f(reading_word(t), i, t.m)
    return None if out is None else from_reading_word(out, t.shape, t.m)


def e_tab(t: KNTableau, i: int) -> KNTableau | None:
    _check_index(i, t.m)
    out = _e(reading_word(t), i, t.m)
    return None if out is None else from_reading_word(out, t.shape, t.m)


def _sigma_i(word: tuple[int, ...], i: int, m: int) -> tuple[int, ...]:
    chi = rows_weight([word], m)
    k = chi[i - 1] - chi[i] if i < m else chi[m - 1]
    step = _f if k >= 0 else _e
    for _ in range(abs(k)):
        nxt = step(word, i, m)
        if nxt is None:
            raise CrystalError(f"sigma_{i}: string ended after fewer than {abs(k)} steps")
        word = nxt
    return word


def _sigma(word: tuple[int, ...], m: int) -> tuple[int, ...]:
    # sigma = sigma_1 sigma_2 ... sigma_m: sigma_m acts first
    for i in range(m, 0, -1):
        word = _sigma_i(word, i, m)
    return word


def sigma_i(t: KNTableau, i: int) -> KNTableau:
    """Weyl group reflection ``s_i`` realized on the crystal."""
    _check_index(i, t.m)
    out = from_reading_word(_sigma_i(reading_word(t), i, t.m), t.shape, t.m)
    if __debug__ and out.weight != reflect(t.weight, i):
        raise CrystalError(f"sigma_{i} did not reflect the weight of {t}")
    return out


def sigma(t: KNTableau) -> KNTableau:
    """Coxeter element ``sigma_1 ... sigma_m`` (``sigma_m`` applied first)."""
    out = from_reading_word(_sigma(reading_word(t), t.m), t.shape, t.m)
    if __debug__ and out.weight != rotate(t.weight):
        raise CrystalError(f"sigma did not rotate the weight of {t}")
    return out


def sigma_word(w: Word) -> Word:
    return Word(_sigma(w.ranks, w.m), w.m)


def sigma_i_word(w: Word, i: int) -> Word:
    _check_index(i, w.m)
    return Word(_sigma_i(w.ranks, i, w.m), w.m)


# ---------------------------------------------------------------------------
# Crystal graph


@dataclass
class CrystalGraph:
    shape: Partition
    m: int
    vertices: list[KNTableau]
    edges: list[tuple[int, int, int]] = field(default_factory=list)  # (source, target, i)

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for n, t in enumerate(self.vertices):
            label = t.to_json().replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{n} [label="{label}"];')
        for a, b, i in self.edges:
            lines.append(f'  n{a} -> n{b} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_closure(
    start: KNTableau, cap: int | None = None
) -> tuple[list[KNTableau], list[tuple[KNTableau, KNTableau, int]]]:
    """Breadth-first closure of ``start`` under all ``f_i``; returns vertices and f-edges."""
    m, shape = start.m, start.shape
    seen = {reading_word(start)}
    queue = deque([reading_word(start)])
    edges = []
    while queue:
        w = queue.popleft()
        for i in range(1, m + 1):
            nxt = _f(w, i, m)
            if nxt is None:
                continue
            edges.append((w, nxt, i))
            if nxt not in seen:
                seen.add(nxt)
                if cap is not None and len(seen) > cap:
                    from .enumeration import EnumerationCapExceeded

                    raise EnumerationCapExceeded(f"crystal of {shape} for m={m} exceeds cap {cap}")
                queue.append(nxt)
    tab = {w: from_reading_word(w, shape, m) for w in seen}
    return list(tab.values()), [(tab[a], tab[b], i) for a, b, i in edges]


def crystal_graph(shape: Partition | Iterable[int], m: int, cap: int | None = None) -> CrystalGraph:
    """Crystal graph of B(shape) generated from the highest-weight tableau."""
    shape = as_partition(shape)
    hw = KNTableau.highest_weight(shape, m)
    vertices, edges = crystal_closure(hw, cap)
    vertices.sort(key=KNTableau.sort_key)
    index = {t: n for n, t in enumerate(vertices)}
    numbered = sorted((index[a], index[b], i) for a, b, i in edges)
    return CrystalGraph(shape, m, vertices, numbered)


# ---------------------------------------------------------------------------
# Orbits


@dataclass
class OrbitCensus:
    """Orbit sizes of a bijection; ``orbits`` are rotated to start at their least element."""

    sizes: Counter
    orbits: list[tuple] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(s * c for s, c in self.sizes.items())

    def as_dict(self) -> dict[int, int]:
        return dict(sorted(self.sizes.items()))

    def fixed_points(self, d: int) -> int:
        """Points fixed by the d-th power, read off the orbit sizes."""
        return sum(s * c for s, c in self.sizes.items() if d % s == 0)


def orbit(x: S, action: Callable[[S], S], limit: int | None = None) -> list[S]:
    """``[x, a(x), a(a(x)), ...]`` up to the first return to ``x``."""
    out = [x]
    y = action(x)
    while y != x:
        out.append(y)
        if limit is not None and len(out) > limit:
            raise BrokenAction(f"orbit of {x} did not close within {limit} steps")
        y = action(y)
    return out


def orbit_census(
    members: Iterable[S], action: Callable[[S], S], key: Callable[[S], object] | None = None
) -> OrbitCensus:
    members = list(members)
    universe = set(members)
    seen: set = set()
    sizes: Counter = Counter()
    orbits = []
    for x in members:
        if x in seen:
            continue
        orb = orbit(x, action, limit=len(universe))
        for y in orb:
            if y not in universe:
                raise BrokenAction(f"action maps into {y}, which is outside the set")
            if y in seen:
                raise BrokenAction(f"{y} lies on two different orbits; action is not a bijection")
        seen.update(orb)
        sizes[len(orb)] += 1
        k = orb.index(min(orb, key=key)) if key is not None else 0
        orbits.append(tuple(orb[k:] + orb[:k]))
    if key is not None:
        orbits.sort(key=lambda o: key(o[0]))
    return OrbitCensus(sizes, orbits)
