"""Construction of SP(λ, 2m) by crystal closure and by direct filtering of fillings."""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .core import KNTableau, Partition, Weight, as_partition, column_violation, pair_violation
from .crystal import crystal_closure

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    pass


def _check_shape(shape: Partition, m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if shape.length > m:
        raise ValueError(f"shape {shape} has {shape.length} rows, more than m={m}")


@dataclass(frozen=True)
class TableauSet:
    shape: Partition
    m: int
    members: tuple[KNTableau, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members, key=KNTableau.sort_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, t: object) -> bool:
        return t in self._index

    @functools.cached_property
    def _index(self) -> frozenset[KNTableau]:
        return frozenset(self.members)

    @functools.cached_property
    def weight_index(self) -> Counter:
        return Counter(t.weight for t in self.members)

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "m": self.m,
            "count": len(self.members),
            "weights": [{"chi": list(chi), "count": k} for chi, k in sorted(self.weight_index.items())],
        }


def enumerate_by_crystal(shape: Partition | Iterable[int], m: int, cap: int = DEFAULT_CAP) -> TableauSet:
    """All tableaux reachable from the highest-weight tableau by the ``f_i``."""
    shape = as_partition(shape)
    _check_shape(shape, m)
    vertices, _ = crystal_closure(KNTableau.highest_weight(shape, m), cap)
    return TableauSet(shape, m, tuple(vertices))


@functools.lru_cache(maxsize=None)
def admissible_columns(height: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing columns of ranks satisfying the single-column condition."""
    return tuple(
        col for col in itertools.combinations(range(1, 2 * m + 1), height) if column_violation(col, m) is None
    )


def enumerate_by_filter(shape: Partition | Iterable[int], m: int, cap: int = DEFAULT_CAP) -> TableauSet:
    """All KN fillings, built column by column with pruning."""
    shape = as_partition(shape)
    _check_shape(shape, m)
    heights = shape.conjugate.parts
    found: list[KNTableau] = []

    def extend(cols: list[tuple[int, ...]]) -> None:
        c = len(cols)
        if c == len(heights):
            rows = tuple(tuple(col[r] for col in cols if r < len(col)) for r in range(shape.length))
            found.append(KNTableau(shape, rows, m))
            if len(found) > cap:
                raise EnumerationCapExceeded(f"SP({shape},{2 * m}) exceeds cap {cap}")
            return
        for col in admissible_columns(heights[c], m):
            if c:
                left = cols[-1]
                if any(left[r] > col[r] for r in range(len(col))):
                    continue
                if pair_violation(left, col, m) is not None:
                    continue
            cols.append(col)
            extend(cols)
            cols.pop()

    extend([])
    return TableauSet(shape, m, tuple(found))


def enumerate_tableaux(shape: Partition | Iterable[int], m: int, cap: int = DEFAULT_CAP) -> TableauSet:
    return enumerate_by_crystal(shape, m, cap)


def weight_multiset(s: TableauSet) -> dict[Weight, int]:
    return dict(s.weight_index)
