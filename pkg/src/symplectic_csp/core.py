"""Value types: letters of the symplectic alphabet, partitions, tableaux, weights.

Letters of the alphabet ``1 < 2 < ... < m < m̄ < ... < 2̄ < 1̄`` are stored inside
tableaux and words as *ranks* ``1..2m``: unbarred ``i`` has rank ``i`` and
barred ``i`` has rank ``2m + 1 - i``.  Externally (JSON, CLI) a barred letter
is written as a negative integer, so ``-3`` means ``3̄``.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

BAR = "̄"

Weight = tuple[int, ...]


class InvalidTableau(ValueError):
    """A filling that is not a Kashiwara-Nakashima tableau."""

    def __init__(self, message: str, violation: "Violation | None" = None):
        super().__init__(message)
        self.violation = violation


# ---------------------------------------------------------------------------
# Letters


@functools.total_ordering
@dataclass(frozen=True)
class Letter:
    index: int
    barred: bool = False

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")

    def _key(self) -> tuple[int, int]:
        return (1, -self.index) if self.barred else (0, self.index)

    def __lt__(self, other: Letter) -> bool:
        if not isinstance(other, Letter):
            return NotImplemented
        return self._key() < other._key()

    def rank(self, m: int) -> int:
        if self.index > m:
            raise ValueError(f"letter {self} out of range for m={m}")
        return 2 * m + 1 - self.index if self.barred else self.index

    @classmethod
    def from_rank(cls, rank: int, m: int) -> Letter:
        if not 1 <= rank <= 2 * m:
            raise ValueError(f"rank {rank} out of range for m={m}")
        return cls(rank) if rank <= m else cls(2 * m + 1 - rank, True)

    @property
    def signed(self) -> int:
        return -self.index if self.barred else self.index

    @classmethod
    def from_signed(cls, value: int) -> Letter:
        if value == 0:
            raise ValueError("0 is not a letter")
        return cls(abs(value), value < 0)

    @classmethod
    def parse(cls, text: str | int) -> Letter:
        """Accepts ``3``, ``"3"``, ``"-3"`` and ``"3̄"``."""
        if isinstance(text, int):
            return cls.from_signed(text)
        s = text.strip()
        if s.endswith(BAR):
            return cls(int(s[: -len(BAR)]), True)
        return cls.from_signed(int(s))

    def __str__(self) -> str:
        return f"{self.index}{BAR}" if self.barred else str(self.index)

    def weight(self, m: int) -> Weight:
        w = [0] * m
        w[self.index - 1] = -1 if self.barred else 1
        return tuple(w)


def alphabet(m: int) -> list[Letter]:
    """The 2m letters in increasing order."""
    return [Letter.from_rank(r, m) for r in range(1, 2 * m + 1)]


def rank_to_signed(rank: int, m: int) -> int:
    return rank if rank <= m else rank - 2 * m - 1


def signed_to_rank(value: int, m: int) -> int:
    if value == 0 or abs(value) > m:
        raise ValueError(f"letter {value} out of range for m={m}")
    return value if value > 0 else 2 * m + 1 + value


def rank_str(rank: int, m: int) -> str:
    return str(Letter.from_rank(rank, m))


def bar(rank: int, m: int) -> int:
    """Rank of the letter with the opposite bar."""
    return 2 * m + 1 - rank


# ---------------------------------------------------------------------------
# Partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1"``; the empty string (or ``"0"``) is the empty partition."""
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls(())
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @functools.cached_property
    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(i, j)``, 1-based, row by row."""
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, cell: object) -> bool:
        if not (isinstance(cell, tuple) and len(cell) == 2):
            return False
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def _check_cell(self, cell: tuple[int, int]) -> tuple[int, int]:
        if cell not in self:
            raise ValueError(f"cell {cell} is outside the shape {self}")
        return cell

    def hook(self, cell: tuple[int, int]) -> int:
        i, j = self._check_cell(cell)
        return self.part(i) + self.conjugate.part(j) - i - j + 1

    def r_value(self, cell: tuple[int, int]) -> int:
        i, j = self._check_cell(cell)
        if i > j:
            return self.part(i) + self.part(j) - i - j + 2
        t = self.conjugate
        return i + j - t.part(i) - t.part(j)

    def kappa(self) -> int:
        return sum((i - 1) * p for i, p in enumerate(self.parts, 1))


def as_partition(shape: Partition | Iterable[int]) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(tuple(shape))


def conjugate(shape: Partition | Iterable[int]) -> Partition:
    return as_partition(shape).conjugate


def hook(shape: Partition | Iterable[int], cell: tuple[int, int]) -> int:
    return as_partition(shape).hook(cell)


def r_value(shape: Partition | Iterable[int], cell: tuple[int, int]) -> int:
    return as_partition(shape).r_value(cell)


def kappa(shape: Partition | Iterable[int]) -> int:
    return as_partition(shape).kappa()


# ---------------------------------------------------------------------------
# KN conditions


@dataclass(frozen=True)
class Violation:
    """Witness for a failed KN condition (rows and columns are 1-based)."""

    condition: int
    column: int
    detail: str

    def __str__(self) -> str:
        return f"condition {self.condition}, column {self.column}: {self.detail}"


def _columns(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    if not rows:
        return []
    return [tuple(row[j] for row in rows if j < len(row)) for j in range(len(rows[0]))]


def column_violation(col: Sequence[int], m: int, column: int = 1) -> Violation | None:
    """Conditions 1 (column part) and 2 for one column of ranks, top to bottom."""
    for r in range(len(col) - 1):
        if col[r] >= col[r + 1]:
            return Violation(1, column, f"column not strictly increasing at rows {r + 1},{r + 2}")
    h = len(col)
    pos = {x: r for r, x in enumerate(col, 1)}
    for i in range(1, m + 1):
        ib = 2 * m + 1 - i
        if i in pos and ib in pos:
            p = pos[i]
            q = h - pos[ib] + 1
            if p + q > i:
                return Violation(2, column, f"{i} in box {p} from the top, {i}{BAR} in box {q} from the bottom: p+q={p + q}>{i}")
    return None


def pair_violation(left: Sequence[int], right: Sequence[int], m: int, column: int = 1) -> Violation | None:
    """Condition 3 for adjacent columns ``left | right`` (ranks, top to bottom).

    ``column`` is the 1-based index of ``left``.  Row-weakness is not checked here.
    """
    lpos = {x: r for r, x in enumerate(left, 1)}
    rpos = {x: r for r, x in enumerate(right, 1)}
    for i in range(1, m + 1):
        ib = 2 * m + 1 - i
        s = rpos.get(ib)
        if s is None:
            continue
        p = lpos.get(i)
        if p is None:
            continue
        for j in range(i, m + 1):
            jb = 2 * m + 1 - j
            # j, j̄ in the right column, or both in the left column
            for where, cfg in ((rpos, 1), (lpos, 2)):
                q = where.get(j)
                r = where.get(jb)
                if q is None or r is None:
                    continue
                if p <= q < r <= s and (q - p) + (s - r) >= j - i:
                    return Violation(
                        3,
                        column,
                        f"configuration {cfg} with i={i}, j={j}, (p,q,r,s)=({p},{q},{r},{s}):"
                        f" (q-p)+(s-r)={(q - p) + (s - r)} >= j-i={j - i}",
                    )
    return None


def kn_violation(rows: Sequence[Sequence[int]], m: int) -> Violation | None:
    """First failed KN condition of a filling given as rows of ranks, or ``None``."""
    for r, row in enumerate(rows, 1):
        for c in range(len(row) - 1):
            if row[c] > row[c + 1]:
                return Violation(1, c + 1, f"row {r} decreases between columns {c + 1},{c + 2}")
    cols = _columns(rows)
    for c, col in enumerate(cols, 1):
        v = column_violation(col, m, c)
        if v is not None:
            return v
    for c in range(len(cols) - 1):
        v = pair_violation(cols[c], cols[c + 1], m, c + 1)
        if v is not None:
            return v
    return None


# ---------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class KNTableau:
    """A filling of ``shape`` by letter ranks ``1..2m``.

    The constructor only checks that the filling fits the shape and alphabet;
    use :meth:`from_letters` / :meth:`from_json` (or :func:`kn_violation`) for
    full KN validation.
    """

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise ValueError(f"rows {rows} do not fill shape {self.shape}")
        if any(not 1 <= x <= 2 * self.m for r in rows for x in r):
            raise ValueError(f"entry out of range for m={self.m}")

    @classmethod
    def from_letters(cls, rows: Sequence[Sequence[int | str | Letter]], m: int, validate: bool = True) -> KNTableau:
        """Build from signed integers / strings (``-3`` or ``"3̄"`` for a barred 3)."""
        ranks = tuple(
            tuple((x if isinstance(x, Letter) else Letter.parse(x)).rank(m) for x in row) for row in rows
        )
        shape = Partition(tuple(len(r) for r in ranks))
        if shape.length > m:
            raise InvalidTableau(f"shape {shape} has more than m={m} rows")
        if validate:
            v = kn_violation(ranks, m)
            if v is not None:
                raise InvalidTableau(f"not a KN tableau: {v}", v)
        return cls(shape, ranks, m)

    @classmethod
    def highest_weight(cls, shape: Partition | Iterable[int], m: int) -> KNTableau:
        """Row ``i`` filled with ``i``."""
        shape = as_partition(shape)
        if shape.length > m:
            raise ValueError(f"shape {shape} has more than m={m} rows")
        return cls(shape, tuple((i,) * p for i, p in enumerate(shape.parts, 1)), m)

    @functools.cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_columns(self.rows))

    def letters(self) -> list[list[Letter]]:
        return [[Letter.from_rank(x, self.m) for x in row] for row in self.rows]

    def signed_rows(self) -> list[list[int]]:
        return [[rank_to_signed(x, self.m) for x in row] for row in self.rows]

    def violation(self) -> Violation | None:
        return kn_violation(self.rows, self.m)

    def is_valid(self) -> bool:
        return self.shape.length <= self.m and self.violation() is None

    @property
    def weight(self) -> Weight:
        return rows_weight(self.rows, self.m)

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return self.rows

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [[str(v) for v in row] for row in self.signed_rows()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, m: int | None = None, validate: bool = True) -> KNTableau:
        rows = [[int(x) for x in row] for row in data["rows"]]
        if m is None:
            m = max((abs(x) for row in rows for x in row), default=1)
        t = cls.from_letters(rows, m, validate=validate)
        if list(t.shape.parts) != list(data.get("shape", t.shape.parts)):
            raise ValueError(f"shape field {data['shape']} does not match rows")
        return t

    @classmethod
    def from_json(cls, text: str, m: int | None = None, validate: bool = True) -> KNTableau:
        return cls.from_dict(json.loads(text), m, validate)

    def pretty(self) -> str:
        cells = [[rank_str(x, self.m) for x in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        # combining bar has zero display width
        return "\n".join(" ".join(c.rjust(width + c.count(BAR)) for c in row) for row in cells)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ",".join(rank_str(x, self.m) for x in row) + "]" for row in self.rows) + "]"


def rows_weight(rows: Iterable[Iterable[int]], m: int) -> Weight:
    w = [0] * m
    for row in rows:
        for x in row:
            if x <= m:
                w[x - 1] += 1
            else:
                w[2 * m - x] -= 1
    return tuple(w)


def weight(t: KNTableau) -> Weight:
    return t.weight
