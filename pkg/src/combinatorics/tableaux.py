"""
Semistandard and Littlewood-Richardson tableaux.

Besides plain enumeration this module builds the special filling H_D,
the assembly T1*T2 of a tableau pair on the shape F, and the indexing
sets of pairs used by the highest weight vector construction.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.combinatorics.partitions import Partition, SkewShape, conjugate, contains, partitions_between

logger = logging.getLogger("TABLEAUX")

Box = Tuple[int, int]


@dataclass(frozen=True)
class Content:
    """Content vector (alpha_1, ..., alpha_m); trailing zeros are kept."""

    counts: Tuple[int, ...] = ()

    def __post_init__(self):
        counts = tuple(int(x) for x in self.counts)
        if any(x < 0 for x in counts):
            raise ValueError(f"Content entries must be nonnegative, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, *counts: int) -> "Content":
        return cls(tuple(counts))

    @classmethod
    def from_string(cls, text: str) -> "Content":
        text = text.strip()
        if text in ("", "()"):
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise ValueError(f"Cannot parse content from {text!r}")

    def total(self) -> int:
        return sum(self.counts)

    def stripped(self) -> "Content":
        counts = self.counts
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        return Content(counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.counts)


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew shape; cells hold (row, col, value) in row-major order."""

    shape: SkewShape
    cells: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        cells = tuple(sorted((int(i), int(j), int(v)) for i, j, v in self.cells))
        if [(i, j) for i, j, _ in cells] != self.shape.boxes():
            raise ValueError(f"Entries do not cover the boxes of {self.shape} exactly")
        if any(v < 1 for _, _, v in cells):
            raise ValueError("Tableau entries must be positive integers")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_mapping(cls, shape: SkewShape, entries: Dict[Box, int]) -> "Tableau":
        return cls(shape, tuple((i, j, v) for (i, j), v in entries.items()))

    @classmethod
    def from_rows(cls, outer: Partition, inner: Partition, rows: Sequence[Sequence[Optional[int]]]) -> "Tableau":
        """
        Build a tableau from printed rows, None marking boxes of the inner shape.

        Args:
            outer: Outer shape
            inner: Inner shape
            rows: One list per row of outer

        Returns:
            Tableau of shape outer/inner
        """
        entries = {}
        for i, row in enumerate(rows, start=1):
            for j, value in enumerate(row, start=1):
                if value is not None:
                    entries[(i, j)] = value
        return cls.from_mapping(SkewShape(outer, inner), entries)

    def entries(self) -> Dict[Box, int]:
        return {(i, j): v for i, j, v in self.cells}

    def entry(self, i: int, j: int) -> int:
        return self.entries()[(i, j)]

    def rows(self) -> List[List[Optional[int]]]:
        """Printed rows with None in the inner boxes."""
        grid = [[None] * self.shape.outer.part(i) for i in range(1, self.shape.outer.depth() + 1)]
        for i, j, v in self.cells:
            grid[i - 1][j - 1] = v
        return grid

    def transpose(self) -> "Tableau":
        return Tableau(self.shape.transpose(), tuple((j, i, v) for i, j, v in self.cells))

    def is_empty(self) -> bool:
        return len(self.cells) == 0

    def to_dict(self) -> dict:
        return {"shape": str(self.shape.outer), "inner": str(self.shape.inner), "rows": self.rows()}


class Origin(str, Enum):
    """Which piece of T1*T2 a box came from."""

    H_UP = "h_up"
    H_DOWN = "h_down"
    T1 = "t1"
    T2 = "t2"


@dataclass(frozen=True)
class ComposedTableau(Tableau):
    """Output of star_compose: a tableau of shape F remembering each box's origin."""

    origins: Tuple[Origin, ...] = field(default=())

    @cached_property
    def origin_map(self) -> Dict[Box, Origin]:
        return {(i, j): origin for (i, j, _), origin in zip(self.cells, self.origins)}

    def origin(self, i: int, j: int) -> Origin:
        return self.origin_map[(i, j)]


@dataclass(frozen=True)
class TableauPair:
    """
    Pair (T1, T2) with T1 semistandard on E/D and T2 semistandard on F^t/E^t.
    """

    t1: Tableau
    t2: Tableau
    outer: Partition
    inner: Partition
    middle: Partition

    def __post_init__(self):
        if self.t1.shape != SkewShape(self.middle, self.inner):
            raise ValueError(f"T1 has shape {self.t1.shape}, expected ({self.middle})/({self.inner})")
        expected = SkewShape(self.outer, self.middle).transpose()
        if self.t2.shape != expected:
            raise ValueError(f"T2 has shape {self.t2.shape}, expected {expected}")
        if not is_semistandard(self.t1) or not is_semistandard(self.t2):
            raise ValueError("Both tableaux of a pair must be semistandard")

    @property
    def alpha(self) -> Content:
        return content_of(self.t1)

    @property
    def beta(self) -> Content:
        return content_of(self.t2)

    def to_dict(self) -> dict:
        return {"E": str(self.middle), "t1": self.t1.to_dict(), "t2": self.t2.to_dict()}


def is_semistandard(T: Tableau) -> bool:
    entries = T.entries()
    for (i, j), v in entries.items():
        right = entries.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = entries.get((i + 1, j))
        if below is not None and below <= v:
            return False
    return True


def content_of(T: Tableau) -> Content:
    if T.is_empty():
        return Content(())
    values = np.array([v for _, _, v in T.cells])
    return Content(tuple(int(x) for x in np.bincount(values)[1:]))


def _fill(shape: SkewShape, content: Content, emit) -> None:
    """Row-major backtracking over semistandard fillings; emit(entries) per completed filling."""
    boxes = shape.boxes()
    remaining = list(content.counts)
    if sum(remaining) != len(boxes):
        return
    entries: Dict[Box, int] = {}

    def place(k: int):
        if k == len(boxes):
            emit(entries)
            return
        i, j = boxes[k]
        low = 1
        left = entries.get((i, j - 1))
        if left is not None:
            low = left
        up = entries.get((i - 1, j))
        if up is not None:
            low = max(low, up + 1)
        for value in range(low, len(remaining) + 1):
            if remaining[value - 1] == 0:
                continue
            remaining[value - 1] -= 1
            entries[(i, j)] = value
            place(k + 1)
            del entries[(i, j)]
            remaining[value - 1] += 1

    place(0)


def enumerate_ssyt(shape: SkewShape, content: Content) -> List[Tableau]:
    found: List[Tableau] = []
    _fill(shape, content, lambda entries: found.append(Tableau.from_mapping(shape, entries)))
    return found


def count_ssyt(shape: SkewShape, content: Content) -> int:
    """Same enumeration as enumerate_ssyt without building tableaux."""
    counter = [0]

    def bump(_):
        counter[0] += 1

    _fill(shape, content, bump)
    return counter[0]


def count_ssyt_bounded(shape: SkewShape, m: int) -> int:
    """Number of semistandard fillings of shape with entries in 1..m."""
    boxes = shape.boxes()
    entries: Dict[Box, int] = {}

    def place(k: int) -> int:
        if k == len(boxes):
            return 1
        i, j = boxes[k]
        low = 1
        left = entries.get((i, j - 1))
        if left is not None:
            low = left
        up = entries.get((i - 1, j))
        if up is not None:
            low = max(low, up + 1)
        total = 0
        for value in range(low, m + 1):
            entries[(i, j)] = value
            total += place(k + 1)
        entries.pop((i, j), None)
        return total

    return place(0)


def word(T: Tableau) -> Tuple[int, ...]:
    result: List[int] = []
    for row in T.rows():
        result.extend(v for v in reversed(row) if v is not None)
    return tuple(result)


def is_yamanouchi(w: Sequence[int]) -> bool:
    seen: Dict[int, int] = {}
    for letter in w:
        seen[letter] = seen.get(letter, 0) + 1
        if letter > 1 and seen[letter] > seen.get(letter - 1, 0):
            return False
    return True


def enumerate_lr(shape: SkewShape, content: Content) -> List[Tableau]:
    counts = content.stripped().counts
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)):
        return []
    return [T for T in enumerate_ssyt(shape, Content(counts)) if is_yamanouchi(word(T))]


def h_tableau(D: Partition, r: int) -> Tableau:
    """
    The filling H_D: rows 1..min(l(D), r) hold their row index,
    lower rows hold the column index.
    """
    entries = {(i, j): (i if i <= r else j) for i, j in D.boxes()}
    return Tableau.from_mapping(SkewShape(D), entries)


def h_split(D: Partition, r: int) -> Tuple[Tableau, Tableau]:
    """H_D split into the top r rows and the rows below."""
    top = Partition(D.parts[:r])
    full = h_tableau(D, r).entries()
    upper = Tableau.from_mapping(SkewShape(top), {b: v for b, v in full.items() if b[0] <= r})
    lower = Tableau.from_mapping(SkewShape(D, top), {b: v for b, v in full.items() if b[0] > r})
    return upper, lower


def star_compose(pair: TableauPair, r: int) -> ComposedTableau:
    """
    Assemble T1*T2 on the shape F.

    H_D fills D, T1 fills E/D in place and each T2 box at (a, b) of
    F^t/E^t lands on (b, a) of F.

    Args:
        pair: Valid tableau pair
        r: Number of H_D rows filled with their row index

    Returns:
        ComposedTableau of shape F
    """
    placed: Dict[Box, Tuple[int, Origin]] = {}
    for (i, j), v in h_tableau(pair.inner, r).entries().items():
        placed[(i, j)] = (v, Origin.H_UP if i <= r else Origin.H_DOWN)
    for (i, j), v in pair.t1.entries().items():
        placed[(i, j)] = (v, Origin.T1)
    for (a, b), v in pair.t2.entries().items():
        if (b, a) in placed:
            raise ValueError(f"T2 box {(a, b)} overlaps E at {(b, a)}")
        placed[(b, a)] = (v, Origin.T2)
    boxes = pair.outer.boxes()
    if sorted(placed) != boxes:
        raise ValueError(f"T1*T2 does not cover ({pair.outer}) exactly")
    return ComposedTableau(
        SkewShape(pair.outer),
        tuple((i, j, placed[(i, j)][0]) for i, j in boxes),
        tuple(placed[(i, j)][1] for i, j in boxes),
    )


def split_star(T: ComposedTableau, outer: Partition, inner: Partition, middle: Partition) -> TableauPair:
    """Recover (T1, T2) from T1*T2 given (F, D, E)."""
    entries = T.entries()
    t1 = Tableau.from_mapping(SkewShape(middle, inner), {b: entries[b] for b in SkewShape(middle, inner).boxes()})
    t2_shape = SkewShape(outer, middle).transpose()
    t2 = Tableau.from_mapping(t2_shape, {(a, b): entries[(b, a)] for a, b in t2_shape.boxes()})
    return TableauPair(t1, t2, outer, inner, middle)


def _pairs(F: Partition, D: Partition, alpha: Content, beta: Content) -> Iterator[TableauPair]:
    if not contains(F, D):
        return
    conj_F = conjugate(F)
    for E in partitions_between(D, F, D.size() + alpha.total()):
        lower = enumerate_ssyt(SkewShape(E, D), alpha)
        if not lower:
            continue
        upper = enumerate_ssyt(SkewShape(conj_F, conjugate(E)), beta)
        for t1 in lower:
            for t2 in upper:
                yield TableauPair(t1, t2, F, D, E)


def enumerate_pairs(F: Partition, D: Partition, alpha: Content, beta: Content, n: Optional[int] = None) -> List[TableauPair]:
    """
    The set T(F,D,alpha,beta): union over D ⊆ E ⊆ F of SST(E/D, alpha) x SST(F^t/E^t, beta).

    Args:
        F, D: Outer shape and the shape filled by H_D
        alpha, beta: Contents of T1 and T2
        n: Ambient gl_n rank; F must have at most n rows

    Returns:
        Pairs ordered by E (lexicographic) then by row-major fillings
    """
    if n is not None and F.depth() > n:
        raise ValueError(f"Partition ({F}) has more than n={n} rows")
    pairs = list(_pairs(F, D, alpha, beta))
    logger.debug(f"{len(pairs)} pairs for F=({F}) D=({D}) alpha=({alpha}) beta=({beta})")
    return pairs


def enumerate_pq_tableaux(F: Partition, alpha: Content, beta: Content) -> List[TableauPair]:
    return enumerate_pairs(F, Partition(()), alpha, beta)
