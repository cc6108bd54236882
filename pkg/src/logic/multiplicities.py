"""
Multiplicity and dimension formulas for polynomial gl(p|q)-modules.

Kostka numbers, Littlewood-Richardson coefficients, the branching
multiplicities N and Ñ, weight multiplicities N', dim L^F and the
branching tables for the subalgebras gl_{r|s} ⊕ h, gl_{r|s},
gl_{r|s} ⊕ gl_{r'|s'} and the even part gl_p ⊕ gl_q.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from src.combinatorics.partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    in_hook,
    in_hook_depth,
    partitions_between,
    partitions_of,
    sharp,
)
from src.combinatorics.tableaux import Content, count_ssyt, count_ssyt_bounded, enumerate_lr

logger = logging.getLogger("BRANCH")

Label = Tuple[Union[Partition, Content], ...]


class TableKind(str, Enum):
    """Which decomposition a BranchingTable holds, and so the shape of its labels."""

    PAIR = "pair"
    EVEN = "even"
    M = "m"
    SUB = "sub"
    WEIGHTS = "weights"


@dataclass
class BranchingTable:
    """
    Decomposition data: label -> positive multiplicity.

    Labels are (D, alpha, beta) for M, (D, E) for PAIR and EVEN,
    (alpha, beta) for WEIGHTS and (D,) for SUB.
    """

    kind: TableKind
    entries: Dict[Label, int] = field(default_factory=dict)

    def add(self, label: Label, mult: int):
        if mult > 0:
            self.entries[label] = self.entries.get(label, 0) + mult

    def __getitem__(self, label: Label) -> int:
        return self.entries.get(label, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def to_rows(self) -> List[dict]:
        rows = []
        for label, mult in self.entries.items():
            if self.kind == TableKind.M:
                D, alpha, beta = label
                row = {"D": str(D), "alpha": list(alpha.counts), "beta": list(beta.counts)}
            elif self.kind in (TableKind.PAIR, TableKind.EVEN):
                D, E = label
                row = {"D": str(D), "E": str(E)}
            elif self.kind == TableKind.WEIGHTS:
                alpha, beta = label
                row = {"alpha": list(alpha.counts), "beta": list(beta.counts)}
            else:
                row = {"D": str(label[0])}
            row["mult"] = mult
            rows.append(row)
        return rows


def compositions(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of total into length parts, in reverse lex order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _kostka(outer: Partition, inner: Partition, counts: Tuple[int, ...]) -> int:
    if not contains(outer, inner):
        return 0
    return count_ssyt(SkewShape(outer, inner), Content(counts))


def kostka(shape: SkewShape, content: Content) -> int:
    return _kostka(shape.outer, shape.inner, content.stripped().counts)


def skew_kostka(outer: Partition, inner: Partition, content: Content) -> int:
    """K_{outer/inner, content}; zero when inner is not inside outer."""
    return _kostka(outer, inner, content.stripped().counts)


@lru_cache(maxsize=None)
def _lr(F: Partition, D: Partition, E: Partition) -> int:
    if not contains(F, D) or F.size() != D.size() + E.size():
        return 0
    return len(enumerate_lr(SkewShape(F, D), Content(E.parts)))


def lr_coefficient(F: Partition, D: Partition, E: Partition) -> int:
    return _lr(F, D, E)


def branch_N(F: Partition, D: Partition, alpha: Content, beta: Content) -> int:
    """
    N_(F,D,alpha,beta) = Σ_E K_{E/D,alpha} K_{F^t/E^t,beta}.

    Args:
        F: Shape of the gl_n module
        D: Highest weight of the gl_{r|s} piece
        alpha, beta: Weights of the tori h_{r'} and h_{s'}

    Returns:
        Branching multiplicity
    """
    if not contains(F, D) or D.size() + alpha.total() + beta.total() != F.size():
        return 0
    conj_F = conjugate(F)
    total = 0
    for E in partitions_between(D, F, D.size() + alpha.total()):
        lower = skew_kostka(E, D, alpha)
        if lower:
            total += lower * skew_kostka(conj_F, conjugate(E), beta)
    return total


@lru_cache(maxsize=None)
def _bounded(outer: Partition, inner: Partition, m: int) -> int:
    return count_ssyt_bounded(SkewShape(outer, inner), m)


def branch_Ntilde(F: Partition, D: Partition, rprime: int, sprime: int, n: Optional[int] = None) -> int:
    """
    Ñ_(F,D): multiplicity of L^D_{r|s} in L^F_{p|q} restricted to gl_{r|s}.

    The sum over (alpha, beta) factors through E: for each E the alpha-sum
    counts fillings of E/D from 1..r' and the beta-sum those of F^t/E^t from 1..s'.
    """
    if n is not None and (F.depth() > n or D.depth() > n):
        raise ValueError(f"Partitions ({F}) and ({D}) must have at most n={n} rows")
    if not contains(F, D):
        return 0
    conj_F = conjugate(F)
    total = 0
    for E in partitions_between(D, F):
        lower = _bounded(E, D, rprime)
        if lower:
            total += lower * _bounded(conj_F, conjugate(E), sprime)
    return total


def weight_mult(F: Partition, alpha: Content, beta: Content) -> int:
    """N'_(F,alpha,beta): dimension of the (alpha, beta) weight space of L^F_{p|q}."""
    return branch_N(F, Partition(()), alpha, beta)


def dim_irrep(F: Partition, p: int, q: int) -> int:
    if not in_hook(F, p, q):
        raise ValueError(f"Partition ({F}) is not in the ({p},{q})-hook")
    return branch_Ntilde(F, Partition(()), p, q)


def dim_gl(D: Partition, m: int) -> int:
    if D.depth() > m:
        raise ValueError(f"Partition ({D}) has more than {m} rows")
    return _bounded(D, Partition(()), m)


def _hook_shapes(F: Partition, n: int, r: int, s: int, size: Optional[int] = None) -> List[Partition]:
    """Shapes inside F lying in Λ+_{n, r|s}."""
    return [D for D in partitions_between(Partition(()), F, size) if in_hook_depth(D, n, r, s)]


def branch_to_pair(F: Partition, r: int, s: int, rprime: int, sprime: int, n: Optional[int] = None) -> BranchingTable:
    """
    Restriction of L^F_{p|q} to gl_{r|s} ⊕ gl_{r'|s'}: (D, E) -> c^F_{D,E}.
    """
    n = F.depth() if n is None else n
    if not in_hook_depth(F, n, r + rprime, s + sprime):
        raise ValueError(f"Partition ({F}) is not in Λ+_(n={n}, {r + rprime}|{s + sprime})")
    table = BranchingTable(TableKind.PAIR)
    for D in _hook_shapes(F, n, r, s):
        for E in partitions_of(F.size() - D.size(), max_part=F.part(1), max_depth=n):
            if in_hook(E, rprime, sprime):
                table.add((D, E), lr_coefficient(F, D, E))
    logger.debug(f"pair branching of ({F}): {len(table)} components")
    return table


def branch_to_even(F: Partition, p: int, q: int, n: Optional[int] = None) -> BranchingTable:
    """
    Restriction of L^F_{p|q} to gl_p ⊕ gl_q.

    Labels (D, E) name the gl_p and gl_q highest weights; the
    multiplicity is c^F_{D,E^t}. D has at most min(n, p) rows, E has
    at most q rows and at most n columns.
    """
    n = F.depth() if n is None else n
    if not in_hook_depth(F, n, p, q):
        raise ValueError(f"Partition ({F}) is not in Λ+_(n={n}, {p}|{q})")
    table = BranchingTable(TableKind.EVEN)
    for D in partitions_between(Partition(()), F):
        if D.depth() > min(n, p):
            continue
        for E in partitions_of(F.size() - D.size(), max_part=n, max_depth=q):
            table.add((D, E), lr_coefficient(F, D, conjugate(E)))
    return table


def branch_to_m(F: Partition, p: int, q: int, r: int, s: int, n: Optional[int] = None) -> BranchingTable:
    """Restriction to gl_{r|s} ⊕ h_{r'} ⊕ h_{s'}: (D, alpha, beta) -> N."""
    n = F.depth() if n is None else n
    if not in_hook_depth(F, n, p, q):
        raise ValueError(f"Partition ({F}) is not in Λ+_(n={n}, {p}|{q})")
    rprime, sprime = p - r, q - s
    table = BranchingTable(TableKind.M)
    for D in _hook_shapes(F, n, r, s):
        rest = F.size() - D.size()
        for a in range(rest + 1):
            for alpha in compositions(a, rprime):
                for beta in compositions(rest - a, sprime):
                    table.add((D, Content(alpha), Content(beta)), branch_N(F, D, Content(alpha), Content(beta)))
    return table


def branch_to_sub(F: Partition, p: int, q: int, r: int, s: int, n: Optional[int] = None) -> BranchingTable:
    """Restriction to gl_{r|s}: D -> Ñ."""
    n = F.depth() if n is None else n
    if not in_hook_depth(F, n, p, q):
        raise ValueError(f"Partition ({F}) is not in Λ+_(n={n}, {p}|{q})")
    table = BranchingTable(TableKind.SUB)
    for D in _hook_shapes(F, n, r, s):
        table.add((D,), branch_Ntilde(F, D, p - r, q - s, n))
    return table


def weight_table(F: Partition, p: int, q: int) -> BranchingTable:
    """All weights of L^F_{p|q}: (alpha, beta) -> N'."""
    if not in_hook(F, p, q):
        raise ValueError(f"Partition ({F}) is not in the ({p},{q})-hook")
    table = BranchingTable(TableKind.WEIGHTS)
    for a in range(F.size() + 1):
        for alpha in compositions(a, p):
            for beta in compositions(F.size() - a, q):
                table.add((Content(alpha), Content(beta)), weight_mult(F, Content(alpha), Content(beta)))
    return table


def alt_branch_N(F: Partition, D: Partition, alpha: Content, beta: Content) -> int:
    """Σ_{E,H} c^F_{D,E} K_{H,alpha} K_{E^t/H^t,beta}."""
    size = F.size() - D.size()
    if size < 0 or size != alpha.total() + beta.total():
        return 0
    total = 0
    for E in partitions_of(size, max_part=F.part(1), max_depth=F.depth()):
        c = lr_coefficient(F, D, E)
        if not c:
            continue
        conj_E = conjugate(E)
        for H in partitions_between(Partition(()), E, alpha.total()):
            lower = skew_kostka(H, Partition(()), alpha)
            if lower:
                total += c * lower * skew_kostka(conj_E, conjugate(H), beta)
    return total


def alt_branch_Ntilde(F: Partition, D: Partition, rprime: int, sprime: int) -> int:
    """Ñ computed from the alternative formula, summed over all (alpha, beta)."""
    total = 0
    rest = F.size() - D.size()
    for a in range(rest + 1):
        for alpha in compositions(a, rprime):
            for beta in compositions(rest - a, sprime):
                total += alt_branch_N(F, D, Content(alpha), Content(beta))
    return total


def top_even_label(F: Partition, p: int, q: int) -> Tuple[Partition, Partition]:
    """The gl_p ⊕ gl_q label carrying the highest weight F# itself."""
    weight = sharp(F, p, q)
    return Partition(weight.even()), Partition(weight.odd())
