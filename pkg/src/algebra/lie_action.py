"""
Action of gl_n and gl(p|q) on R by superderivations, weights,
annihilation tests and the exact kernel oracle.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.superalgebra import (
    EVEN,
    ODD,
    Ambient,
    Generator,
    SuperMonomial,
    SuperPolynomial,
    normalize,
)
from src.combinatorics.partitions import Partition, sharp
from src.combinatorics.tableaux import Content

logger = logging.getLogger("ORACLE")


class Algebra(str, Enum):
    GL_N = "gl_n"
    GL_PQ = "gl_pq"


class Target(str, Enum):
    H_N = "h_n"
    H_PQ = "h_pq"


class Flavor(str, Enum):
    M = "m"  # gl_{r|s} ⊕ h_{r'} ⊕ h_{s'}
    Q = "q"  # gl_{r|s} ⊕ gl_{r'|s'}


@dataclass(frozen=True)
class BasisOperator:
    """Matrix unit E_ab of gl_n or gl(p|q)."""

    algebra: Algebra
    a: int
    b: int

    def parity(self, p: int) -> int:
        if self.algebra == Algebra.GL_N:
            return 0
        return (int(self.a > p) + int(self.b > p)) % 2

    def __str__(self) -> str:
        return f"E{self.a},{self.b}" if max(self.a, self.b) >= 10 else f"E{self.a}{self.b}"


@dataclass(frozen=True)
class Subalgebra:
    r: int
    s: int
    rprime: int
    sprime: int
    flavor: Flavor = Flavor.M

    def __post_init__(self):
        if min(self.r, self.s, self.rprime, self.sprime) < 0:
            raise ValueError(f"Subalgebra ranks must be nonnegative: {self}")

    @classmethod
    def split(cls, p: int, q: int, r: int, s: int, flavor: Flavor = Flavor.M) -> "Subalgebra":
        if not (0 <= r <= p and 0 <= s <= q):
            raise ValueError(f"Need 0 <= r <= p and 0 <= s <= q, got r={r}, s={s}, p={p}, q={q}")
        return cls(r, s, p - r, q - s, flavor)

    @property
    def p(self) -> int:
        return self.r + self.rprime

    @property
    def q(self) -> int:
        return self.s + self.sprime

    def iota(self, a: int) -> int:
        return a if a <= self.r else self.p + (a - self.r)

    def kappa(self, b: int) -> int:
        return self.r + b if b <= self.rprime else self.p + self.s + (b - self.rprime)


@dataclass(frozen=True)
class Weight:
    target: Target
    entries: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _column_index(g: Generator, p: int) -> int:
    return g.col if g.kind == EVEN else p + g.col


def _apply_to_generator(op: BasisOperator, g: Generator, ambient: Ambient) -> Optional[Generator]:
    if op.algebra == Algebra.GL_N:
        if g.row != op.b:
            return None
        return Generator(g.kind, op.a, g.col)
    if _column_index(g, ambient.p) != op.b:
        return None
    if op.a <= ambient.p:
        return Generator(EVEN, g.row, op.a)
    return Generator(ODD, g.row, op.a - ambient.p)


def _check_operator(op: BasisOperator, ambient: Ambient):
    size = ambient.n if op.algebra == Algebra.GL_N else ambient.p + ambient.q
    if not (1 <= op.a <= size and 1 <= op.b <= size):
        raise ValueError(f"{op} is outside {op.algebra.value} of size {size}")


def act_on_monomial(op: BasisOperator, m: SuperMonomial, ambient: Ambient) -> Dict[SuperMonomial, int]:
    parity = op.parity(ambient.p)
    factors = m.factors()
    result: Dict[SuperMonomial, int] = {}
    odd_before = 0
    for position, g in enumerate(factors):
        image = _apply_to_generator(op, g, ambient)
        if image is not None:
            normal = normalize(factors[:position] + (image,) + factors[position + 1:])
            if normal is not None:
                sign, target = normal
                if parity and odd_before % 2:
                    sign = -sign
                result[target] = result.get(target, 0) + sign
        odd_before += g.parity
    return result


def act(op: BasisOperator, x: SuperPolynomial) -> SuperPolynomial:
    """
    Apply E_ab as a superderivation: D(xy) = D(x)y + (-1)^{[D][x]} x D(y).

    Args:
        op: Matrix unit of gl_n or gl(p|q)
        x: Element of R

    Returns:
        op.x
    """
    _check_operator(op, x.ambient)
    terms: Dict[SuperMonomial, int] = {}
    for m, c in x.terms.items():
        for target, sign in act_on_monomial(op, m, x.ambient).items():
            terms[target] = terms.get(target, 0) + sign * c
    return SuperPolynomial(x.ambient, terms)


def _profile(m: SuperMonomial, target: Target, ambient: Ambient) -> Tuple[int, ...]:
    if target == Target.H_N:
        values, length = [g.row for g in m.factors()], ambient.n
    else:
        values, length = [_column_index(g, ambient.p) for g in m.factors()], ambient.p + ambient.q
    counts = np.bincount(np.array(values, dtype=int), minlength=length + 1) if values else np.zeros(length + 1, dtype=int)
    return tuple(int(x) for x in counts[1:])


def weight_of(x: SuperPolynomial, target: Target) -> Weight:
    if x.is_zero():
        raise ValueError("The zero polynomial has no weight")
    monomials = list(x.terms)
    first = _profile(monomials[0], target, x.ambient)
    for m in monomials[1:]:
        if _profile(m, target, x.ambient) != first:
            raise ValueError(f"Not a {target.value} weight vector: {monomials[0]} and {m} have different weights")
    return Weight(target, first)


def is_annihilated(x: SuperPolynomial, ops: Sequence[BasisOperator]) -> bool:
    return all(act(op, x).is_zero() for op in ops)


def gl_n_raising(n: int) -> List[BasisOperator]:
    return [BasisOperator(Algebra.GL_N, i, i + 1) for i in range(1, n)]


def raising_generators(sub: Subalgebra) -> List[BasisOperator]:
    ops = [BasisOperator(Algebra.GL_PQ, sub.iota(a), sub.iota(a + 1)) for a in range(1, sub.r + sub.s)]
    if sub.flavor == Flavor.Q:
        ops += [
            BasisOperator(Algebra.GL_PQ, sub.kappa(b), sub.kappa(b + 1))
            for b in range(1, sub.rprime + sub.sprime)
        ]
    return ops


def graded_component(ambient: Ambient, wN: Weight, wPQ: Weight) -> List[SuperMonomial]:
    """
    Monomials with row profile wN and column profile wPQ.

    Each monomial is an n x (p+q) matrix of exponents with the given
    margins, odd columns restricted to 0/1 entries.
    """
    rows, cols = list(wN.entries), list(wPQ.entries)
    if len(rows) != ambient.n or len(cols) != ambient.p + ambient.q:
        raise ValueError(f"Weights {wN} and {wPQ} do not fit the ambient {ambient}")
    if sum(rows) != sum(cols):
        return []
    width = len(cols)
    exponents = np.zeros((ambient.n, width), dtype=int)
    found: List[SuperMonomial] = []

    def build() -> SuperMonomial:
        factors = []
        for i in range(ambient.n):
            for c in range(width):
                kind, col = (EVEN, c + 1) if c < ambient.p else (ODD, c + 1 - ambient.p)
                factors += [Generator(kind, i + 1, col)] * int(exponents[i, c])
        return normalize(factors)[1]

    def fill(i: int, c: int, left_in_row: int):
        if i == ambient.n:
            found.append(build())
            return
        if c == width:
            if left_in_row == 0:
                fill(i + 1, 0, rows[i + 1] if i + 1 < ambient.n else 0)
            return
        cap = min(left_in_row, cols[c])
        if c >= ambient.p:
            cap = min(cap, 1)
        for amount in range(cap, -1, -1):
            exponents[i, c] = amount
            cols[c] -= amount
            fill(i, c + 1, left_in_row - amount)
            cols[c] += amount
        exponents[i, c] = 0

    fill(0, 0, rows[0] if ambient.n else 0)
    return found


def joint_kernel_dim(ops: Sequence[BasisOperator], component: Sequence[SuperMonomial], ambient: Ambient) -> int:
    """
    dim {x in span(component) : op.x = 0 for all ops}, by exact rank over QQ.
    """
    if not component:
        return 0
    if not ops:
        return len(component)
    row_index: Dict[Tuple[int, SuperMonomial], int] = {}
    entries: Dict[Tuple[int, int], int] = {}
    for k, op in enumerate(ops):
        for col, m in enumerate(component):
            for target, sign in act_on_monomial(op, m, ambient).items():
                row = row_index.setdefault((k, target), len(row_index))
                entries[(row, col)] = entries.get((row, col), 0) + sign
    if not row_index:
        return len(component)
    dense = [[QQ(0)] * len(component) for _ in range(len(row_index))]
    for (row, col), value in entries.items():
        dense[row][col] = QQ(value)
    rank = DomainMatrix(dense, (len(row_index), len(component)), QQ).rank()
    logger.debug(f"component of {len(component)} monomials, {len(row_index)} equations, rank {rank}")
    return len(component) - rank


def assemble_m_weight(D: Partition, alpha: Content, beta: Content, sub: Subalgebra) -> Tuple[int, ...]:
    """
    h_{p|q}-weight of the (D, alpha, beta) component: D# through iota,
    alpha on positions r+1..p and beta on p+s+1..p+q.
    """
    if len(alpha) != sub.rprime or len(beta) != sub.sprime:
        raise ValueError(f"alpha needs {sub.rprime} entries and beta {sub.sprime}")
    weight = np.zeros(sub.p + sub.q, dtype=int)
    d_sharp = sharp(D, sub.r, sub.s).entries
    for a, value in enumerate(d_sharp, start=1):
        weight[sub.iota(a) - 1] = value
    weight[sub.r:sub.p] = alpha.counts
    weight[sub.p + sub.s:] = beta.counts
    return tuple(int(x) for x in weight)


def assemble_q_weight(D: Partition, E: Partition, sub: Subalgebra) -> Tuple[int, ...]:
    """h_{p|q}-weight of the (D, E) component: D# through iota and E# through kappa."""
    weight = np.zeros(sub.p + sub.q, dtype=int)
    for a, value in enumerate(sharp(D, sub.r, sub.s).entries, start=1):
        weight[sub.iota(a) - 1] = value
    for b, value in enumerate(sharp(E, sub.rprime, sub.sprime).entries, start=1):
        weight[sub.kappa(b) - 1] = value
    return tuple(int(x) for x in weight)


def _row_weight(F: Partition, n: int) -> Weight:
    if F.depth() > n:
        raise ValueError(f"Partition ({F}) has more than n={n} rows")
    return Weight(Target.H_N, tuple(F.part(i) for i in range(1, n + 1)))


def oracle_branch_N(F: Partition, D: Partition, alpha: Content, beta: Content, p: int, q: int, r: int, s: int, n: int) -> int:
    """Kernel of u_n ⊕ u_m on the (psi^F_n; D#, alpha, beta) component."""
    sub = Subalgebra.split(p, q, r, s, Flavor.M)
    ambient = Ambient(n, p, q)
    wPQ = Weight(Target.H_PQ, assemble_m_weight(D, alpha, beta, sub))
    component = graded_component(ambient, _row_weight(F, n), wPQ)
    return joint_kernel_dim(gl_n_raising(n) + raising_generators(sub), component, ambient)


def oracle_lr(F: Partition, D: Partition, E: Partition, p: int, q: int, r: int, s: int, n: int) -> int:
    """Kernel of u_n ⊕ u_q on the (psi^F_n; D#, E#) component."""
    sub = Subalgebra.split(p, q, r, s, Flavor.Q)
    ambient = Ambient(n, p, q)
    wPQ = Weight(Target.H_PQ, assemble_q_weight(D, E, sub))
    component = graded_component(ambient, _row_weight(F, n), wPQ)
    return joint_kernel_dim(gl_n_raising(n) + raising_generators(sub), component, ambient)


def oracle_weight_mult(F: Partition, alpha: Content, beta: Content, p: int, q: int, n: int) -> int:
    """Kernel of u_n alone on the (psi^F_n; alpha, beta) component."""
    return oracle_branch_N(F, Partition(()), alpha, beta, p, q, 0, 0, n)
