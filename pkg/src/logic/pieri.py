"""
Iterated Pieri rules and the Schur polynomial oracle.

Both paths here are independent of the tableau backtracker in
src.combinatorics.tableaux, so they serve as cross-checks for
Kostka numbers and Littlewood-Richardson coefficients.
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.rings import ring

from src.combinatorics.partitions import Partition, conjugate, contains


def pieri_rows(D: Partition, k: int, n: Optional[int] = None) -> List[Partition]:
    """
    Shapes E such that E/D is a horizontal strip of k boxes.

    Args:
        D: Starting shape
        k: Strip size (degree of the symmetric power)
        n: Optional bound on the number of rows of E

    Returns:
        List of shapes, each occurring with multiplicity one
    """
    rows = D.depth() + 1 if n is None else min(D.depth() + 1, n)
    result: List[Partition] = []

    def extend(i: int, prefix: Tuple[int, ...], left: int):
        if i > rows:
            if left == 0:
                result.append(Partition(prefix))
            return
        # row i may grow up to the old length of row i-1
        cap = D.part(i - 1) - D.part(i) if i > 1 else left
        for add in range(min(cap, left), -1, -1):
            extend(i + 1, prefix + (D.part(i) + add,), left - add)

    extend(1, (), k)
    return result


def pieri_columns(D: Partition, k: int, n: Optional[int] = None) -> List[Partition]:
    """Shapes E such that E/D is a vertical strip of k boxes."""
    result = [conjugate(E) for E in pieri_rows(conjugate(D), k)]
    if n is not None:
        result = [E for E in result if E.depth() <= n]
    return result


def iterated_pieri(D: Partition, alpha: Sequence[int], n: Optional[int] = None) -> Counter:
    """Multiplicities of rho^E in rho^D ⊗ S^{alpha_1} ⊗ ... ⊗ S^{alpha_k}."""
    current: Counter = Counter({D: 1})
    for a in alpha:
        following: Counter = Counter()
        for shape, mult in current.items():
            for E in pieri_rows(shape, a, n):
                following[E] += mult
        current = following
    return current


def iterated_dual_pieri(D: Partition, beta: Sequence[int], n: Optional[int] = None) -> Counter:
    """Multiplicities of rho^E in rho^D ⊗ Λ^{beta_1} ⊗ ... ⊗ Λ^{beta_k}."""
    current: Counter = Counter({D: 1})
    for b in beta:
        following: Counter = Counter()
        for shape, mult in current.items():
            for E in pieri_columns(shape, b, n):
                following[E] += mult
        current = following
    return current


def tensor_multiplicity(F: Partition, D: Partition, alpha: Sequence[int], beta: Sequence[int], n: int) -> int:
    """Multiplicity of rho^F_n in rho^D_n ⊗ S^alpha ⊗ Λ^beta, by iterated Pieri."""
    if D.depth() > n:
        return 0
    total = 0
    for E, mult in iterated_pieri(D, alpha, n).items():
        if contains(F, E):
            total += mult * iterated_dual_pieri(E, beta, n)[F]
    return total


@lru_cache(maxsize=None)
def _polynomial_ring(m: int):
    return ring(",".join(f"x{i}" for i in range(1, m + 1)), ZZ)


def _strips_below(outer: Partition, inner: Partition) -> List[Partition]:
    """Shapes nu with inner ⊆ nu ⊆ outer and outer/nu a horizontal strip."""
    result: List[Partition] = []
    rows = outer.depth()

    def extend(i: int, prefix: Tuple[int, ...]):
        if i > rows:
            result.append(Partition(prefix))
            return
        low = max(outer.part(i + 1), inner.part(i))
        for part in range(low, outer.part(i) + 1):
            extend(i + 1, prefix + (part,))

    extend(1, ())
    return result


def schur_polynomial(outer: Partition, inner: Partition, m: int):
    """
    Skew Schur polynomial s_{outer/inner}(x1..xm) in ZZ[x1..xm].

    The last variable is peeled off one horizontal strip at a time:
    s_{λ/μ}(x1..xm) = Σ_ν s_{ν/μ}(x1..x_{m-1}) · x_m^{|λ/ν|}.
    """
    if m < 1:
        raise ValueError("Schur polynomial oracle needs at least one variable")
    return _schur(outer, inner, m)


@lru_cache(maxsize=None)
def _schur(outer: Partition, inner: Partition, m: int):
    R, *xs = _polynomial_ring(m)
    if not contains(outer, inner):
        return R.zero
    if outer == inner:
        return R.one
    if m == 1:
        # a single variable only fills a horizontal strip
        if all(outer.part(i + 1) <= inner.part(i) for i in range(1, outer.depth() + 1)):
            return xs[0] ** (outer.size() - inner.size())
        return R.zero
    total = R.zero
    for nu in _strips_below(outer, inner):
        if not contains(nu, inner):
            continue
        lower = _schur(nu, inner, m - 1)
        if lower == 0:
            continue
        total += R.from_dict({exp + (0,): c for exp, c in lower.items()}) * xs[-1] ** (outer.size() - nu.size())
    return total


def kostka_by_polynomial(outer: Partition, inner: Partition, content: Sequence[int]) -> int:
    """Coefficient of x^content in s_{outer/inner}."""
    content = tuple(content)
    if sum(content) != outer.size() - inner.size():
        return 0
    if not content:
        return 1 if outer == inner else 0
    poly = schur_polynomial(outer, inner, len(content))
    return int(dict(poly).get(content, 0))


def lr_by_polynomial(F: Partition, D: Partition, E: Partition) -> int:
    """Coefficient of s_F in s_D · s_E, by peeling off leading Schur terms."""
    if F.size() != D.size() + E.size():
        return 0
    if F.depth() > D.depth() + E.depth():
        return 0
    m = max(F.depth(), D.depth() + E.depth(), 1)
    R, *_ = _polynomial_ring(m)
    product = schur_polynomial(D, Partition(()), m) * schur_polynomial(E, Partition(()), m)
    coefficients: Dict[Partition, int] = {}
    while product != 0:
        lead = product.LM
        coefficient = product.LC
        shape = Partition(tuple(lead))
        coefficients[shape] = int(coefficient)
        product -= schur_polynomial(shape, Partition(()), m) * coefficient
    return coefficients.get(F, 0)
