"""
The supersymmetric algebra R = S(C^n ⊗ C^{p|q}).

Generators e_ij (1 <= i <= n, 1 <= j <= p) are even and commute with
everything; generators f_ik (1 <= k <= q) are odd and anticommute with
each other. Monomials are stored in one fixed canonical factor order
with the sign folded into the coefficient. The primed/unprimed block
structure that defines the monomial order is a context (r, s) passed to
the ordering functions, never stored on the generators.
"""

import heapq
import logging
from dataclasses import dataclass
from itertools import groupby
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

logger = logging.getLogger("SUPERALGEBRA")

EVEN = "e"
ODD = "f"


class Generator(NamedTuple):
    kind: str
    row: int
    col: int

    @property
    def parity(self) -> int:
        return 1 if self.kind == ODD else 0


def _storage_key(g: Generator) -> Tuple[int, int]:
    return (g.col, g.row)


@dataclass(frozen=True)
class Ambient:
    """Sizes (n, p, q) of R; validates and builds generators."""

    n: int
    p: int
    q: int

    def generator(self, kind: str, row: int, col: int) -> Generator:
        bound = self.p if kind == EVEN else self.q
        if kind not in (EVEN, ODD):
            raise ValueError(f"Generator kind must be 'e' or 'f', got {kind!r}")
        if not (1 <= row <= self.n and 1 <= col <= bound):
            raise ValueError(f"{kind}{row},{col} lies outside the ambient (n={self.n}, p={self.p}, q={self.q})")
        return Generator(kind, row, col)

    def e(self, i: int, j: int) -> "SuperPolynomial":
        return SuperPolynomial.from_generator(self, self.generator(EVEN, i, j))

    def f(self, i: int, k: int) -> "SuperPolynomial":
        return SuperPolynomial.from_generator(self, self.generator(ODD, i, k))

    def generators(self) -> List[Generator]:
        gens = [Generator(EVEN, i, j) for j in range(1, self.p + 1) for i in range(1, self.n + 1)]
        gens += [Generator(ODD, i, k) for k in range(1, self.q + 1) for i in range(1, self.n + 1)]
        return gens


@dataclass(frozen=True)
class SuperMonomial:
    """Even factors (with repetition) and distinct odd factors, both sorted by (col, row)."""

    even: Tuple[Generator, ...] = ()
    odd: Tuple[Generator, ...] = ()

    def degree(self) -> int:
        return len(self.even) + len(self.odd)

    @property
    def parity(self) -> int:
        return len(self.odd) % 2

    def factors(self) -> Tuple[Generator, ...]:
        """Factors in storage order; their product equals the monomial with sign +1."""
        return self.even + self.odd

    def ordered(self, r: Optional[int] = None, s: Optional[int] = None) -> List[Generator]:
        """Factors in decreasing order for the (r, s) context."""
        return sorted(self.factors(), key=lambda g: order_key(g, r, s), reverse=True)

    def render(self, r: Optional[int] = None, s: Optional[int] = None) -> str:
        """
        Text form such as "e11^3 e22^3 f31 e'61".

        Args:
            r, s: Optional split; columns beyond r (resp. s) print as primed views

        Returns:
            Space separated factors with exponents for repeats; "1" for the empty monomial
        """
        if self.degree() == 0:
            return "1"
        parts = []
        for g, run in groupby(self.ordered(r, s)):
            count = len(list(run))
            name = _render_generator(g, r, s)
            parts.append(f"{name}^{count}" if count > 1 else name)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _render_generator(g: Generator, r: Optional[int], s: Optional[int]) -> str:
    split = r if g.kind == EVEN else s
    col, prime = g.col, ""
    if split is not None and col > split:
        col, prime = col - split, "'"
    if g.row < 10 and col < 10:
        return f"{g.kind}{prime}{g.row}{col}"
    return f"{g.kind}{prime}[{g.row},{col}]"


def order_key(g: Generator, r: Optional[int] = None, s: Optional[int] = None) -> Tuple[int, int, int]:
    """
    Sort key for the generator order: a larger key is a larger generator.

    Blocks rank e > f > e' > f'; inside a block a smaller column is
    larger, and inside a column a smaller row is larger.
    """
    if g.kind == EVEN:
        rank = 3 if r is None or g.col <= r else 1
    else:
        rank = 2 if s is None or g.col <= s else 0
    return (rank, -g.col, -g.row)


def monomial_key(m: SuperMonomial, r: Optional[int] = None, s: Optional[int] = None):
    return (m.degree(), tuple(sorted((order_key(g, r, s) for g in m.factors()), reverse=True)))


def _compare(a, b) -> int:
    return (a > b) - (a < b)


def compare_generators(a: Generator, b: Generator, r: Optional[int] = None, s: Optional[int] = None) -> int:
    return _compare(order_key(a, r, s), order_key(b, r, s))


def compare_monomials(m1: SuperMonomial, m2: SuperMonomial, r: Optional[int] = None, s: Optional[int] = None) -> int:
    return _compare(monomial_key(m1, r, s), monomial_key(m2, r, s))


def _odd_sort_sign(odd: Sequence[Generator]) -> int:
    """Sign of the permutation sorting odd factors by storage key."""
    keys = [_storage_key(g) for g in odd]
    inversions = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    return -1 if inversions % 2 else 1


def normalize(factors: Iterable[Generator]) -> Optional[Tuple[int, SuperMonomial]]:
    """
    Bring a product of generators, read left to right, to canonical form.

    Returns:
        (sign, monomial), or None when an odd generator repeats
    """
    factors = list(factors)
    even = tuple(sorted((g for g in factors if g.kind == EVEN), key=_storage_key))
    odd = [g for g in factors if g.kind == ODD]
    if len(set(odd)) != len(odd):
        return None
    sign = _odd_sort_sign(odd)
    return sign, SuperMonomial(even, tuple(sorted(odd, key=_storage_key)))


def multiply_monomials(a: SuperMonomial, b: SuperMonomial) -> Optional[Tuple[int, SuperMonomial]]:
    if set(a.odd) & set(b.odd):
        return None
    # sign from moving each odd factor of b left past larger odd factors of a
    crossings = sum(1 for x in a.odd for y in b.odd if _storage_key(x) > _storage_key(y))
    even = tuple(sorted(a.even + b.even, key=_storage_key))
    odd = tuple(sorted(a.odd + b.odd, key=_storage_key))
    return (-1 if crossings % 2 else 1), SuperMonomial(even, odd)


class SuperPolynomial:
    """Exact integer combination of canonical monomials; treated as immutable."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Optional[Dict[SuperMonomial, int]] = None):
        self.ambient = ambient
        self.terms: Dict[SuperMonomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, ambient: Ambient) -> "SuperPolynomial":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: Ambient) -> "SuperPolynomial":
        return cls(ambient, {SuperMonomial(): 1})

    @classmethod
    def from_generator(cls, ambient: Ambient, g: Generator) -> "SuperPolynomial":
        if g.kind == EVEN:
            return cls(ambient, {SuperMonomial(even=(g,)): 1})
        return cls(ambient, {SuperMonomial(odd=(g,)): 1})

    @classmethod
    def from_monomial(cls, ambient: Ambient, m: SuperMonomial, coefficient: int = 1) -> "SuperPolynomial":
        return cls(ambient, {m: coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def _check(self, other: "SuperPolynomial"):
        if other.ambient != self.ambient:
            raise ValueError(f"Ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return SuperPolynomial(self.ambient, terms)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.ambient, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperPolynomial(self.ambient, {m: c * other for m, c in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other: int) -> "SuperPolynomial":
        return self * other

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def render(self, r: Optional[int] = None, s: Optional[int] = None) -> str:
        if self.is_zero():
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: monomial_key(item[0], r, s), reverse=True)
        pieces = []
        for m, c in ordered:
            body = m.render(r, s)
            if body == "1":
                text = str(abs(c))
            else:
                text = body if abs(c) == 1 else f"{abs(c)}*{body}"
            pieces.append(("- " if c < 0 else "+ ") + text)
        joined = " ".join(pieces)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self) -> str:
        return f"SuperPolynomial({self.render()})"


def multiply(x: SuperPolynomial, y: SuperPolynomial) -> SuperPolynomial:
    x._check(y)
    terms: Dict[SuperMonomial, int] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            product = multiply_monomials(a, b)
            if product is None:
                continue
            sign, m = product
            terms[m] = terms.get(m, 0) + sign * ca * cb
    return SuperPolynomial(x.ambient, terms)


def determinant(matrix: Sequence[Sequence[SuperPolynomial]], ambient: Optional[Ambient] = None) -> SuperPolynomial:
    """
    Σ_σ sgn(σ) a_{σ(1)1} a_{σ(2)2} ... a_{σ(k)k}, factors kept in column order.

    Expansion runs along the columns left to right; minors are shared
    between permutations with the same leading choices.

    Args:
        matrix: Square matrix given as a list of rows
        ambient: Needed only for the 0x0 matrix

    Returns:
        The determinant in R
    """
    k = len(matrix)
    if k == 0:
        if ambient is None:
            raise ValueError("The 0x0 determinant needs an explicit ambient")
        return SuperPolynomial.one(ambient)
    if any(len(row) != k for row in matrix):
        raise ValueError("Determinant needs a square matrix")
    ambient = matrix[0][0].ambient
    cache: Dict[Tuple[int, Tuple[int, ...]], SuperPolynomial] = {}

    def minor(col: int, rows: Tuple[int, ...]) -> SuperPolynomial:
        if col == k:
            return SuperPolynomial.one(ambient)
        key = (col, rows)
        if key in cache:
            return cache[key]
        total = SuperPolynomial.zero(ambient)
        for position, i in enumerate(rows):
            entry = matrix[i][col]
            if entry.is_zero():
                continue
            rest = minor(col + 1, rows[:position] + rows[position + 1:])
            if rest.is_zero():
                continue
            term = multiply(entry, rest)
            total = total - term if position % 2 else total + term
        cache[key] = total
        return total

    return minor(0, tuple(range(k)))


def leading_monomial(x: SuperPolynomial, r: Optional[int] = None, s: Optional[int] = None) -> SuperMonomial:
    if x.is_zero():
        raise ValueError("The zero polynomial has no leading monomial")
    return max(x.terms, key=lambda m: monomial_key(m, r, s))


def leading_monomial_of_product(
    factors: Sequence[SuperPolynomial],
    r: Optional[int] = None,
    s: Optional[int] = None,
    limit: int = 1_000_000,
) -> SuperMonomial:
    """
    LM(x_1 ... x_k) without expanding the product.

    Candidate index tuples are walked best first over each factor's
    terms sorted in decreasing order. All tuples giving the same
    commutative product are summed with their exact signs; the first
    candidate with a nonzero total is the leading monomial.

    Args:
        factors: Nonzero polynomials multiplied left to right
        r, s: Ordering context
        limit: Maximum number of tuples to examine

    Returns:
        The leading monomial of the product
    """
    if not factors:
        raise ValueError("Empty product")
    sorted_terms = []
    for x in factors:
        if x.is_zero():
            raise ValueError("The zero polynomial has no leading monomial")
        sorted_terms.append(sorted(x.terms.items(), key=lambda item: monomial_key(item[0], r, s), reverse=True))

    def product_key(index: Tuple[int, ...]):
        gens = [g for t, i in zip(sorted_terms, index) for g in t[i][0].factors()]
        keys = sorted((order_key(g, r, s) for g in gens), reverse=True)
        return (len(keys), tuple(keys))

    def negate(key):
        return (-key[0], tuple(tuple(-x for x in k) for k in key[1]))

    start = tuple(0 for _ in factors)
    heap = [(negate(product_key(start)), start)]
    seen = {start}
    examined = 0
    while heap:
        top, _ = heap[0]
        group: Dict[SuperMonomial, int] = {}
        while heap and heap[0][0] == top:
            _, index = heapq.heappop(heap)
            examined += 1
            gens = [g for t, i in zip(sorted_terms, index) for g in t[i][0].factors()]
            coefficient = 1
            for t, i in zip(sorted_terms, index):
                coefficient *= t[i][1]
            normal = normalize(gens)
            if normal is not None:
                sign, m = normal
                group[m] = group.get(m, 0) + sign * coefficient
            for axis in range(len(index)):
                if index[axis] + 1 < len(sorted_terms[axis]):
                    following = index[:axis] + (index[axis] + 1,) + index[axis + 1:]
                    if following not in seen:
                        seen.add(following)
                        heapq.heappush(heap, (negate(product_key(following)), following))
        for m, c in group.items():
            if c != 0:
                logger.debug(f"lazy leading monomial found after {examined} candidates")
                return m
        if examined > limit:
            raise ValueError(f"Leading monomial search exceeded {limit} candidates")
    raise ValueError("The product is zero")
