"""
Highest weight vectors from tableau pairs.

Each pair (T1, T2) is assembled into T1*T2 on the shape F. Every column
of T1*T2 becomes a determinant over R, and the product of the column
determinants from left to right is the vector Δ_(T1,T2). Its leading
monomial is read directly off the tableau.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import prod
from typing import Dict, List, Optional, Tuple

from src.algebra.lie_action import (
    BasisOperator,
    Flavor,
    Subalgebra,
    Target,
    Weight,
    assemble_m_weight,
    gl_n_raising,
    graded_component,
    is_annihilated,
    joint_kernel_dim,
    raising_generators,
    weight_of,
)
from src.algebra.superalgebra import (
    EVEN,
    ODD,
    Ambient,
    Generator,
    SuperMonomial,
    SuperPolynomial,
    determinant,
    leading_monomial,
    leading_monomial_of_product,
    multiply,
    normalize,
)
from src.combinatorics.partitions import Partition, contains, in_hook
from src.combinatorics.tableaux import (
    ComposedTableau,
    Content,
    Origin,
    TableauPair,
    enumerate_pairs,
    star_compose,
)
from src.logic.multiplicities import branch_N, compositions

logger = logging.getLogger("VERIFY")


@dataclass(frozen=True)
class ColumnProfile:
    """
    Column of T1*T2 split into its four parts.

    type_tag is 0, or the column index j when the column meets the
    lower part of H_D.
    """

    column: int
    type_tag: int
    part1_len: int
    part2_len: int
    part3: Tuple[int, ...]
    part4: Tuple[int, ...]

    @property
    def height(self) -> int:
        return self.part1_len + self.part2_len + len(self.part3) + len(self.part4)


def column_profile(T: ComposedTableau, j: int, r: int, s: int) -> ColumnProfile:
    height = T.shape.outer.conjugate().part(j)
    if height == 0:
        raise ValueError(f"Column {j} is outside the shape {T.shape}")
    entries = T.entries()
    column = [(T.origin(i, j), entries[(i, j)]) for i in range(1, height + 1)]
    order = [Origin.H_UP, Origin.H_DOWN, Origin.T1, Origin.T2]
    ranks = [order.index(origin) for origin, _ in column]
    if ranks != sorted(ranks):
        raise ValueError(f"Column {j} does not split into the four parts in order")
    parts = {origin: [v for o, v in column if o == origin] for origin in order}
    part1, part2 = parts[Origin.H_UP], parts[Origin.H_DOWN]
    part3, part4 = tuple(parts[Origin.T1]), tuple(parts[Origin.T2])
    if part1 != list(range(1, len(part1) + 1)) or len(part1) > r:
        raise ValueError(f"Column {j}: top part {part1} is not 1..l with l <= r={r}")
    if part2:
        if len(part1) != r or any(v != j for v in part2) or j > s:
            raise ValueError(f"Column {j}: lower H_D part {part2} does not match Type {j}")
    if any(part3[k] >= part3[k + 1] for k in range(len(part3) - 1)):
        raise ValueError(f"Column {j}: T1 part {part3} is not strictly increasing")
    if any(part4[k] > part4[k + 1] for k in range(len(part4) - 1)):
        raise ValueError(f"Column {j}: T2 part {part4} is not weakly increasing")
    return ColumnProfile(j, j if part2 else 0, len(part1), len(part2), part3, part4)


def column_generators(profile: ColumnProfile, r: int, s: int, i: int) -> List[Generator]:
    """Row i of the column matrix: e_i1.., t copies of f_ij, e'_ic.., f'_id.."""
    gens = [Generator(EVEN, i, k) for k in range(1, profile.part1_len + 1)]
    gens += [Generator(ODD, i, profile.type_tag)] * profile.part2_len
    gens += [Generator(EVEN, i, r + c) for c in profile.part3]
    gens += [Generator(ODD, i, s + d) for d in profile.part4]
    return gens


@lru_cache(maxsize=4096)
def delta_column(profile: ColumnProfile, ambient: Ambient, r: int, s: int) -> SuperPolynomial:
    """
    The h x h determinant attached to one column.

    Args:
        profile: Column split into parts
        ambient: Sizes (n, p, q) of R
        r, s: Split of gl(p|q); e' and f' are the columns beyond r and s

    Returns:
        Δ of the column
    """
    h = profile.height
    if h > ambient.n:
        raise ValueError(f"Column {profile.column} has height {h} > n={ambient.n}")
    matrix = []
    for i in range(1, h + 1):
        row = column_generators(profile, r, s, i)
        matrix.append([SuperPolynomial.from_generator(ambient, ambient.generator(g.kind, g.row, g.col)) for g in row])
    return determinant(matrix, ambient)


def column_leading_monomial(profile: ColumnProfile, r: int, s: int) -> SuperMonomial:
    """Diagonal product of the column matrix."""
    diagonal = [column_generators(profile, r, s, i)[i - 1] for i in range(1, profile.height + 1)]
    return normalize(diagonal)[1]


def profiles_of(pair: TableauPair, r: int, s: int) -> List[ColumnProfile]:
    T = star_compose(pair, r)
    return [column_profile(T, j, r, s) for j in range(1, pair.outer.part(1) + 1)]


def delta_factors(pair: TableauPair, ambient: Ambient, r: int, s: int) -> List[SuperPolynomial]:
    return [delta_column(profile, ambient, r, s) for profile in profiles_of(pair, r, s)]


def delta_pair(pair: TableauPair, ambient: Ambient, r: int, s: int) -> SuperPolynomial:
    """Δ_(T1,T2): product of the column determinants, left to right."""
    result = SuperPolynomial.one(ambient)
    for factor in delta_factors(pair, ambient, r, s):
        result = multiply(result, factor)
    return result


def monomial_of_pair(pair: TableauPair, r: int, s: int) -> SuperMonomial:
    """
    m_(T1,T2): e over H_D^up, f over H_D^down, e' over T1 and f' over T2,
    each indexed by (row in T1*T2, entry).
    """
    T = star_compose(pair, r)
    factors = []
    for (i, j, v), origin in zip(T.cells, T.origins):
        if origin == Origin.H_UP:
            factors.append(Generator(EVEN, i, v))
        elif origin == Origin.H_DOWN:
            factors.append(Generator(ODD, i, v))
        elif origin == Origin.T1:
            factors.append(Generator(EVEN, i, r + v))
        else:
            factors.append(Generator(ODD, i, s + v))
    normal = normalize(factors)
    if normal is None:
        raise ValueError("Tableau pair produced a repeated odd generator")
    return normal[1]


def basis_B(F: Partition, D: Partition, alpha: Content, beta: Content, ambient: Ambient, r: int, s: int) -> List[SuperPolynomial]:
    return [delta_pair(pair, ambient, r, s) for pair in enumerate_pairs(F, D, alpha, beta, ambient.n)]


def hw_basis_union(F: Partition, D: Partition, p: int, q: int, r: int, n: Optional[int] = None) -> Dict[Tuple[Content, Content], List[SuperPolynomial]]:
    """gl_r highest weight vectors of weight D, s = 0: union of basis_B over (alpha, beta)."""
    n = F.depth() if n is None else n
    ambient = Ambient(n, p, q)
    rest = F.size() - D.size()
    union = {}
    for a in range(rest + 1):
        for alpha in compositions(a, p - r):
            for beta in compositions(rest - a, q):
                vectors = basis_B(F, D, Content(alpha), Content(beta), ambient, r, 0)
                if vectors:
                    union[(Content(alpha), Content(beta))] = vectors
    return union


def irrep_basis(F: Partition, p: int, q: int, n: Optional[int] = None) -> Dict[Tuple[Content, Content], List[SuperPolynomial]]:
    """Weight basis of L^F_{p|q}: union of basis_B for r = s = 0."""
    if not in_hook(F, p, q):
        raise ValueError(f"Partition ({F}) is not in the ({p},{q})-hook")
    return hw_basis_union(F, Partition(()), p, q, 0, n)


@dataclass
class PairCheck:
    """Outcome of the checks on one tableau pair."""

    rows: List[List[int]]
    lm: str
    monomial: str
    lm_matches: bool
    method: str
    terms: Optional[int]
    gl_n_annihilated: bool
    weights_ok: bool
    m_annihilated: Optional[bool]
    failures: List[str] = field(default_factory=list)
    passed: bool = True


@dataclass
class VerificationReport:
    F: str
    D: str
    alpha: List[int]
    beta: List[int]
    n: int
    p: int
    q: int
    r: int
    s: int
    mode: str
    predicted: int
    basis_size: int
    oracle: Optional[int]
    distinct_lms: bool
    pairs: List[PairCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data


@dataclass(frozen=True)
class VerificationSettings:
    expand_limit: int = 20000
    oracle_max_monomials: int = 2000
    lm_search_limit: int = 1_000_000
    workers: int = 1

    @classmethod
    def from_config(cls, config: dict) -> "VerificationSettings":
        section = config.get("verification", {}) or {}
        return cls(
            expand_limit=int(section.get("expand_limit", cls.expand_limit)),
            oracle_max_monomials=int(section.get("oracle_max_monomials", cls.oracle_max_monomials)),
            lm_search_limit=int(section.get("lm_search_limit", cls.lm_search_limit)),
            workers=int(section.get("workers", cls.workers)),
        )


@dataclass(frozen=True)
class ColumnFacts:
    gl_n_annihilated: bool
    m_annihilated: bool
    weight_n: Optional[Tuple[int, ...]]
    weight_pq: Optional[Tuple[int, ...]]
    error: Optional[str] = None


@lru_cache(maxsize=4096)
def column_facts(profile: ColumnProfile, ambient: Ambient, r: int, s: int, m_ops: Tuple) -> ColumnFacts:
    """Annihilation and weights of one column determinant, shared across pairs."""
    x = delta_column(profile, ambient, r, s)
    n_ok = is_annihilated(x, gl_n_raising(ambient.n))
    m_ok = is_annihilated(x, m_ops)
    try:
        return ColumnFacts(n_ok, m_ok, weight_of(x, Target.H_N).entries, weight_of(x, Target.H_PQ).entries)
    except ValueError as e:
        return ColumnFacts(n_ok, m_ok, None, None, str(e))


def check_pair_inputs(F: Partition, D: Partition, alpha: Content, beta: Content, r: int, s: int):
    """Reject (F, D, alpha, beta) for which T(F,D,alpha,beta) is empty by construction."""
    if not contains(F, D):
        raise ValueError(f"D=({D}) does not fit inside F=({F})")
    if not in_hook(D, r, s):
        raise ValueError(f"D=({D}) is not in the ({r},{s})-hook")
    total = D.size() + alpha.total() + beta.total()
    if total != F.size():
        raise ValueError(f"|D| + |alpha| + |beta| = {total} but |F| = {F.size()}")


def _sum(vectors) -> Tuple[int, ...]:
    return tuple(int(sum(column)) for column in zip(*vectors))


def _check_pair(
    pair: TableauPair,
    ambient: Ambient,
    r: int,
    s: int,
    expected_n: Tuple[int, ...],
    expected_pq: Tuple[int, ...],
    m_ops: Tuple[BasisOperator, ...],
    settings: VerificationSettings,
) -> Tuple[PairCheck, SuperMonomial]:
    T = star_compose(pair, r)
    profiles = [column_profile(T, j, r, s) for j in range(1, pair.outer.part(1) + 1)]
    factors = [delta_column(profile, ambient, r, s) for profile in profiles]
    m = monomial_of_pair(pair, r, s)
    failures: List[str] = []

    if prod(len(x) for x in factors) <= settings.expand_limit:
        method = "expanded"
        delta = SuperPolynomial.one(ambient)
        for factor in factors:
            delta = multiply(delta, factor)
        terms = len(delta)
        lm = None if delta.is_zero() else leading_monomial(delta, r, s)
        n_ok = is_annihilated(delta, gl_n_raising(ambient.n))
        m_ok = is_annihilated(delta, m_ops)
        try:
            weights_ok = (
                lm is not None
                and weight_of(delta, Target.H_N).entries == expected_n
                and weight_of(delta, Target.H_PQ).entries == expected_pq
            )
        except ValueError as e:
            weights_ok = False
            failures.append(str(e))
    else:
        # a product of annihilated weight vectors is an annihilated weight vector
        method = "factorwise"
        terms = None
        lm = leading_monomial_of_product(factors, r, s, settings.lm_search_limit)
        facts = [column_facts(profile, ambient, r, s, m_ops) for profile in profiles]
        failures.extend(f.error for f in facts if f.error)
        n_ok = all(f.gl_n_annihilated for f in facts)
        m_ok = True if all(f.m_annihilated for f in facts) else None
        weights_ok = not any(f.error for f in facts) and (
            _sum([f.weight_n for f in facts]) == expected_n and _sum([f.weight_pq for f in facts]) == expected_pq
        )

    if lm is None:
        failures.append("Δ is zero")
    lm_text = lm.render(r, s) if lm is not None else ""
    lm_matches = lm == m
    if lm is not None and not lm_matches:
        failures.append(f"leading monomial {lm_text} differs from m = {m.render(r, s)}")
    if not n_ok:
        failures.append("not annihilated by the gl_n raising operators")
    if not weights_ok:
        failures.append("weights differ from the expected (psi^F_n; D#, alpha, beta)")
    check = PairCheck(
        rows=T.rows(),
        lm=lm_text,
        monomial=m.render(r, s),
        lm_matches=lm_matches,
        method=method,
        terms=terms,
        gl_n_annihilated=n_ok,
        weights_ok=weights_ok,
        m_annihilated=m_ok,
        failures=failures,
    )
    return check, m


def verify_basis(
    F: Partition,
    D: Partition,
    alpha: Content,
    beta: Content,
    n: Optional[int],
    p: int,
    q: int,
    r: int,
    s: int,
    settings: VerificationSettings = VerificationSettings(),
) -> VerificationReport:
    """
    Run the highest weight vector checks on every pair of T(F,D,alpha,beta).

    With s in {0, 1} the pipeline checks (a) LM(Δ) = m, (b) gl_n
    annihilation, (c) weights, (d) annihilation by the raising
    operators of gl_{r|s} and (e) |basis| = N = kernel oracle. With
    s >= 2 only (a)-(c) are asserted; the annihilation outcome is
    reported as measured.

    Args:
        F, D: Shapes with D in the (r,s)-hook
        alpha, beta: Contents of lengths p - r and q - s
        n: gl_n rank, defaults to the depth of F
        p, q, r, s: gl(p|q) and the split
        settings: Size limits and worker count

    Returns:
        VerificationReport; failures are collected, never raised

    Raises:
        ValueError: F outside the hook, D not inside F or sizes that do not add up
    """
    n = F.depth() if n is None else n
    sub = Subalgebra.split(p, q, r, s, Flavor.M)
    if F.depth() > n or not in_hook(F, p, q):
        raise ValueError(f"Partition ({F}) is not in Λ+_(n={n}, {p}|{q})")
    if len(alpha) != sub.rprime or len(beta) != sub.sprime:
        raise ValueError(f"alpha needs {sub.rprime} entries and beta needs {sub.sprime}")
    check_pair_inputs(F, D, alpha, beta, r, s)
    ambient = Ambient(n, p, q)
    expected_n = tuple(F.part(i) for i in range(1, n + 1))
    expected_pq = assemble_m_weight(D, alpha, beta, sub)
    highest = s in (0, 1)
    m_ops = tuple(raising_generators(sub))

    pairs = enumerate_pairs(F, D, alpha, beta, n)
    predicted = branch_N(F, D, alpha, beta)
    logger.info(f"Checking {len(pairs)} tableau pairs for F=({F}) D=({D}) alpha=({alpha}) beta=({beta})")

    def run(pair):
        return _check_pair(pair, ambient, r, s, expected_n, expected_pq, m_ops, settings)

    if settings.workers > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            results = list(pool.map(run, pairs))
    else:
        results = [run(pair) for pair in pairs]

    monomials = [m for _, m in results]
    report = VerificationReport(
        F=str(F),
        D=str(D),
        alpha=list(alpha.counts),
        beta=list(beta.counts),
        n=n,
        p=p,
        q=q,
        r=r,
        s=s,
        mode="highest-weight" if highest else "weight-vector",
        predicted=predicted,
        basis_size=len(pairs),
        oracle=None,
        distinct_lms=len(set(monomials)) == len(monomials),
        pairs=[check for check, _ in results],
    )
    for k, check in enumerate(report.pairs):
        if highest and check.m_annihilated is not True:
            check.failures.append("not annihilated by the gl_(r|s) raising operators")
        check.passed = not check.failures
        for failure in check.failures:
            report.failures.append(f"pair {k}: {failure}")
    if not report.distinct_lms:
        report.failures.append("leading monomials are not pairwise distinct")
    if len(pairs) != predicted:
        report.failures.append(f"{len(pairs)} pairs but N = {predicted}")

    if not highest:
        report.notes.append(f"s={s}: weight-vector mode, highest weight claims are outside s in (0, 1)")
        return report

    wN = Weight(Target.H_N, expected_n)
    wPQ = Weight(Target.H_PQ, expected_pq)
    component = graded_component(ambient, wN, wPQ)
    if len(component) <= settings.oracle_max_monomials:
        report.oracle = joint_kernel_dim(gl_n_raising(n) + list(m_ops), component, ambient)
        if report.oracle != predicted:
            report.failures.append(f"kernel oracle gives {report.oracle}, N = {predicted}")
    else:
        report.notes.append(f"kernel oracle skipped: component has {len(component)} monomials")
    logger.info(f"Verification {'passed' if report.passed else 'FAILED'} ({len(report.failures)} failures)")
    return report
