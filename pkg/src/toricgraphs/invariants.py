"""Closed-form homological invariants of the graph families and the
enumeration/linear-algebra oracles that cross-check them.

All polynomial arithmetic is over exact integers; (1-t) factors are removed
by synthetic division which asserts a zero remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import BudgetError, ConsistencyError, DomainError
from .graphs import SimpleGraph
from .linalg import rational_rank
from .quotients import BettiTable

DEFAULT_ENUM_BUDGET = 10_000_000


@dataclass(frozen=True)
class HilbertSeries:
    """Q(t) / (1-t)^denom_power with integer numerator coefficients."""

    numerator: tuple[int, ...]
    denom_power: int

    def __post_init__(self):
        if self.denom_power < 0:
            raise DomainError("denominator power must be non-negative")
        trimmed = _trim(self.numerator)
        if not trimmed:
            raise DomainError("numerator must be nonzero")
        object.__setattr__(self, "numerator", tuple(trimmed))

    def is_lowest_terms(self) -> bool:
        return sum(self.numerator) != 0 or self.denom_power == 0

    def lowest_terms(self) -> HilbertSeries:
        num = list(self.numerator)
        power = self.denom_power
        while power > 0 and sum(num) == 0:
            num = _divide_by_one_minus_t(num)
            power -= 1
        if sum(num) == 0:
            raise ConsistencyError(
                "numerator retains (1-t) factors beyond the denominator power"
            )
        return HilbertSeries(tuple(num), power)

    def expand(self, max_deg: int) -> list[int]:
        """Series coefficients dim_0, ..., dim_{max_deg}."""
        D = self.denom_power
        out = []
        for n in range(max_deg + 1):
            if D == 0:
                out.append(self.numerator[n] if n < len(self.numerator) else 0)
            else:
                total = 0
                for k, c in enumerate(self.numerator):
                    if k <= n:
                        total += c * comb(n - k + D - 1, D - 1)
                out.append(total)
        return out

    def __str__(self):
        parts = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                coeff = "" if mag == 1 else f"{mag}*"
                body = f"{coeff}t" if k == 1 else f"{coeff}t^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return f"({' '.join(parts)}) / (1-t)^{self.denom_power}"


@dataclass(frozen=True)
class HVector:
    h: tuple[int, ...]
    unimodal: bool


@dataclass(frozen=True)
class HomologicalSummary:
    reg: int
    pdim: int
    krull_dim: int | None = None


@dataclass(frozen=True)
class CertifiedBetti:
    """A Betti table together with the audit trail that certified it."""

    table: BettiTable
    matched_strands: frozenset[int]
    inferred_strand: int | None
    audit: tuple[str, ...]


def _trim(coeffs) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _divide_by_one_minus_t(coeffs: list[int]) -> list[int]:
    """Exact synthetic division by (1-t); the remainder is the value at t=1."""
    acc = 0
    prefix = []
    for c in coeffs:
        acc += c
        prefix.append(acc)
    if prefix[-1] != 0:
        raise ConsistencyError("nonzero remainder while cancelling a (1-t) factor")
    return _trim(prefix[:-1])


def betti_formula_grd(r: int, d: int) -> BettiTable:
    """Closed-form graded Betti numbers shared by the family's toric ideal and
    its initial ideal: a degree-2 strand and a degree-r strand."""
    if r < 3 or d < 2:
        raise DomainError(f"family requires r >= 3 and d >= 2, got r={r}, d={d}")
    table = BettiTable()
    for i in range(d - 1):
        table.add(i, i + 2, (i + 1) * comb(d, i + 2))
    for i in range(d):
        table.add(i, i + r, d * comb(d - 1, i))
    return table


def betti_formula_k2d(d: int) -> BettiTable:
    """Closed-form Betti numbers of the toric ideal of K_{2,d}: one linear strand."""
    if d < 2:
        raise DomainError(f"complete bipartite family requires d >= 2, got d={d}")
    table = BettiTable()
    for i in range(d - 1):
        table.add(i, i + 2, (i + 1) * comb(d, i + 2))
    return table


def strand_transfer(
    betti_in: BettiTable, matched_strands, hs_equal: bool
) -> CertifiedBetti:
    """Certify the initial ideal's Betti table as the toric ideal's own table.

    Requires every strand but at most one to be matched independently, plus
    Hilbert-series equality; the remaining strand is then forced degree by
    degree because initial-ideal Betti numbers bound the ideal's entrywise and
    both tables produce the same alternating sums.
    """
    matched = frozenset(matched_strands)
    if not hs_equal:
        raise DomainError("strand transfer requires certified Hilbert-series equality")
    unmatched = sorted(betti_in.strands() - matched)
    if len(unmatched) >= 2:
        raise DomainError(
            f"strand transfer needs at most one unmatched strand, found {unmatched}"
        )
    audit = ["initial-ideal Betti numbers bound the ideal's entrywise from above"]
    if matched:
        audit.append(f"strands {sorted(matched)} matched independently")
    if unmatched:
        audit.append(
            f"Hilbert-series equality forces equality on the remaining strand {unmatched[0]}"
        )
        inferred = unmatched[0]
    else:
        audit.append("no unmatched strand; table passes through unchanged")
        inferred = None
    return CertifiedBetti(
        table=betti_in,
        matched_strands=matched,
        inferred_strand=inferred,
        audit=tuple(audit),
    )


def hilbert_formula_grd(r: int, d: int) -> HilbertSeries:
    """(1 + d*t + ... + d*t^{r-1}) / (1-t)^{d+2r-2}, already in lowest terms."""
    if r < 3 or d < 2:
        raise DomainError(f"family requires r >= 3 and d >= 2, got r={r}, d={d}")
    return HilbertSeries((1,) + (d,) * (r - 1), d + 2 * r - 2)


def quotient_numerator_from_betti(betti: BettiTable) -> list[int]:
    """Alternating-sum numerator of the quotient ring's Hilbert series, over
    (1-t)^(number of variables), from the ideal's Betti table.

    The quotient's table is the ideal's shifted one homological step with a
    single extra unit in position (0,0), so the ideal's rows enter with sign
    (-1)^(i+1).
    """
    top = max((j for (_, j) in betti.entries), default=0)
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for (i, j), b in betti.entries.items():
        coeffs[j] += (-b if i % 2 == 0 else b)
    return _trim(coeffs)


def hilbert_from_betti(betti: BettiTable, num_vars: int) -> HilbertSeries:
    """Hilbert series of the quotient ring from the ideal's Betti table, in
    lowest terms."""
    coeffs = quotient_numerator_from_betti(betti)
    if not coeffs:
        raise ConsistencyError("Betti table yields an identically zero numerator")
    return HilbertSeries(tuple(coeffs), num_vars).lowest_terms()


def hilbert_enumeration_oracle(
    graph: SimpleGraph, max_deg: int, budget: int = DEFAULT_ENUM_BUDGET
) -> list[int]:
    """Graded dimensions of the edge subring, counted by brute force.

    Degree i of the quotient by the toric ideal is spanned by the distinct
    monomial images of degree-i edge monomials under e -> (product of its
    endpoints), so counting distinct images gives the dimension exactly.
    """
    q = len(graph.edges)
    images = [graph.edge_vertex_exponents(i) for i in range(q)]
    nv = len(graph.vertices)
    dims = [1]
    for deg in range(1, max_deg + 1):
        if comb(q + deg - 1, deg) > budget:
            raise BudgetError(
                f"degree {deg} needs {comb(q + deg - 1, deg)} monomials, over the budget {budget}"
            )
        seen = set()
        for combo in combinations_with_replacement(range(q), deg):
            acc = [0] * nv
            for e in combo:
                img = images[e]
                for k in range(nv):
                    acc[k] += img[k]
            seen.add(tuple(acc))
        dims.append(len(seen))
    return dims


class _DSU:
    __slots__ = ("parent",)

    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def minimal_generators_oracle(
    graph: SimpleGraph, max_deg: int, budget: int = DEFAULT_ENUM_BUDGET
) -> dict[int, int]:
    """Minimal generator counts of the toric ideal per degree, 2..max_deg,
    by exact linear algebra on graded pieces.

    Each graded piece of the ideal is spanned by differences of edge
    monomials with equal vertex image; the count in degree j is
    dim(I_j) - dim(R_1 * I_{j-1}).  The second term is the rank of a system
    of difference-of-unit vectors, computed by component counting.
    """
    if max_deg < 2:
        raise DomainError("max_deg must be at least 2")
    q = len(graph.edges)
    images = [graph.edge_vertex_exponents(i) for i in range(q)]
    nv = len(graph.vertices)
    out: dict[int, int] = {}
    prev_classes: list[list[tuple[int, ...]]] = []
    for deg in range(1, max_deg + 1):
        if comb(q + deg - 1, deg) > budget:
            raise BudgetError(
                f"degree {deg} needs {comb(q + deg - 1, deg)} monomials, over the budget {budget}"
            )
        classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        count = 0
        for combo in combinations_with_replacement(range(q), deg):
            count += 1
            mono = [0] * q
            acc = [0] * nv
            for e in combo:
                mono[e] += 1
                img = images[e]
                for k in range(nv):
                    acc[k] += img[k]
            classes.setdefault(tuple(acc), []).append(tuple(mono))
        dim_ideal = count - len(classes)
        if deg >= 2:
            dsu = _DSU()
            touched = set()
            for members in prev_classes:
                rep = members[0]
                for other in members[1:]:
                    for e in range(q):
                        a = _bump(rep, e)
                        b = _bump(other, e)
                        dsu.union(a, b)
                        touched.add(a)
                        touched.add(b)
            components = len({dsu.find(x) for x in touched})
            rank = len(touched) - components
            out[deg] = dim_ideal - rank
        prev_classes = [m for m in classes.values() if len(m) >= 2]
    return out


def _bump(mono: tuple[int, ...], e: int) -> tuple[int, ...]:
    return mono[:e] + (mono[e] + 1,) + mono[e + 1:]


def krull_dim(graph: SimpleGraph) -> int:
    """Krull dimension of the edge subring: the rational rank of the
    vertex-by-edge exponent matrix of the edge map."""
    nv = len(graph.vertices)
    q = len(graph.edges)
    rows = [[0] * q for _ in range(nv)]
    for e in range(q):
        img = graph.edge_vertex_exponents(e)
        for v in range(nv):
            if img[v]:
                rows[v][e] = img[v]
    return rational_rank(rows)


def reg_pdim(betti: BettiTable) -> HomologicalSummary | None:
    """Regularity and projective dimension read off a complete Betti table.

    Returns None for the empty table (the zero ideal has neither defined).
    """
    if betti.is_empty():
        return None
    reg = max(j - i for (i, j) in betti.entries)
    pdim = max(i for (i, _) in betti.entries)
    return HomologicalSummary(reg=reg, pdim=pdim)


def lower_bounds_from_induced(components) -> tuple[int, int]:
    """Regularity / projective-dimension lower bounds for a toric ideal whose
    graph contains disjoint induced family members with the given parameters."""
    comps = list(components)
    if not comps:
        raise DomainError("at least one induced component is required")
    for r, d in comps:
        if r < 3 or d < 2:
            raise DomainError(f"components need r >= 3 and d >= 2, got (r={r}, d={d})")
    s = len(comps)
    reg_lb = sum(r for r, _ in comps) - s + 1
    pdim_lb = sum(d for _, d in comps) - 1
    return (reg_lb, pdim_lb)


def hvector_extract(series: HilbertSeries) -> HVector:
    """Numerator coefficients of a lowest-terms series, with a unimodality flag
    (rises to a peak, then falls)."""
    h = list(series.numerator)
    k = 0
    while k + 1 < len(h) and h[k + 1] >= h[k]:
        k += 1
    while k + 1 < len(h) and h[k + 1] <= h[k]:
        k += 1
    return HVector(h=tuple(h), unimodal=(k == len(h) - 1))
