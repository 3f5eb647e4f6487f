"""Exact monomial arithmetic, graded reverse lex orders, and a Buchberger
engine specialized to pure-difference binomials.

Everything here is coefficient-free by construction: toric input keeps
S-polynomials and remainders in pure-difference form (one +1 term, one -1
term), so a binomial is just an ordered pair of monomials and "zero" is
represented by None.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BudgetError, DomainError
from .graphs import SimpleGraph


class Monomial:
    """Immutable dense exponent vector over a fixed variable universe."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def from_variables(cls, nvars: int, positions) -> Monomial:
        """Product of the variables at the given positions (with multiplicity)."""
        exps = [0] * nvars
        for p in positions:
            exps[p] += 1
        return cls(exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: Monomial) -> Monomial:
        exps = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(e < 0 for e in exps):
            raise DomainError("inexact monomial division")
        return Monomial(exps)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def gcd_is_one(self, other: Monomial) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m.exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Binomial:
    """Pure-difference binomial lhs - rhs (implicit coefficients +1, -1)."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Monomial, rhs: Monomial):
        self.lhs = lhs
        self.rhs = rhs

    @property
    def degree(self) -> int:
        return self.lhs.degree

    def is_zero(self) -> bool:
        return self.lhs == self.rhs

    def is_homogeneous(self) -> bool:
        return self.lhs.degree == self.rhs.degree

    def __neg__(self) -> Binomial:
        return Binomial(self.rhs, self.lhs)

    def same_up_to_sign(self, other: Binomial) -> bool:
        return (self.lhs == other.lhs and self.rhs == other.rhs) or (
            self.lhs == other.rhs and self.rhs == other.lhs
        )

    def __eq__(self, other):
        return isinstance(other, Binomial) and self.lhs == other.lhs and self.rhs == other.rhs

    def __hash__(self):
        return hash((self.lhs, self.rhs))

    def __repr__(self):
        return f"Binomial({self.lhs!r} - {self.rhs!r})"


def format_binomial(f: Binomial, names) -> str:
    return f"{format_monomial(f.lhs, names)} - {format_monomial(f.rhs, names)}"


class GrevlexOrder:
    """Graded reverse lex with an explicit variable priority.

    Degrees compare first.  Ties are broken by scanning exponents from the
    LOWEST-priority variable upward; at the first position where they differ,
    the monomial with the LARGER exponent is the SMALLER monomial.

    `names` fixes the storage positions of the variables (exponent slots);
    `priority` lists the same names from highest to lowest priority and
    defaults to `names`.
    """

    def __init__(self, names, priority=None):
        self.names = list(names)
        if priority is None:
            priority = list(self.names)
        else:
            priority = list(priority)
        if sorted(priority) != sorted(self.names):
            raise DomainError("order priority must be a permutation of the variable names")
        self.priority = priority
        pos = {n: i for i, n in enumerate(self.names)}
        self._scan = tuple(pos[n] for n in reversed(priority))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def compare(self, u: Monomial, v: Monomial) -> int:
        """-1 if u < v, 0 if equal, 1 if u > v."""
        du, dv = u.degree, v.degree
        if du != dv:
            return -1 if du < dv else 1
        ue, ve = u.exps, v.exps
        for i in self._scan:
            a, b = ue[i], ve[i]
            if a != b:
                return 1 if a < b else -1
        return 0

    def key(self, m: Monomial):
        """Sort key; ascending key order is ascending monomial order."""
        return (m.degree, tuple(-m.exps[i] for i in self._scan))

    def leading(self, f: Binomial) -> Monomial:
        return f.lhs if self.compare(f.lhs, f.rhs) >= 0 else f.rhs

    def normalize(self, f: Binomial) -> Binomial | None:
        """Leading monomial first; None for the zero binomial."""
        c = self.compare(f.lhs, f.rhs)
        if c == 0:
            return None
        return f if c > 0 else -f


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its unique minimal generating set."""

    min_gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = self.min_gens
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and g.divides(h):
                    raise DomainError("generating set is not minimal")

    @classmethod
    def from_generators(cls, gens, order: GrevlexOrder | None = None) -> MonomialIdeal:
        minimal = minimalize_monomials(gens)
        if order is not None:
            minimal.sort(key=order.key)
        else:
            minimal.sort(key=lambda m: (m.degree, m.exps))
        return cls(tuple(minimal))

    def __len__(self):
        return len(self.min_gens)


def minimalize_monomials(gens) -> list[Monomial]:
    """Drop duplicates and any generator divisible by another."""
    unique = []
    for g in gens:
        if g not in unique:
            unique.append(g)
    unique.sort(key=lambda m: (m.degree, m.exps))
    kept: list[Monomial] = []
    for g in unique:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return kept


def s_binomial(f: Binomial, g: Binomial, order: GrevlexOrder) -> Binomial | None:
    """S-polynomial of two pure-difference binomials; None if it is zero."""
    f = order.normalize(f)
    g = order.normalize(g)
    if f is None or g is None:
        return None
    big = f.lhs.lcm(g.lhs)
    a = (big / f.lhs) * f.rhs
    b = (big / g.lhs) * g.rhs
    if a == b:
        return None
    # S(f,g) = (big/lt f)*f - (big/lt g)*g = b - a
    return order.normalize(Binomial(b, a))


def reduce(f: Binomial, basis, order: GrevlexOrder) -> Binomial | None:
    """Full division remainder of f modulo the basis; None if f reduces to zero.

    Deterministic: each step divides by the first basis element (in list
    order) whose leading term divides the monomial under reduction.  Both
    monomials of the remainder are irreducible.
    """
    norm = [order.normalize(g) for g in basis]
    norm = [g for g in norm if g is not None]
    cur = order.normalize(f)
    if cur is None:
        return None
    while True:
        hit = None
        for g in norm:
            if g.lhs.divides(cur.lhs):
                hit = (cur.lhs / g.lhs) * g.rhs
                break
        if hit is not None:
            if hit == cur.rhs:
                return None
            cur = order.normalize(Binomial(hit, cur.rhs))
            continue
        for g in norm:
            if g.lhs.divides(cur.rhs):
                hit = (cur.rhs / g.lhs) * g.rhs
                break
        if hit is None:
            return cur
        if hit == cur.lhs:
            return None
        cur = order.normalize(Binomial(cur.lhs, hit))


def buchberger(generators, order: GrevlexOrder, max_pairs: int = 200_000) -> list[Binomial]:
    """Reduced Groebner basis of the binomial ideal under the given order.

    Normal selection strategy (minimal lcm degree first) with the coprimality
    and chain criteria.  Raises BudgetError if more than max_pairs S-pairs are
    processed.  Output is interreduced, sign-normalized (leading monomial in
    lhs), and sorted ascending by (degree, leading term, trailing term).
    """
    basis: list[Binomial] = []
    for f in generators:
        if not f.is_homogeneous():
            raise DomainError("buchberger requires homogeneous binomial input")
        g = order.normalize(f)
        if g is not None and not any(g.same_up_to_sign(h) for h in basis):
            basis.append(g)

    def pair_entry(i, j):
        big = basis[i].lhs.lcm(basis[j].lhs)
        return (big.degree, order.key(big), i, j)

    queue: list[tuple] = []
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(queue, pair_entry(i, j))
    treated: set[tuple[int, int]] = set()
    processed = 0
    while queue:
        _, _, i, j = heapq.heappop(queue)
        processed += 1
        if processed > max_pairs:
            raise BudgetError(f"buchberger exceeded the pair budget of {max_pairs}")
        fi, fj = basis[i], basis[j]
        big = fi.lhs.lcm(fj.lhs)
        if fi.lhs.gcd_is_one(fj.lhs):
            treated.add((i, j))
            continue
        # Chain criterion: skip if some k has lt_k | lcm and both flanking
        # pairs were already treated.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if basis[k].lhs.divides(big):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in treated and pjk in treated:
                    skip = True
                    break
        treated.add((i, j))
        if skip:
            continue
        s = s_binomial(fi, fj, order)
        if s is None:
            continue
        r = reduce(s, basis, order)
        if r is None:
            continue
        basis.append(r)
        new = len(basis) - 1
        for k in range(new):
            heapq.heappush(queue, pair_entry(k, new))

    # Minimalize: keep only elements whose leading term no other kept leading
    # term divides, scanning in ascending leading-term order.
    basis.sort(key=lambda g: (order.key(g.lhs), order.key(g.rhs)))
    minimal: list[Binomial] = []
    for g in basis:
        if not any(h.lhs.divides(g.lhs) for h in minimal):
            minimal.append(g)
    # Tail-reduce each element against the others.
    reduced: list[Binomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce(g, others, order) if others else g
        if r is not None:
            reduced.append(r)
    reduced.sort(key=lambda g: (g.degree, order.key(g.lhs), order.key(g.rhs)))
    return reduced


def initial_ideal(gb, order: GrevlexOrder) -> MonomialIdeal:
    """Minimal generating set of the ideal of leading terms of a Groebner basis."""
    leads = []
    for g in gb:
        n = order.normalize(g)
        if n is not None:
            leads.append(n.lhs)
    return MonomialIdeal.from_generators(leads, order)


def family_priority(graph: SimpleGraph) -> list[str]:
    """Variable priority for the built-in families: a's, then e's, then b's."""
    names = graph.edge_names
    a = [n for n in names if n.startswith("a")]
    e = [n for n in names if n.startswith("e")]
    b = [n for n in names if n.startswith("b")]
    return a + e + b


def default_order(graph: SimpleGraph, priority=None) -> GrevlexOrder:
    """Grevlex on the edge variables.

    Family graphs get the canonical a > e > b priority; general graphs default
    to declaration order unless an explicit priority is supplied.
    """
    names = graph.edge_names
    if priority is not None:
        return GrevlexOrder(names, priority)
    if graph.family is not None:
        return GrevlexOrder(names, family_priority(graph))
    return GrevlexOrder(names)
