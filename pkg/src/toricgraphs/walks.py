"""Closed even walks, primitivity testing, and walk enumeration.

A closed even walk W of length 2s yields the pure-difference binomial whose
lhs multiplies the edges at odd positions 1, 3, ..., 2s-1 and whose rhs
multiplies the even positions.  The binomials of primitive walks form a
Groebner basis of the graph's toric ideal under every monomial order, which
is what the rest of the package cross-checks.

Walks are considered up to circular permutation and reversal; the canonical
representative of a class is the lexicographically least rotation/reflection
of its edge-name sequence.
"""

from __future__ import annotations

from .errors import BudgetError, DomainError
from .graphs import SimpleGraph, build_grd
from .grobner import Binomial, Monomial

DEFAULT_NODE_BUDGET = 10_000_000


class ClosedEvenWalk:
    """A closed walk of even length, stored with its traversal vertex sequence."""

    def __init__(self, graph: SimpleGraph, edge_names, start: str | None = None):
        self.graph = graph
        self.edge_names = tuple(edge_names)
        if len(self.edge_names) == 0 or len(self.edge_names) % 2 != 0:
            raise DomainError("a closed even walk needs a positive even number of edges")
        self.vertices = self._trace(start)

    def _trace(self, start):
        edges = [self.graph.edges[self.graph.edge_index[n]] for n in self.edge_names]
        starts = [start] if start is not None else list(edges[0].ends)
        last_error = None
        for v0 in starts:
            seq = [v0]
            ok = True
            for e in edges:
                if seq[-1] not in e.ends:
                    ok = False
                    last_error = f"edge {e.name!r} does not continue the walk at {seq[-1]!r}"
                    break
                seq.append(e.other(seq[-1]))
            if ok and seq[-1] == seq[0]:
                return tuple(seq)
            if ok:
                last_error = "walk does not return to its starting vertex"
        raise DomainError(last_error or "invalid walk")

    @property
    def length(self) -> int:
        return len(self.edge_names)

    def canonical_form(self) -> tuple[str, ...]:
        seq = self.edge_names
        rev = tuple(reversed(seq))
        n = len(seq)
        best = min(seq[k:] + seq[:k] for k in range(n))
        best_rev = min(rev[k:] + rev[:k] for k in range(n))
        return min(best, best_rev)

    def __eq__(self, other):
        return isinstance(other, ClosedEvenWalk) and self.edge_names == other.edge_names

    def __hash__(self):
        return hash(self.edge_names)

    def __repr__(self):
        return f"ClosedEvenWalk({', '.join(self.edge_names)})"


def walk_to_binomial(walk: ClosedEvenWalk) -> Binomial:
    """The walk's binomial: odd-position edge product minus even-position product."""
    graph = walk.graph
    nvars = len(graph.edges)
    odd = [graph.edge_index[n] for n in walk.edge_names[0::2]]
    even = [graph.edge_index[n] for n in walk.edge_names[1::2]]
    return Binomial(
        Monomial.from_variables(nvars, odd),
        Monomial.from_variables(nvars, even),
    )


def is_minimal(walk: ClosedEvenWalk) -> bool:
    """No two cyclically consecutive edges coincide."""
    seq = walk.edge_names
    n = len(seq)
    return all(seq[i] != seq[(i + 1) % n] for i in range(n))


def is_primitive(walk: ClosedEvenWalk, candidates) -> bool:
    """Divisibility test against a complete universe of walk binomials.

    `candidates` must contain the binomials of all closed even walks of the
    graph up to this walk's length (minimal walks suffice: every non-primitive
    walk admits a primitive witness, and primitive walks are minimal).
    """
    if not is_minimal(walk):
        return False
    f = walk_to_binomial(walk)
    if f.is_zero():
        return False
    for g in candidates:
        if g.is_zero() or g.same_up_to_sign(f):
            continue
        if g.lhs.divides(f.lhs) and g.rhs.divides(f.rhs):
            return False
        if g.lhs.divides(f.rhs) and g.rhs.divides(f.lhs):
            return False
    return True


def minimal_closed_even_walks(
    graph: SimpleGraph, max_len: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[ClosedEvenWalk]:
    """All minimal closed even walks of length <= max_len, one per class.

    Depth-first search over edge sequences.  The first edge of a sequence is
    constrained to carry the minimum edge position used anywhere in the walk,
    which rules out most rotated duplicates cheaply; remaining duplicates are
    removed through the canonical form.
    """
    if max_len < 4 or max_len % 2 != 0:
        raise DomainError("max_len must be an even integer >= 4")
    adj = graph.adjacency()
    found: dict[tuple[str, ...], ClosedEvenWalk] = {}
    nodes = 0
    edge_names = graph.edge_names

    def extend(first_pos, start, cur, seq):
        nonlocal nodes
        for pos, nxt in adj[cur]:
            if pos < first_pos or pos == seq[-1]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetError(f"walk search exceeded the node budget of {node_budget}")
            seq.append(pos)
            n = len(seq)
            if nxt == start and n % 2 == 0 and n >= 4 and seq[-1] != seq[0]:
                names = tuple(edge_names[p] for p in seq)
                walk = ClosedEvenWalk(graph, names, start=start)
                found.setdefault(walk.canonical_form(), walk)
            if n < max_len:
                extend(first_pos, start, nxt, seq)
            seq.pop()

    for first_pos, edge in enumerate(graph.edges):
        for start in edge.ends:
            extend(first_pos, start, edge.other(start), [first_pos])

    walks = [found[k] for k in sorted(found, key=lambda c: (len(c), c))]
    return [ClosedEvenWalk(graph, w.canonical_form()) for w in walks]


def enumerate_primitive_walks(
    graph: SimpleGraph, max_len: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[ClosedEvenWalk]:
    """One canonical representative per primitive walk class of length <= max_len.

    max_len defaults to the family length bound when the graph carries a
    family tag, and to 2*|E| otherwise (each edge appears at most twice in a
    primitive walk).  Output order: by length, then lexicographically by
    canonical edge-name sequence.
    """
    if max_len is None:
        max_len = default_max_len(graph)
    walks = minimal_closed_even_walks(graph, max_len, node_budget)
    candidates = [walk_to_binomial(w) for w in walks]
    candidates = [f for f in candidates if not f.is_zero()]
    return [w for w in walks if is_primitive(w, candidates)]


def family_primitive_walks(graph: SimpleGraph) -> list[ClosedEvenWalk]:
    """Closed-form primitive walks of a tagged family graph.

    The square walks (a_i, b_i, b_j, a_j) for i < j; for the path family also
    the long walks (a_i, e1, ..., e_{2r-2}, b_i) for each i, in that order.
    """
    fam = graph.family
    if fam is None:
        raise DomainError("closed-form walks exist only for family graphs")
    d = fam.d
    walks = []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            walks.append(ClosedEvenWalk(graph, (f"a{i}", f"b{i}", f"b{j}", f"a{j}"), start="x1"))
    if fam.kind == "grd":
        path = tuple(f"e{k}" for k in range(1, 2 * fam.r - 1))
        for i in range(1, d + 1):
            walks.append(ClosedEvenWalk(graph, (f"a{i}",) + path + (f"b{i}",), start=f"y{i}"))
    return walks


def grd_primitive_walks(r: int, d: int) -> list[ClosedEvenWalk]:
    """Closed-form primitive walks of G(r,d); see family_primitive_walks."""
    return family_primitive_walks(build_grd(r, d))


def default_max_len(graph: SimpleGraph) -> int:
    """Primitive-walk length cap: the proven family bounds, or 2|E| in general."""
    if graph.family is not None:
        if graph.family.kind == "grd":
            return 2 * graph.family.r
        return 4
    return max(4, 2 * len(graph.edges))


def decomposes_at_basepoint(walk: ClosedEvenWalk) -> bool:
    """True if some rotation splits into two consecutive closed even walks.

    Such walks are never primitive.  Used as an independent structural check
    on enumeration output.
    """
    seq = walk.edge_names
    n = len(seq)
    for k in range(n):
        rotated = ClosedEvenWalk(
            walk.graph, seq[k:] + seq[:k], start=walk.vertices[k]
        )
        base = rotated.vertices[0]
        for cut in range(2, n, 2):
            if rotated.vertices[cut] == base:
                return True
    return False
