"""Exact rank computation over the rationals."""

from fractions import Fraction


def rational_rank(rows) -> int:
    """Rank of a dense matrix given as a list of rows of ints/Fractions.

    Plain Gaussian elimination with exact Fraction arithmetic; for small
    matrices (incidence matrices and the like).
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def sparse_rational_rank(rows) -> int:
    """Rank of a sparse matrix given as dicts {column: nonzero value}.

    Exact elimination that keeps integer arithmetic as long as unit pivots
    are available (they almost always are for boundary matrices) and falls
    back to Fractions otherwise.  Pivots are chosen sparsest-first to limit
    fill-in.
    """
    active = {}
    col_rows: dict[int, set[int]] = {}
    for rid, row in enumerate(rows):
        cleaned = {c: v for c, v in row.items() if v}
        if not cleaned:
            continue
        active[rid] = cleaned
        for c in cleaned:
            col_rows.setdefault(c, set()).add(rid)
    rank = 0
    while active:
        rid = min(active, key=lambda i: (len(active[i]), i))
        row = active.pop(rid)

        def pivot_key(c):
            v = row[c]
            return (0 if v == 1 or v == -1 else 1, len(col_rows[c]), c)

        pc = min(row, key=pivot_key)
        piv = row[pc]
        for c in row:
            col_rows[c].discard(rid)
        for other in sorted(col_rows.get(pc, ())):
            target = active[other]
            coef = target[pc]
            if piv == 1:
                factor = coef
            elif piv == -1:
                factor = -coef
            elif isinstance(coef, Fraction) or isinstance(piv, Fraction):
                factor = coef / piv
            else:
                factor = Fraction(coef, piv)
            for c, v in row.items():
                new = target.get(c, 0) - factor * v
                if new:
                    if c not in target:
                        col_rows.setdefault(c, set()).add(other)
                    target[c] = new
                else:
                    if c in target:
                        del target[c]
                        col_rows[c].discard(other)
            if not target:
                del active[other]
        col_rows.pop(pc, None)
        rank += 1
    return rank
