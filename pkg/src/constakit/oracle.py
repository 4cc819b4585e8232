"""Brute-force ground truth, deliberately oblivious to spectra.

Everything here works on coefficient vectors and row reduction over the
base field: Schur products as spans of pairwise componentwise products,
duals as nullspaces, patterns by exhaustive divisor search.  None of it
touches roots of unity, so agreement with the spectral methods is a
real cross-check rather than the same computation twice.
"""

from __future__ import annotations

from .codes import ConstaCode, PatternPoly
from .numbertheory import divisors
from .poly import Poly, _schur_reps


def rref(ctx, rows) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form with deterministic pivoting.

    Pivots are chosen leftmost-column first, smallest row index first,
    scaled to 1, and eliminated above and below, so any two row sets
    spanning the same subspace reduce to the identical list.
    """
    zero = ctx.zero_rep
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    pr = 0
    for col in range(ncols):
        hit = None
        for i in range(pr, len(mat)):
            if mat[i][col] != zero:
                hit = i
                break
        if hit is None:
            continue
        mat[pr], mat[hit] = mat[hit], mat[pr]
        inv = ctx.inv(mat[pr][col])
        mat[pr] = [ctx.mul(inv, c) for c in mat[pr]]
        for i in range(len(mat)):
            if i != pr and mat[i][col] != zero:
                f = mat[i][col]
                row = mat[pr]
                mat[i] = [ctx.sub(c, ctx.mul(f, row[j])) for j, c in enumerate(mat[i])]
        pivots.append(col)
        pr += 1
    return [tuple(r) for r in mat[:pr]], pivots


def span_contains(ctx, echelon, pivots, vec) -> bool:
    """Whether vec lies in the row space given by rref output."""
    zero = ctx.zero_rep
    v = list(vec)
    for row, col in zip(echelon, pivots):
        f = v[col]
        if f != zero:
            for j, c in enumerate(row):
                v[j] = ctx.sub(v[j], ctx.mul(f, c))
    return all(c == zero for c in v)


def generator_rows(c: ConstaCode) -> list[tuple]:
    """The k rows x^j * g, j < k, as length-n coefficient vectors."""
    n = c.params.n
    g = c.generator
    return [g.shift(j).padded(n) for j in range(n - g.degree)]


def _min_degree_generator(ctx, rows, n: int):
    """Monic minimal-degree vector in a shift-closed row space.

    Eliminating from the highest coefficient downward leaves rows with
    distinct top degrees; in an ideal of F_q[x]/(x^n - lam) the smallest
    of those degrees is attained only by scalar multiples of the monic
    generator, so the last row is the generator itself.
    """
    reversed_rows = [tuple(reversed(r)) for r in rows]
    echelon, _ = rref(ctx, reversed_rows)
    best = echelon[-1][::-1]
    return Poly(ctx, list(best)).monic()


def oracle_schur_product(c1: ConstaCode, c2: ConstaCode) -> tuple[int, Poly]:
    """(dim, monic generator) of the componentwise product span.

    Forms all pairwise Schur products of the two shift bases and row
    reduces.  The span is checked to be closed under the lam1*lam2
    constacyclic shift; that closure is what makes the minimal-degree
    row a legitimate generator.
    """
    p1, p2 = c1.params, c2.params
    if p1.field is not p2.field or p1.n != p2.n:
        raise ValueError("codes must share field and length")
    ctx = p1.field
    n = p1.n
    lam3 = p1.lam * p2.lam
    rows = []
    seen = set()
    for r1 in generator_rows(c1):
        for r2 in generator_rows(c2):
            prod = _schur_reps(ctx, r1, r2)
            if prod not in seen:
                seen.add(prod)
                rows.append(prod)
    if not rows:
        xn = Poly.monomial(ctx, n) - Poly.from_elements([lam3])
        return 0, xn
    echelon, pivots = rref(ctx, rows)
    lam3_rep = lam3.rep
    for r in echelon:
        shifted = (ctx.mul(lam3_rep, r[-1]),) + r[:-1]
        if not span_contains(ctx, echelon, pivots, shifted):
            raise AssertionError("product span is not constacyclic; theory violated")
    dim = len(echelon)
    if dim == 0:
        xn = Poly.monomial(ctx, n) - Poly.from_elements([lam3])
        return 0, xn
    gen = _min_degree_generator(ctx, echelon, n)
    if gen.degree != n - dim:
        raise AssertionError("generator degree disagrees with rank")
    return dim, gen


def oracle_pattern(c: ConstaCode) -> PatternPoly:
    """Pattern by exhaustive search over (v, alpha), smallest v first."""
    if c.is_zero:
        raise ValueError("the zero code has no pattern polynomial")
    ctx = c.params.field
    n = c.params.n
    g = c.generator
    for v in divisors(n):
        if v == n:
            break
        for idx in range(1, ctx.cardinality):
            alpha = ctx.elem(idx)
            coeffs = [ctx.zero()] * (n - v + 1)
            power = ctx.one()
            for i in range(n // v):
                coeffs[i * v] = power
                power = power * alpha
            p = Poly.from_elements(coeffs)
            if p.divides(g):
                return PatternPoly(n, v, alpha)
    return PatternPoly(n, n, ctx.one())


def oracle_dual(c: ConstaCode) -> tuple[int, list[tuple]]:
    """(dim, rref basis) of the nullspace of the generator matrix."""
    ctx = c.params.field
    n = c.params.n
    zero, one = ctx.zero_rep, ctx.one_rep
    rows = generator_rows(c)
    if not rows:
        ident = []
        for i in range(n):
            row = [zero] * n
            row[i] = one
            ident.append(tuple(row))
        return n, ident
    echelon, pivots = rref(ctx, rows)
    free = [j for j in range(n) if j not in pivots]
    null_rows = []
    for f in free:
        vec = [zero] * n
        vec[f] = one
        for row, col in zip(echelon, pivots):
            vec[col] = ctx.neg(row[f])
        null_rows.append(tuple(vec))
    if not null_rows:
        return 0, []
    reduced, _ = rref(ctx, null_rows)
    return len(reduced), reduced
