"""Exact sampling oracle for components of grid representation varieties.

Points of a named 2x2-grid component are produced from the block normal
form of a two-step complex (a pair of composable maps with zero
composite), conjugated by independent random invertible matrices at the
three slots; the two stacked ranks of such a point equal the component's
rank data exactly, not just generically.  Chain representations are
sampled with unconstrained uniform matrices.  Everything runs over an
exact prime field, so minima over samples are honest lower bounds for
generic values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg, modules22
from .g22 import Component, NUMBER_OF as G22_NUMBER_OF
from .grid import build_grid, neighborhoods
from .linalg import Mat, PrimeField
from .reps import Representation, g22_blocks, g22_representation, make_representation

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class SampleConfig:
    prime: int = DEFAULT_PRIME
    count: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.prime < 101 or not linalg.is_prime(self.prime):
            raise ValueError("prime must be a prime >= 101")
        if self.count < 1:
            raise ValueError("sample count must be positive")

    def field(self) -> PrimeField:
        return PrimeField(self.prime)

    def rng(self, index: int) -> random.Random:
        # Split the base seed into an independent stream per sample.
        return random.Random(f"{self.seed}/{index}")


def sample_component_point(c: Component, cfg: SampleConfig, index: int = 0) -> Representation:
    """A point of the component with the exact rank pair (r1, r2)."""
    field = cfg.field()
    rng = cfg.rng(index)
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    mid = d2 + d3
    alpha1 = _unit_block(field, mid, d1, [(t, t) for t in range(r1)])
    alpha2 = _unit_block(field, d4, mid, [(t, r1 + t) for t in range(r2)])
    g1 = linalg.random_invertible(field, d1, rng)
    g2 = linalg.random_invertible(field, mid, rng)
    g3 = linalg.random_invertible(field, d4, rng)
    out_map = linalg.mul(field, linalg.mul(field, g2, alpha1), linalg.inverse(field, g1))
    in_map = linalg.mul(field, linalg.mul(field, g3, alpha2), linalg.inverse(field, g2))
    f12 = Mat(d2, d1, out_map.rows[:d2])
    f13 = Mat(d3, d1, out_map.rows[d2:])
    f24 = Mat(d4, d2, tuple(row[:d2] for row in in_map.rows))
    f34 = linalg.neg(field, Mat(d4, d3, tuple(row[d2:] for row in in_map.rows)))
    rep = g22_representation(field, c.dims, f12, f13, f24, f34)
    if rank_pair(rep) != c.ranks:
        raise AssertionError("normal-form sample lost its rank pair")
    return rep


def _unit_block(field, nrows, ncols, ones):
    rows = [[field.zero] * ncols for _ in range(nrows)]
    for (i, j) in ones:
        rows[i][j] = field.one
    return linalg.mat(rows, ncols=ncols)


def sample_an_point(dims, cfg: SampleConfig, index: int = 0) -> Representation:
    """Uniform random chain representation; there are no relations to respect."""
    field = cfg.field()
    rng = cfg.rng(index)
    n = len(dims)
    quiver = build_grid((n,))
    dims_by_vertex = {(k + 1,): dims[k] for k in range(n)}
    mats = {}
    for (s, t) in quiver.arrows:
        mats[(s, t)] = linalg.random_matrix(field, dims_by_vertex[t], dims_by_vertex[s], rng)
    return make_representation(quiver, field, dims_by_vertex, mats)


def incoming_matrix(rep: Representation, v) -> Mat:
    """Horizontal stack of the arrow matrices ending at a vertex."""
    blocks = [rep.mat_on(u, v) for (u, w) in rep.quiver.arrows if w == v]
    if not blocks:
        return linalg.zeros(rep.field, rep.dim_at(v), 0)
    return linalg.hstack(blocks)


def outgoing_matrix(rep: Representation, v) -> Mat:
    """Vertical stack of the arrow matrices starting at a vertex."""
    blocks = [rep.mat_on(v, w) for (u, w) in rep.quiver.arrows if u == v]
    if not blocks:
        return linalg.zeros(rep.field, 0, rep.dim_at(v))
    return linalg.vstack(blocks)


def epsilon_of_rep(rep: Representation, v) -> int:
    """Cokernel dimension of the stacked incoming map at a vertex."""
    return rep.dim_at(v) - linalg.rank(rep.field, incoming_matrix(rep, v))


def epsilon_star_of_rep(rep: Representation, v) -> int:
    """Kernel dimension of the stacked outgoing map at a vertex."""
    return rep.dim_at(v) - linalg.rank(rep.field, outgoing_matrix(rep, v))


def _square_closing_map(rep: Representation, v, starred: bool):
    """The signed square-closing matrix at a vertex and its source list.

    Assembled over the out-neighborhood (in-neighborhood and transposes
    for the starred version), with the earlier neighbor of each square
    carrying + and the later one -.  Returns (matrix, sources); the
    matrix is None when there are at most one source (the map is zero).
    """
    field = rep.field
    nb = neighborhoods(rep.quiver, v)
    sources = nb.in1 if starred else nb.out1
    corners = nb.in2 if starred else nb.out2
    pairing = nb.tail if starred else nb.head
    if len(sources) <= 1:
        return None, sources
    blocks = {}
    for (j1, j2), k in pairing.items():
        if starred:
            blocks[(j1, k)] = linalg.transpose(rep.mat_on(k, j1))
            blocks[(j2, k)] = linalg.neg(field, linalg.transpose(rep.mat_on(k, j2)))
        else:
            blocks[(j1, k)] = rep.mat_on(j1, k)
            blocks[(j2, k)] = linalg.neg(field, rep.mat_on(j2, k))
    rows = []
    for k in corners:
        row = []
        for j in sources:
            blk = blocks.get((j, k))
            if blk is None:
                blk = linalg.zeros(field, rep.dim_at(k), rep.dim_at(j))
            row.append(blk)
        rows.append(linalg.hstack(row))
    return linalg.vstack(rows), sources


def extension_fiber_dim(rep: Representation, v, starred: bool = False) -> int:
    """Kernel dimension of the signed square-closing map at a vertex."""
    matrix, sources = _square_closing_map(rep, v, starred)
    if not sources:
        return 0
    if matrix is None:
        return rep.dim_at(sources[0])
    return matrix.ncols - linalg.rank(rep.field, matrix)


def extension_point(rep: Representation, v, rng) -> Representation:
    """A generic extension of the simple at a vertex by the representation.

    The vertex gains one dimension; inward arrows are zero-padded (the
    quotient simple receives nothing), and outward arrows gain a column
    drawn from the kernel of the square-closing map, which is exactly the
    commutativity constraint on the new basis vector.
    """
    field = rep.field
    q = rep.quiver
    matrix, sources = _square_closing_map(rep, v, starred=False)
    if matrix is None:
        kernel_vec = [field.rand(rng)
                      for j in sources for _ in range(rep.dim_at(j))]
    else:
        basis = linalg.nullspace(field, matrix)
        kernel_vec = [field.zero] * matrix.ncols
        for b in basis:
            c = field.rand(rng)
            kernel_vec = [field.add(x, field.mul(c, y)) for x, y in zip(kernel_vec, b)]
    chunks = {}
    offset = 0
    for j in sources:
        chunks[j] = kernel_vec[offset:offset + rep.dim_at(j)]
        offset += rep.dim_at(j)
    dims = {u: rep.dim_at(u) for u in q.vertices}
    dims[v] += 1
    mats = {}
    for (s, t) in q.arrows:
        m = rep.mat_on(s, t)
        if t == v:
            mats[(s, t)] = linalg.vstack([m, linalg.zeros(field, 1, m.ncols)])
        elif s == v:
            col = Mat(m.nrows, 1, tuple((x,) for x in chunks[t]))
            mats[(s, t)] = linalg.hstack([m, col])
        else:
            mats[(s, t)] = m
    return make_representation(q, field, dims, mats)


def restriction_point(rep: Representation, v, rng):
    """A generic corank-1 subrepresentation cutting the vertex down by one.

    The hyperplane at the vertex must contain the images of all inward
    arrows, so this exists exactly when the cokernel there is nonzero;
    returns None otherwise.
    """
    field = rep.field
    q = rep.quiver
    d = rep.dim_at(v)
    inc = incoming_matrix(rep, v)
    span = []
    span_rank = 0
    for j in range(inc.ncols):
        candidate = span + [tuple(inc.rows[k][j] for k in range(d))]
        if linalg.rank(field, linalg.mat(candidate, ncols=d)) > span_rank:
            span = candidate
            span_rank += 1
    if d - span_rank == 0:
        return None
    while True:
        extra = [tuple(field.rand(rng) for _ in range(d)) for _ in range(d - 1 - span_rank)]
        basis = linalg.transpose(linalg.mat(span + extra, ncols=d))
        if linalg.rank(field, basis) == d - 1:
            break
    dims = {u: rep.dim_at(u) for u in q.vertices}
    dims[v] = d - 1
    mats = {}
    for (s, t) in q.arrows:
        m = rep.mat_on(s, t)
        if t == v:
            cols = []
            for j in range(m.ncols):
                col = tuple(m.rows[k][j] for k in range(m.nrows))
                x = linalg.solve(field, basis, col)
                if x is None:
                    raise AssertionError("inward image escaped the chosen hyperplane")
                cols.append(x)
            mats[(s, t)] = linalg.transpose(linalg.mat(cols, ncols=d - 1))
        elif s == v:
            mats[(s, t)] = linalg.mul(field, m, basis)
        else:
            mats[(s, t)] = m
    return make_representation(q, field, dims, mats)


def rank_pair(rep: Representation):
    """The two stacked ranks (out of the source corner, into the sink corner)."""
    field = rep.field
    f12, f13, f24, f34 = g22_blocks(rep)
    r1 = linalg.rank(field, linalg.vstack([f12, f13]))
    r2 = linalg.rank(field, linalg.hstack([f24, linalg.neg(field, f34)]))
    return (r1, r2)


def estimate_component_invariant(c: Component, i: int, kind: str, cfg: SampleConfig) -> int:
    """Minimum of a per-point statistic over independent samples of a component."""
    fn = {"eps": epsilon_of_rep, "eps_star": epsilon_star_of_rep}[kind]
    vertex = corner_vertex(i)
    best = None
    for index in range(cfg.count):
        rep = sample_component_point(c, cfg, index)
        value = fn(rep, vertex)
        if best is None or value < best:
            best = value
            if best == 0:
                break
    return best


def corner_vertex(i: int):
    """Coordinate vertex of the 2x2 grid carrying corner number i."""
    for v, k in G22_NUMBER_OF.items():
        if k == i:
            return v
    raise ValueError(f"corner {i} out of range")


def certify_decomposition(rep: Representation) -> dict:
    """Interval multiplicities certified by the point's rank profile."""
    return modules22.multiplicities_from_profile(modules22.rank_profile(rep))


def dual_sample(rep: Representation) -> Representation:
    """Transpose the matrices and relabel vertices by the coordinate flip."""
    from .reps import dual_representation

    return dual_representation(rep)
