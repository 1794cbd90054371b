"""Shared helpers for the test suite."""

from fractions import Fraction
from itertools import product

import linkage_kit as lk

_RS_CACHE = {}


def root_system(name):
    if name not in _RS_CACHE:
        _RS_CACHE[name] = lk.build_root_system(name)
    return _RS_CACHE[name]


def context(name, embeddings=1, central=0):
    return lk.EmbeddingContext(root_system(name), embeddings, central)


def weight(ctx, rows):
    return lk.WeightL(ctx, tuple(tuple(rows[s]) for s in range(ctx.num_embeddings)))


def char(ctx, rows, tag="t"):
    return lk.LocAnChar(weight(ctx, rows), tag)


def coords_set(chars):
    """Algebraic coordinate tuples of an iterable of characters."""
    return frozenset(c.algebraic.components for c in chars)


def integral_grid(dim, lo=-3, hi=3):
    return list(product(range(lo, hi + 1), repeat=dim))


def random_fraction(rng, max_num=9, max_den=4):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_weight(ctx, rng, integral=False):
    rows = []
    for _ in range(ctx.num_embeddings):
        if integral:
            rows.append(tuple(rng.randint(-6, 6) for _ in range(ctx.dim)))
        else:
            rows.append(tuple(random_fraction(rng) for _ in range(ctx.dim)))
    return lk.WeightL(ctx, tuple(rows))


def simple_root_coords(rs, fund_vector):
    """Solve for coordinates over simple roots given fundamental coords.

    Exact Gaussian elimination on the Cartan matrix; used to verify that
    linkage differences are non-negative integer root combinations.
    """
    n = rs.rank
    aug = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(fund_vector[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))
