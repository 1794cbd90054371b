"""Brute-force reference implementations used to validate the linkage
search.

linkage_by_chains enumerates every gated reflection sequence literally
(no deduplication of states), which is exponentially slower than the
production BFS and shares nothing with it beyond the weight/reflection
primitives; agreement of the two is the package's main self-check and is
exposed behind the CLI's --oracle flag.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernel
from .errors import GroupTooLarge
from .rootsys import root_tables, weyl_apply, weyl_generate
from .weights_chars import (
    LocAnChar,
    WeightL,
    check_convention,
    from_integer_encoding,
    integer_encoding,
)

DEFAULT_GROUP_GUARD = 10**6


@dataclass(frozen=True)
class OracleConfig:
    max_chain_length: int
    convention: str

    def __post_init__(self):
        if self.max_chain_length < 1:
            raise ValueError("max_chain_length must be >= 1")
        check_convention(self.convention)


def linkage_by_chains(chi: LocAnChar, cfg: OracleConfig) -> frozenset[LocAnChar]:
    """Endpoints of all gated reflection sequences of length up to
    cfg.max_chain_length, plus chi itself.

    Once the depth covers the longest gated chain this is the full
    strong-linkage set; see stabilized_chain_set for depth selection."""
    ctx = chi.algebraic.context
    coroots, fund, heights = root_tables(ctx.base)
    dens, start = integer_encoding(chi.algebraic)
    centrals = tuple(chi.algebraic.central(s) for s in range(ctx.num_embeddings))
    endpoints = _kernel.chain_endpoints(
        ctx.num_embeddings,
        ctx.rank,
        coroots,
        fund,
        heights,
        dens,
        start,
        cfg.convention == "shifted",
        cfg.max_chain_length,
    )
    return frozenset(
        LocAnChar(from_integer_encoding(ctx, dens, st, centrals), chi.smooth_tag)
        for st in endpoints
    )


def stabilized_chain_set(
    chi: LocAnChar, convention: str, *, max_depth: int = 128
) -> frozenset[LocAnChar]:
    """Run linkage_by_chains at depths d and d+1 until the two agree.

    The endpoint set is monotone in depth, and a depth adding nothing new
    can never add anything later (every longer sequence factors through a
    shorter endpoint), so equality certifies stabilization."""
    depth = 1
    prev = linkage_by_chains(chi, OracleConfig(depth, convention))
    while depth < max_depth:
        cur = linkage_by_chains(chi, OracleConfig(depth + 1, convention))
        if cur == prev:
            return cur
        prev = cur
        depth += 1
    raise RuntimeError(f"chain enumeration did not stabilize within depth {max_depth}")


def dot_orbit(lam: WeightL, *, size_guard: int = DEFAULT_GROUP_GUARD) -> frozenset[WeightL]:
    """Full dot orbit of a weight: per embedding, apply every Weyl element
    to the shifted component, then take the product across embeddings."""
    ctx = lam.context
    elements = weyl_generate(ctx.base, size_guard)
    if len(elements) ** ctx.num_embeddings > size_guard:
        raise GroupTooLarge(
            f"orbit product size {len(elements)}^{ctx.num_embeddings} exceeds guard {size_guard}"
        )
    rho = ctx.base.rho
    per_embedding = []
    for sigma in range(ctx.num_embeddings):
        comp = lam.semisimple(sigma)
        shifted = tuple(a + b for a, b in zip(comp, rho))
        seen = set()
        for w in elements:
            moved = weyl_apply(ctx.base, w, shifted)
            seen.add(tuple(a - b for a, b in zip(moved, rho)) + lam.central(sigma))
        per_embedding.append(sorted(seen))
    return frozenset(
        WeightL(ctx, rows) for rows in itertools.product(*per_embedding)
    )
