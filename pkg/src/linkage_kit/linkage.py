"""Strong-linkage closures and the factor/obstruction sets built on them.

The production search is a breadth-first closure of a character under
dominance-gated dot reflections, deduplicated on exact coordinates; the
chain count explodes combinatorially but the member set is bounded by the
dot orbit, so BFS is the right algorithm.  Witness chains record the first
link that discovered each member (existence is all that matters, no
minimality is promised).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import _kernel
from .errors import OrbitGuardExceeded
from .parabolic import (
    ParabolicSubset,
    central_class_key,
    in_lambda_p_plus,
    require_parabolic_dominant,
)
from .rootsys import root_tables
from .weights_chars import (
    GlobalRoot,
    LocAnChar,
    WeightL,
    check_convention,
    dot_reflect_char,
    from_integer_encoding,
    integer_encoding,
    is_alpha_dominant,
)

DEFAULT_ORBIT_GUARD = 10**6


def char_sort_key(chi: LocAnChar):
    """Lexicographic key on algebraic coordinates as (num, den) pairs,
    then the smooth tag; fixes the output order everywhere."""
    coords = tuple(
        (x.numerator, x.denominator) for row in chi.algebraic.components for x in row
    )
    return (coords, chi.smooth_tag)


@dataclass(frozen=True)
class LinkageChain:
    """Witness for one membership: the gated reflections walking the
    origin character down to the member, with each intermediate result."""

    steps: tuple[tuple[GlobalRoot, LocAnChar], ...]


@dataclass(frozen=True, eq=False)
class LinkageResult:
    """Closure of ``origin`` under gated dot reflections.

    ``members`` always contains the origin; ``witness`` maps each member
    to the first chain that discovered it (the origin's chain is empty).
    ``upper_bound`` marks candidate sets that are only a superset of the
    true factor set (proper parabolic filters)."""

    origin: LocAnChar
    members: frozenset[LocAnChar]
    witness: Mapping[LocAnChar, LinkageChain]
    convention: str
    upper_bound: bool = False

    def sorted_members(self) -> list[LocAnChar]:
        return sorted(self.members, key=char_sort_key)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, chi: LocAnChar) -> bool:
        return chi in self.members


def up_link_candidates(chi: LocAnChar, convention: str) -> list[tuple[GlobalRoot, LocAnChar]]:
    """All single gated links out of chi: for every global root whose
    dominance gate passes, the reflected character; links that do not move
    the character are dropped."""
    check_convention(convention)
    out = []
    for r in chi.algebraic.context.global_roots():
        if is_alpha_dominant(chi, r, convention):
            nxt = dot_reflect_char(chi, r)
            if nxt != chi:
                out.append((r, nxt))
    return out


def strongly_linked_set(
    chi: LocAnChar, convention: str, *, guard: int = DEFAULT_ORBIT_GUARD
) -> LinkageResult:
    """Downward closure of chi under gated dot reflections.

    Terminates because every link strictly lowers the height of the moved
    component and all members stay inside the finite per-embedding dot
    orbit product; raises OrbitGuardExceeded past ``guard`` visited states.
    """
    check_convention(convention)
    ctx = chi.algebraic.context
    coroots, fund, heights = root_tables(ctx.base)
    dens, start = integer_encoding(chi.algebraic)
    centrals = tuple(chi.algebraic.central(s) for s in range(ctx.num_embeddings))

    states, parent_state, parent_root = _kernel.linkage_bfs(
        ctx.num_embeddings,
        ctx.rank,
        coroots,
        fund,
        heights,
        dens,
        start,
        convention == "shifted",
        guard,
    )

    nroots = ctx.base.num_positive
    chars = [
        LocAnChar(from_integer_encoding(ctx, dens, st, centrals), chi.smooth_tag)
        for st in states
    ]
    chars[0] = chi  # identical value; keep the caller's object

    witness: dict[LocAnChar, LinkageChain] = {chi: LinkageChain(())}
    for n in range(1, len(chars)):
        steps = []
        k = n
        while k != 0:
            code = parent_root[k]
            steps.append((GlobalRoot(code // nroots, code % nroots), chars[k]))
            k = parent_state[k]
        witness[chars[n]] = LinkageChain(tuple(reversed(steps)))

    return LinkageResult(
        origin=chi,
        members=frozenset(chars),
        witness=witness,
        convention=convention,
    )


def verma_factors_borel(
    chi: LocAnChar, convention: str, *, guard: int = DEFAULT_ORBIT_GUARD
) -> LinkageResult:
    """The exact set of simple factors of the Verma module with highest
    weight chi induced from the Borel: precisely the strongly linked
    characters.  Multiplicities are not computed."""
    return strongly_linked_set(chi, convention, guard=guard)


def verma_factor_candidates(
    chi_highest: LocAnChar,
    p: ParabolicSubset,
    convention: str,
    *,
    guard: int = DEFAULT_ORBIT_GUARD,
) -> LinkageResult:
    """Candidate factor set for the parabolic Verma module: strongly
    linked characters whose weight is dominant-integral for the parabolic.

    Exact at the Borel (empty subset); for proper parabolics this is an
    upper bound on the true factor set, flagged via ``upper_bound``."""
    require_parabolic_dominant(chi_highest, p)
    full = strongly_linked_set(chi_highest, convention, guard=guard)
    kept = frozenset(m for m in full.members if in_lambda_p_plus(m.algebraic, p))
    return LinkageResult(
        origin=chi_highest,
        members=kept,
        witness={m: full.witness[m] for m in kept},
        convention=convention,
        upper_bound=bool(p.indices),
    )


def noncritical_obstruction_set(
    chi_highest: LocAnChar,
    p: ParabolicSubset,
    pi_tag: str,
    convention: str,
    *,
    guard: int = DEFAULT_ORBIT_GUARD,
) -> list[tuple[LocAnChar, str]]:
    """The obstruction list for non-criticality: every strongly linked
    character other than the highest weight itself that stays dominant-
    integral for the parabolic, paired with the canonical key of its
    central character class (twisted by pi_tag).

    An empty list means the pair is unconditionally non-critical; a
    non-empty list enumerates exactly the central characters whose
    eigenspaces must vanish.  Sorted by central key, then coordinates."""
    candidates = verma_factor_candidates(chi_highest, p, convention, guard=guard)
    out = [
        (m, central_class_key(m, p, pi_tag))
        for m in candidates.members
        if m != chi_highest
    ]
    out.sort(key=lambda item: (item[1], char_sort_key(item[0])))
    return out
