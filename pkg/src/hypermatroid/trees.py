"""Tree predicates and the classical hypergraph independence tests.

Covers forest-transversal independence (Lorea), sparsity independence for
k-regular hypergraphs (Main), proper edges, and the edge-count lower bound
that defines matroidal and natural trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .closure import matroidal_closure
from .core import (
    BudgetExceeded,
    EmptyEdge,
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    VertexSet,
    bits_of,
    is_k_regular,
    same_ground,
)
from .cycles import has_cycle

LOREA_BUDGET = 12
MAIN_BUDGET = 20

MATROIDAL_TREE = "matroidal-tree"
NATURAL_TREE = "natural-tree"
NOT_A_TREE = "not-a-tree"


class NotKRegular(HypermatroidError):
    """The hypergraph is not k-regular for the requested k."""


def _picked_masks(h: Hypergraph, picked: Sequence[int]) -> list[int]:
    masks = h.edges.masks
    out = []
    for i in sorted(set(picked)):
        if not 0 <= i < len(masks):
            raise InvalidParams(f"edge index {i} out of range")
        out.append(masks[i])
    return out


def lorea_independent(h: Hypergraph, picked: Sequence[int], budget: int = LOREA_BUDGET) -> bool:
    """Can each picked hyperedge host a distinct pair so the pairs form a forest?

    Decided by backtracking over two-element subsets with union-find forest
    maintenance.  Edges of size two may host themselves.
    """
    masks = _picked_masks(h, picked)
    if not masks:
        return True
    if any(m.bit_count() < 2 for m in masks):
        return False
    if len(masks) > h.n_vertices - 1:
        return False
    if len(masks) > budget:
        raise BudgetExceeded(f"{len(masks)} edges exceed the backtracking budget of {budget}")

    # branch on the most constrained hyperedges first
    masks.sort(key=lambda m: m.bit_count())
    pair_options = [list(combinations(list(bits_of(m)), 2)) for m in masks]

    def grow(i: int, parent: dict[int, int]) -> bool:
        if i == len(masks):
            return True
        for u, v in pair_options[i]:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                continue
            child = dict(parent)
            child[max(ru, rv)] = min(ru, rv)
            if grow(i + 1, child):
                return True
        return False

    return grow(0, {})


def _find(parent: dict[int, int], x: int) -> int:
    while x in parent:
        x = parent[x]
    return x


def main_independent(h: Hypergraph, k: int, picked: Sequence[int], budget: int = MAIN_BUDGET) -> bool:
    """Sparsity test for k-regular hypergraphs.

    A selection is independent when every nonempty subcollection spans at
    least (its size + k - 1) vertices.
    """
    if not is_k_regular(h, k):
        raise NotKRegular(f"hypergraph is not {k}-regular")
    masks = _picked_masks(h, picked)
    if not masks:
        return True
    if len(masks) > budget:
        raise BudgetExceeded(f"{len(masks)} edges exceed the subset budget of {budget}")
    n = len(masks)
    union = [0] * (1 << n)
    for sub in range(1, 1 << n):
        low = sub & -sub
        union[sub] = union[sub ^ low] | masks[low.bit_length() - 1]
        if union[sub].bit_count() < sub.bit_count() + k - 1:
            return False
    return True


def is_proper_edge(h: Hypergraph, edge: VertexSet) -> bool:
    """True iff the edge is incomparable to every circuit of the closure.

    An edge that contains a closure circuit adds no new dependency, and one
    nested inside a circuit (or an existing edge) breaks simplicity; only
    incomparable edges make the rank drop when inserted.
    """
    same_ground(h.ground, edge.ground)
    if edge.mask == 0:
        raise EmptyEdge("a proper edge candidate cannot be empty")
    matroid, _ = matroidal_closure(h)
    e = edge.mask
    return all(c & e != c and c & e != e for c in matroid.circuits.masks)


@dataclass(frozen=True)
class TreeReport:
    edge_count: int
    vertex_count: int
    rank: int
    attains_bound: bool
    cycle_free: bool
    verdict: str


def tree_report(h: Hypergraph) -> TreeReport:
    """Classify a hypergraph against the edge-count lower bound.

    The bound is |E| = |V| - rank.  Attaining it makes a matroidal tree;
    attaining it without any matroidal cycle makes a natural tree.
    """
    matroid, _ = matroidal_closure(h)
    rank = matroid.rank
    attains = h.n_edges == h.n_vertices - rank
    cycle_free = not has_cycle(h)
    if attains and cycle_free:
        verdict = NATURAL_TREE
    elif attains:
        verdict = MATROIDAL_TREE
    else:
        verdict = NOT_A_TREE
    return TreeReport(
        edge_count=h.n_edges,
        vertex_count=h.n_vertices,
        rank=rank,
        attains_bound=attains,
        cycle_free=cycle_free,
        verdict=verdict,
    )
