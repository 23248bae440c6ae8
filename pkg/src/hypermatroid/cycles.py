"""Doubly covering edge collections, matroidal cycles and Berge witnesses.

Edge subsets are tuples of indices into the host hypergraph's canonical
edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hypergraph, HypermatroidError, InvalidParams, bits_of

DEFAULT_CYCLE_CAP = 16

EdgeSubset = tuple[int, ...]


class EmptySelection(HypermatroidError):
    """An edge selection that must be nonempty was empty."""


class NotACycle(HypermatroidError):
    """The supplied edge subset is not a matroidal cycle."""


def _edge_masks(h: Hypergraph, picked: Sequence[int]) -> list[int]:
    masks = h.edges.masks
    out = []
    for i in picked:
        if not 0 <= i < len(masks):
            raise InvalidParams(f"edge index {i} out of range")
        out.append(masks[i])
    return out


def is_doubly_covering(h: Hypergraph, picked: Sequence[int]) -> bool:
    """True iff every picked edge lies in the union of the other picked edges."""
    picked = sorted(set(picked))
    if not picked:
        raise EmptySelection("a doubly covering selection must be nonempty")
    masks = _edge_masks(h, picked)
    return all(_covered(masks, i) for i in range(len(masks)))


def _covered(masks: list[int], i: int) -> bool:
    union = 0
    for j, m in enumerate(masks):
        if j != i:
            union |= m
    return masks[i] & ~union == 0


def _search_covering(
    masks: tuple[int, ...],
    max_size: int,
    stop_on_first: bool,
) -> tuple[list[frozenset[int]], bool]:
    """Enumerate doubly covering subsets by targeted branching.

    A deficient partial selection (some picked edge escapes via a vertex
    covered only once) can only be completed by adding an edge through an
    escaping vertex, so branching is restricted to those edges.  The
    sibling-exclusion scheme makes every covering set reachable exactly once.
    """
    n = len(masks)
    found: list[frozenset[int]] = []
    truncated = False

    def escape_vertex(picked: list[int]) -> int | None:
        best = None
        for i in picked:
            others = 0
            for j in picked:
                if j != i:
                    others |= masks[j]
            esc = masks[i] & ~others
            if esc:
                v = (esc & -esc).bit_length() - 1
                if best is None or v < best:
                    best = v
        return best

    def grow(picked: list[int], banned: set[int]) -> bool:
        nonlocal truncated
        v = escape_vertex(picked)
        if v is None:
            found.append(frozenset(picked))
            return stop_on_first
        if len(picked) >= max_size:
            truncated = True
            return False
        bit = 1 << v
        local_ban: list[int] = []
        for f in range(n):
            if f in banned or not masks[f] & bit or f in picked:
                continue
            picked.append(f)
            done = grow(picked, banned)
            picked.pop()
            banned.add(f)
            local_ban.append(f)
            if done:
                break
        for f in local_ban:
            banned.discard(f)
        return bool(found) and stop_on_first

    for seed in range(n):
        if grow([seed], set(range(seed))):
            break
    return found, truncated


def cycle_search(h: Hypergraph, max_size: int | None = None) -> tuple[list[EdgeSubset], bool]:
    """All matroidal cycles up to ``max_size`` edges, plus a truncation flag."""
    cap = DEFAULT_CYCLE_CAP if max_size is None else max_size
    if cap < 1:
        raise InvalidParams("max_size must be positive")
    covering, truncated = _search_covering(h.edges.masks, cap, stop_on_first=False)
    by_size = sorted(covering, key=lambda s: (len(s), tuple(sorted(s))))
    cycles: list[frozenset[int]] = []
    for cand in by_size:
        if not any(c < cand for c in cycles):
            cycles.append(cand)
    return [tuple(sorted(c)) for c in cycles], truncated


def matroidal_cycles(h: Hypergraph, max_size: int | None = None) -> list[EdgeSubset]:
    """Inclusion-minimal doubly covering edge subsets, in canonical order."""
    return cycle_search(h, max_size)[0]


def has_cycle(h: Hypergraph) -> bool:
    """True iff some doubly covering edge subset exists (early-exit search)."""
    found, _ = _search_covering(h.edges.masks, len(h.edges.masks), stop_on_first=True)
    return bool(found)


def is_matroidal_cycle(h: Hypergraph, picked: Sequence[int]) -> bool:
    """Doubly covering with no doubly covering proper subset."""
    picked = tuple(sorted(set(picked)))
    if not picked:
        return False
    if not is_doubly_covering(h, picked):
        return False
    masks = tuple(_edge_masks(h, picked))
    for drop in range(len(picked)):
        sub = masks[:drop] + masks[drop + 1 :]
        found, _ = _search_covering(sub, len(sub), stop_on_first=True)
        if found:
            return False
    return True


@dataclass(frozen=True)
class BergeCycle:
    """Alternating closed vertex/edge sequence with consecutive incidences."""

    vertices: tuple[str, ...]
    edges: tuple[int, ...]


def is_valid_berge_cycle(h: Hypergraph, cycle: BergeCycle) -> bool:
    """Check the four Berge conditions against the host hypergraph."""
    k = len(cycle.edges)
    if k < 2 or len(cycle.vertices) != k:
        return False
    if len(set(cycle.edges)) != k or len(set(cycle.vertices)) != k:
        return False
    masks = h.edges.masks
    if any(not 0 <= e < len(masks) for e in cycle.edges):
        return False
    try:
        positions = [h.ground.position(v) for v in cycle.vertices]
    except Exception:
        return False
    for i in range(k):
        e = masks[cycle.edges[i]]
        v_here = 1 << positions[i]
        v_next = 1 << positions[(i + 1) % k]
        if not (e & v_here and e & v_next):
            return False
    return True


def berge_cycle_from_matroidal(h: Hypergraph, picked: Sequence[int]) -> BergeCycle:
    """Extract a Berge cycle whose edges come from a matroidal cycle.

    Searches for a simple cycle in the vertex/edge incidence graph of the
    selection.  One always exists when the host hypergraph is simple; if the
    selection is not a matroidal cycle, or the host is degenerate enough
    that no witness exists, ``NotACycle`` is raised.
    """
    picked = tuple(sorted(set(picked)))
    if not is_matroidal_cycle(h, picked):
        raise NotACycle("the selection is not a matroidal cycle")
    masks = _edge_masks(h, picked)
    verts = sorted({v for m in masks for v in bits_of(m)})

    # incidence graph nodes: ("v", pos) and ("e", local index)
    def neighbors(node):
        kind, x = node
        if kind == "v":
            return [("e", i) for i, m in enumerate(masks) if m >> x & 1]
        return [("v", v) for v in bits_of(masks[x])]

    start_nodes = [("v", v) for v in verts]
    for start in start_nodes:
        stack = [(start, iter(neighbors(start)))]
        on_path = {start: 0}
        path = [start]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if len(path) >= 2 and nxt == path[-2]:
                    continue
                if nxt in on_path:
                    cyc = path[on_path[nxt] :]
                    if len(cyc) >= 4:
                        return _to_berge(h, cyc, picked)
                    continue
                on_path[nxt] = len(path)
                path.append(nxt)
                stack.append((nxt, iter(neighbors(nxt))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                del on_path[path.pop()]
    raise NotACycle("no Berge witness exists (host hypergraph is not simple)")


def _to_berge(h: Hypergraph, cyc, picked: tuple[int, ...]) -> BergeCycle:
    if cyc[0][0] == "e":
        cyc = cyc[1:] + cyc[:1]
    vertices = tuple(h.ground.labels[x] for kind, x in cyc if kind == "v")
    edges = tuple(picked[x] for kind, x in cyc if kind == "e")
    return BergeCycle(vertices=vertices, edges=edges)
