"""Ground sets, bitset vertex sets, canonical set families and hypergraphs.

Vertices are labeled by strings externally and by dense bit positions
internally.  All types are immutable after construction, so every operation
in this package is a pure function and values can be shared freely.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_GROUND = 256


class HypermatroidError(Exception):
    """Base class for all errors raised by this package."""


class EmptyEdge(HypermatroidError):
    """An edge with no vertices was supplied."""


class UnknownVertex(HypermatroidError):
    """An edge refers to a vertex that is not in the ground set."""


class CapacityExceeded(HypermatroidError):
    """More vertices than the bitset capacity allows."""


class GroundMismatch(HypermatroidError):
    """Two values over different ground sets were combined."""


class BudgetExceeded(HypermatroidError):
    """An exhaustive search was asked to exceed its configured budget."""


class InvalidParams(HypermatroidError):
    """Arguments outside a constructor's admissible range."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GroundSet:
    """An ordered, duplicate-free universe of vertex labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if len(labels) > MAX_GROUND:
            raise CapacityExceeded(f"{len(labels)} vertices exceed capacity {MAX_GROUND}")
        index = {}
        for pos, lab in enumerate(labels):
            if lab in index:
                raise InvalidParams(f"duplicate vertex label {lab!r}")
            index[lab] = pos
        self.labels = labels
        self._index = index

    @property
    def size(self) -> int:
        return len(self.labels)

    def position(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def subset(self, labels: Iterable[str]) -> "VertexSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.position(lab)
        return VertexSet(self, mask)

    def from_mask(self, mask: int) -> "VertexSet":
        return VertexSet(self, mask)

    def full(self) -> "VertexSet":
        return VertexSet(self, (1 << self.size) - 1)

    def empty(self) -> "VertexSet":
        return VertexSet(self, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"


def same_ground(a: GroundSet, b: GroundSet) -> GroundSet:
    if a != b:
        raise GroundMismatch("values live over different ground sets")
    return a


class VertexSet:
    """A subset of a ground set, stored as a bitmask."""

    __slots__ = ("ground", "mask")

    def __init__(self, ground: GroundSet, mask: int):
        if mask < 0 or mask >> ground.size:
            raise InvalidParams("mask has bits outside the ground set")
        self.ground = ground
        self.mask = mask

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in bits_of(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.ground.position(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels())

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(same_ground(self.ground, other.ground), self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(same_ground(self.ground, other.ground), self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(same_ground(self.ground, other.ground), self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        same_ground(self.ground, other.ground)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.ground == other.ground
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.ground.labels, self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def canonical_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort masks by cardinality, then by bit value."""
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


class SetFamily:
    """A duplicate-free collection of vertex sets in canonical order."""

    __slots__ = ("ground", "masks")

    def __init__(self, ground: GroundSet, masks: Iterable[int]):
        self.ground = ground
        self.masks = canonical_masks(masks)

    @classmethod
    def from_sets(cls, sets: Iterable[VertexSet], ground: GroundSet | None = None) -> "SetFamily":
        sets = list(sets)
        if ground is None:
            if not sets:
                raise InvalidParams("cannot infer the ground set of an empty family")
            ground = sets[0].ground
        for s in sets:
            same_ground(ground, s.ground)
        return cls(ground, (s.mask for s in sets))

    def members(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.ground, m) for m in self.masks)

    def is_antichain(self) -> bool:
        """True iff no member is a proper subset of another."""
        ms = self.masks
        for i, a in enumerate(ms):
            for b in ms[i + 1 :]:
                # canonical order sorts by size, so only a < b is possible
                if a & ~b == 0 and a != b:
                    return False
        return True

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members())

    def __contains__(self, s: VertexSet) -> bool:
        return s.ground == self.ground and s.mask in set(self.masks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.ground.labels, self.masks))

    def __repr__(self) -> str:
        return "{" + ", ".join(repr(m) for m in self.members()) + "}"


class Hypergraph:
    """A ground set together with a canonical family of nonempty edges."""

    __slots__ = ("ground", "edges")

    def __init__(self, ground: GroundSet, edges: SetFamily):
        same_ground(ground, edges.ground)
        if any(m == 0 for m in edges.masks):
            raise EmptyEdge("hypergraphs cannot contain an empty edge")
        self.ground = ground
        self.edges = edges

    @property
    def n_vertices(self) -> int:
        return self.ground.size

    @property
    def n_edges(self) -> int:
        return len(self.edges.masks)

    def edge_labels(self) -> list[list[str]]:
        return [list(e.labels()) for e in self.edges]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.ground == other.ground
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.ground.labels, self.edges.masks))

    def __repr__(self) -> str:
        return f"Hypergraph({list(self.ground.labels)!r}, {self.edges!r})"


def make_hypergraph(
    labels: Sequence[str] | None,
    edges: Iterable[Iterable[str]],
) -> Hypergraph:
    """Build a canonical hypergraph from vertex labels and label-list edges.

    With ``labels=None`` the ground set is inferred as the union of all edge
    vertices, ordered lexicographically.  Duplicate edges are collapsed.
    """
    edge_lists = [list(e) for e in edges]
    for e in edge_lists:
        if not e:
            raise EmptyEdge("an edge with zero vertices was supplied")
    if labels is None:
        labels = sorted({v for e in edge_lists for v in e})
    ground = GroundSet(labels)
    masks = [ground.subset(e).mask for e in edge_lists]
    return Hypergraph(ground, SetFamily(ground, masks))


def is_simple(h: Hypergraph) -> bool:
    """True iff no edge contains another."""
    return h.edges.is_antichain()


def is_k_regular(h: Hypergraph, k: int) -> bool:
    """True iff every edge has exactly ``k`` vertices."""
    if k < 1:
        raise InvalidParams("k must be a positive integer")
    return all(m.bit_count() == k for m in h.edges.masks)


class UnionFind:
    """Plain union-find over integer keys with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def connected_components(h: Hypergraph) -> list[Hypergraph]:
    """Split a hypergraph along the transitive closure of edge sharing.

    Isolated vertices become singleton components with no edges.  Components
    are ordered by their smallest vertex position.
    """
    n = h.ground.size
    uf = UnionFind(n)
    for mask in h.edges.masks:
        positions = list(bits_of(mask))
        for p in positions[1:]:
            uf.union(positions[0], p)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    components = []
    for root in sorted(groups):
        verts = groups[root]
        vert_mask = 0
        for v in verts:
            vert_mask |= 1 << v
        sub_labels = [h.ground.labels[v] for v in verts]
        sub_ground = GroundSet(sub_labels)
        remap = {v: i for i, v in enumerate(verts)}
        sub_masks = []
        for mask in h.edges.masks:
            if mask & vert_mask == mask:
                m = 0
                for v in bits_of(mask):
                    m |= 1 << remap[v]
                sub_masks.append(m)
        components.append(Hypergraph(sub_ground, SetFamily(sub_ground, sub_masks)))
    return components
