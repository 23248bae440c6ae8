"""Matroids as verified circuit hypergraphs: rank, duality, isomorphism.

A matroid is stored as its circuit antichain over a labeled ground set.
Construction through ``Matroid.from_circuits`` checks the circuit
elimination axiom; constructors that are matroids by theory (uniform
matroids, direct sums, duals) skip the check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .closure import circuit_axioms_hold, matroidal_closure
from .core import (
    BudgetExceeded,
    GroundSet,
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    SetFamily,
    UnionFind,
    VertexSet,
    bits_of,
    same_ground,
)

DUAL_BUDGET = 20
ISO_BUDGET = 16


class NotAMatroid(HypermatroidError):
    """A set family that was required to satisfy the circuit axioms does not."""


def is_matroid(h: Hypergraph) -> bool:
    """True iff the edge family of ``h`` satisfies the circuit axioms."""
    return circuit_axioms_hold(h.edges)


class Matroid:
    """An immutable matroid given by its circuit family."""

    __slots__ = ("ground", "circuits", "rank")

    def __init__(self, ground: GroundSet, circuits: SetFamily, *, _trusted: bool = False):
        same_ground(ground, circuits.ground)
        if not _trusted and not circuit_axioms_hold(circuits):
            raise NotAMatroid("circuit family violates the elimination axiom")
        self.ground = ground
        self.circuits = circuits
        self.rank = _greedy_basis(circuits.masks, (1 << ground.size) - 1).bit_count()

    @classmethod
    def from_circuits(cls, ground: GroundSet, circuits: SetFamily) -> "Matroid":
        return cls(ground, circuits)

    @property
    def nullity(self) -> int:
        return self.ground.size - self.rank

    @property
    def n_elements(self) -> int:
        return self.ground.size

    @property
    def n_circuits(self) -> int:
        return len(self.circuits.masks)

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.ground, self.circuits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self.circuits == other.circuits
        )

    def __hash__(self) -> int:
        return hash((self.ground.labels, self.circuits.masks))

    def __repr__(self) -> str:
        return (
            f"Matroid(n={self.ground.size}, rank={self.rank}, "
            f"circuits={list(self.circuits)!r})"
        )


def _greedy_basis(circ_masks: tuple[int, ...], subset_mask: int) -> int:
    """Largest circuit-free subset of ``subset_mask``, grown greedily.

    Greedy is exact because the circuit family is a verified matroid.
    """
    basis = 0
    for v in bits_of(subset_mask):
        cand = basis | (1 << v)
        if all(c & cand != c for c in circ_masks):
            basis = cand
    return basis


@dataclass(frozen=True)
class RankProfile:
    rank: int
    nullity: int
    basis: VertexSet


def rank_of(m: Matroid, subset: VertexSet) -> RankProfile:
    """Rank, nullity and one witness basis of a vertex subset."""
    same_ground(m.ground, subset.ground)
    basis = _greedy_basis(m.circuits.masks, subset.mask)
    r = basis.bit_count()
    return RankProfile(rank=r, nullity=len(subset) - r, basis=VertexSet(m.ground, basis))


def hypergraph_rank(h: Hypergraph) -> int:
    """Rank of a hypergraph: the rank of its matroidal closure."""
    matroid, _ = matroidal_closure(h)
    return matroid.rank


def uniform(n: int, r: int, prefix: str = "e") -> Matroid:
    """The uniform matroid on ``n`` elements of rank ``r``.

    Circuits are all (r+1)-subsets; ``r == n`` gives the free matroid.
    """
    if not 0 <= r <= n:
        raise InvalidParams(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    ground = GroundSet([f"{prefix}{i}" for i in range(1, n + 1)])
    masks = []
    if r < n:
        for combo in combinations(range(n), r + 1):
            m = 0
            for v in combo:
                m |= 1 << v
            masks.append(m)
    return Matroid(ground, SetFamily(ground, masks), _trusted=True)


def theta(p: int, q: int, r: int) -> Matroid:
    """Graphic matroid of a theta graph with path lengths ``p, q, r``.

    Elements are the path edges; the circuits are the three pairwise unions
    of paths.  Always a tricycle.
    """
    if min(p, q, r) < 1:
        raise InvalidParams("theta path lengths must be at least 1")
    labels = (
        [f"a{i}" for i in range(1, p + 1)]
        + [f"b{i}" for i in range(1, q + 1)]
        + [f"c{i}" for i in range(1, r + 1)]
    )
    ground = GroundSet(labels)
    pm = (1 << p) - 1
    qm = ((1 << q) - 1) << p
    rm = ((1 << r) - 1) << (p + q)
    return Matroid(ground, SetFamily(ground, [pm | qm, pm | rm, qm | rm]))


def is_tricycle(m: Matroid) -> bool:
    """Three circuits, pairwise meeting, pairwise covering, nothing common."""
    if len(m.circuits.masks) != 3:
        return False
    c1, c2, c3 = m.circuits.masks
    full = (1 << m.ground.size) - 1
    if c1 & c2 & c3:
        return False
    for a, b in ((c1, c2), (c1, c3), (c2, c3)):
        if a & b == 0 or a | b != full:
            return False
    return True


def direct_sum(matroids: list[Matroid]) -> Matroid:
    """Disjoint union of grounds and circuit families."""
    if not matroids:
        raise InvalidParams("direct_sum needs at least one matroid")
    labels: list[str] = []
    for m in matroids:
        labels.extend(m.ground.labels)
    if len(set(labels)) != len(labels):
        raise InvalidParams("direct summands must have disjoint ground labels")
    ground = GroundSet(labels)
    masks = []
    shift = 0
    for m in matroids:
        masks.extend(c << shift for c in m.circuits.masks)
        shift += m.ground.size
    return Matroid(ground, SetFamily(ground, masks), _trusted=True)


def relabel(m: Matroid, mapping: dict[str, str]) -> Matroid:
    """Rename ground elements; the mapping must cover every label injectively."""
    new_labels = [mapping[lab] for lab in m.ground.labels]
    if len(set(new_labels)) != len(new_labels):
        raise InvalidParams("relabeling must be injective")
    ground = GroundSet(new_labels)
    return Matroid(ground, SetFamily(ground, m.circuits.masks), _trusted=True)


def series_extend(m: Matroid, label: str, split_labels: tuple[str, str] | None = None) -> Matroid:
    """Split one element into two series elements.

    Every circuit through the element picks up both replacements; all other
    circuits are unchanged.
    """
    pos = m.ground.position(label)
    if split_labels is None:
        split_labels = (f"{label}'", f"{label}''")
    new_labels = list(m.ground.labels[:pos]) + list(m.ground.labels[pos + 1 :]) + list(split_labels)
    ground = GroundSet(new_labels)
    n_old = m.ground.size
    both = (1 << (n_old - 1)) | (1 << n_old)

    def remap(mask: int) -> int:
        out = 0
        for v in bits_of(mask):
            if v == pos:
                out |= both
            else:
                out |= 1 << (v if v < pos else v - 1)
        return out

    return Matroid(ground, SetFamily(ground, [remap(c) for c in m.circuits.masks]))


def matroid_components(m: Matroid) -> list[Matroid]:
    """Split along the transitive closure of sharing a circuit.

    Elements in no circuit become singleton free components.
    """
    n = m.ground.size
    uf = UnionFind(n)
    for mask in m.circuits.masks:
        positions = list(bits_of(mask))
        for p in positions[1:]:
            uf.union(positions[0], p)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    out = []
    for root in sorted(groups):
        verts = groups[root]
        vert_mask = 0
        for v in verts:
            vert_mask |= 1 << v
        remap = {v: i for i, v in enumerate(verts)}
        sub_ground = GroundSet([m.ground.labels[v] for v in verts])
        sub_masks = []
        for mask in m.circuits.masks:
            if mask & vert_mask == mask:
                sm = 0
                for v in bits_of(mask):
                    sm |= 1 << remap[v]
                sub_masks.append(sm)
        out.append(Matroid(sub_ground, SetFamily(sub_ground, sub_masks), _trusted=True))
    return out


def dual(m: Matroid, budget: int = DUAL_BUDGET) -> Matroid:
    """The dual matroid, via the rank test on complements.

    A set is independent in the dual exactly when its complement spans, so
    dual circuits are the minimal sets whose removal drops the rank.
    """
    n = m.ground.size
    if n > budget:
        raise BudgetExceeded(f"dual computation limited to {budget} elements, got {n}")
    full = (1 << n) - 1
    r = m.rank
    circ = m.circuits.masks
    dual_circuits: list[int] = []
    max_size = n - r + 1
    for k in range(1, max_size + 1):
        for combo in combinations(range(n), k):
            x = 0
            for v in combo:
                x |= 1 << v
            if any(c & x == c for c in dual_circuits):
                continue
            if _greedy_basis(circ, full & ~x).bit_count() < r:
                dual_circuits.append(x)
    ground = m.ground
    return Matroid(ground, SetFamily(ground, dual_circuits), _trusted=True)


def _parallel_representatives(m: Matroid) -> tuple[int, dict[int, int]]:
    """Loops mask and a map from each non-loop position to its class min."""
    loops = 0
    for c in m.circuits.masks:
        if c.bit_count() == 1:
            loops |= c
    n = m.ground.size
    uf = UnionFind(n)
    for c in m.circuits.masks:
        if c.bit_count() == 2:
            a, b = bits_of(c)
            uf.union(a, b)
    rep: dict[int, int] = {}
    for v in range(n):
        if not loops >> v & 1:
            rep[v] = uf.find(v)
    return loops, rep


def simplify(m: Matroid) -> Matroid:
    """Delete loops and keep one representative per parallel class."""
    matroid, _ = simplify_with_map(m)
    return matroid


def simplify_with_map(m: Matroid) -> tuple[Matroid, dict[str, str]]:
    """Simplification plus the element-to-representative label map."""
    _, rep = _parallel_representatives(m)
    keep = sorted(set(rep.values()))
    keep_mask = 0
    for v in keep:
        keep_mask |= 1 << v
    remap = {v: i for i, v in enumerate(keep)}
    ground = GroundSet([m.ground.labels[v] for v in keep])
    masks = []
    for c in m.circuits.masks:
        if c & keep_mask == c:
            sm = 0
            for v in bits_of(c):
                sm |= 1 << remap[v]
            masks.append(sm)
    label_map = {m.ground.labels[v]: m.ground.labels[r] for v, r in rep.items()}
    return Matroid(ground, SetFamily(ground, masks), _trusted=True), label_map


def cosimplify(m: Matroid, budget: int = DUAL_BUDGET) -> Matroid:
    """Collapse series classes: the dual of the simplification of the dual.

    Degenerate inputs (for example a single circuit) collapse to a one
    element matroid; the result is returned as-is rather than raising.
    """
    return dual(simplify(dual(m, budget)), budget)


def _circuit_size_multiset(m: Matroid) -> tuple[int, ...]:
    return tuple(sorted(c.bit_count() for c in m.circuits.masks))


def _element_signatures(m: Matroid) -> list[tuple[int, ...]]:
    sigs = []
    for v in range(m.ground.size):
        bit = 1 << v
        sigs.append(tuple(sorted(c.bit_count() for c in m.circuits.masks if c & bit)))
    return sigs


def isomorphic(m1: Matroid, m2: Matroid, budget: int = ISO_BUDGET) -> dict[str, str] | None:
    """Find a circuit-preserving ground bijection, or None.

    Elements are matched by backtracking after prefiltering on circuit-size
    and per-element circuit-membership invariants.  The first bijection in
    canonical ground order is returned, deterministically.
    """
    n = m1.ground.size
    if n > budget or m2.ground.size > budget:
        raise BudgetExceeded(f"isomorphism search limited to {budget} elements")
    if (
        n != m2.ground.size
        or m1.rank != m2.rank
        or len(m1.circuits.masks) != len(m2.circuits.masks)
        or _circuit_size_multiset(m1) != _circuit_size_multiset(m2)
    ):
        return None
    sig1 = _element_signatures(m1)
    sig2 = _element_signatures(m2)
    if sorted(sig1) != sorted(sig2):
        return None

    target = set(m2.circuits.masks)
    # circuits grouped by their highest element: fully mapped once that
    # element is assigned
    by_max: list[list[int]] = [[] for _ in range(n + 1)]
    for c in m1.circuits.masks:
        by_max[c.bit_length() - 1 if c else n].append(c)

    perm = [-1] * n
    used = [False] * n

    def image(mask: int) -> int:
        out = 0
        for v in bits_of(mask):
            out |= 1 << perm[v]
        return out

    def extend(v: int) -> bool:
        if v == n:
            return True
        for j in range(n):
            if used[j] or sig1[v] != sig2[j]:
                continue
            perm[v] = j
            used[j] = True
            if all(image(c) in target for c in by_max[v]):
                if extend(v + 1):
                    return True
            used[j] = False
            perm[v] = -1
        return False

    if not extend(0):
        return None
    return {m1.ground.labels[v]: m2.ground.labels[perm[v]] for v in range(n)}
