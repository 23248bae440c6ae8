"""Naive reference implementations used as independent referees.

Everything here is deliberately literal: set-of-frozenset arithmetic,
full powerset scans and permutation search.  These functions share the
package's data types at their boundaries but none of its algorithms, so
the fast implementations can be tested against them.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .core import (
    BudgetExceeded,
    GroundSet,
    Hypergraph,
    HypermatroidError,
    SetFamily,
)
from .matroid import Matroid, VertexSet, is_matroid, isomorphic, matroid_components

CLOSURE_BUDGET = 10
UPCLOSE_BUDGET = 8
CYCLE_BUDGET = 12
RANK_BUDGET = 12
ISO_BUDGET = 7
CENSUS_BUDGET = 6


def _naive_eps(family: set[frozenset], guard: str = "paper") -> set[frozenset]:
    out = set(family)
    for a in family:
        for b in family:
            inter = a & b
            if guard == "paper":
                if inter in family:
                    continue
            else:
                if a == b or not inter:
                    continue
            for v in inter:
                out.add((a | b) - {v})
    return out


def _naive_min(family: set[frozenset]) -> set[frozenset]:
    return {a for a in family if not any(b < a for b in family)}


def _naive_upclose(family: set[frozenset], labels) -> set[frozenset]:
    out = set()
    for k in range(len(labels) + 1):
        for combo in combinations(labels, k):
            x = frozenset(combo)
            if any(a <= x for a in family):
                out.add(x)
    return out


def oracle_closure(h: Hypergraph, guard: str = "paper") -> SetFamily:
    """Literal fixpoint of the minimal elimination recursion.

    On small grounds the up-closed recursion is materialized as well and the
    two fixpoints are compared, as a cross-check of the implementation
    shortcut that never materializes up-closures.
    """
    if h.n_vertices > CLOSURE_BUDGET:
        raise BudgetExceeded(f"oracle closure limited to {CLOSURE_BUDGET} vertices")
    edges = [frozenset(e.labels()) for e in h.edges]
    cur = set(edges)
    while True:
        nxt = _naive_min(_naive_eps(cur, guard))
        if nxt == cur:
            break
        cur = nxt
    if h.n_vertices <= UPCLOSE_BUDGET:
        up = set(edges)
        while True:
            nxt_up = _naive_upclose(_naive_eps(up, guard), h.ground.labels)
            if nxt_up == up:
                break
            up = nxt_up
        if _naive_min(up) != cur:
            raise HypermatroidError(
                "up-closed recursion disagrees with the minimal recursion"
            )
    return SetFamily(h.ground, [h.ground.subset(sorted(a)).mask for a in cur])


def oracle_cycles(h: Hypergraph) -> list[tuple[int, ...]]:
    """Minimal doubly covering subsets by full powerset scan."""
    m = h.n_edges
    if m > CYCLE_BUDGET:
        raise BudgetExceeded(f"oracle cycles limited to {CYCLE_BUDGET} edges")
    edges = [frozenset(e.labels()) for e in h.edges]
    covering = []
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            ok = True
            for i in combo:
                others = frozenset().union(*(edges[j] for j in combo if j != i)) if size > 1 else frozenset()
                if not edges[i] <= others:
                    ok = False
                    break
            if ok:
                covering.append(set(combo))
    minimal = [c for c in covering if not any(o < c for o in covering)]
    return sorted((tuple(sorted(c)) for c in minimal), key=lambda t: (len(t), t))


def oracle_rank(m: Matroid, subset: VertexSet) -> int:
    """Largest circuit-free subset size, by exhaustive scan."""
    labels = subset.labels()
    if len(labels) > RANK_BUDGET:
        raise BudgetExceeded(f"oracle rank limited to {RANK_BUDGET} elements")
    circuits = [frozenset(c.labels()) for c in m.circuits]
    for k in range(len(labels), 0, -1):
        for combo in combinations(labels, k):
            s = frozenset(combo)
            if not any(c <= s for c in circuits):
                return k
    return 0


def oracle_iso(m1: Matroid, m2: Matroid) -> bool:
    """Isomorphism by trying every ground bijection."""
    n = m1.ground.size
    if n > ISO_BUDGET or m2.ground.size > ISO_BUDGET:
        raise BudgetExceeded(f"oracle isomorphism limited to {ISO_BUDGET} elements")
    if n != m2.ground.size:
        return False
    c1 = [frozenset(c.labels()) for c in m1.circuits]
    c2 = {frozenset(c.labels()) for c in m2.circuits}
    if len(c1) != len(c2):
        return False
    l1, l2 = m1.ground.labels, m2.ground.labels
    for perm in permutations(range(n)):
        mapping = {l1[i]: l2[perm[i]] for i in range(n)}
        if {frozenset(mapping[v] for v in c) for c in c1} == c2:
            return True
    return False


def _exchange_families(n: int, r: int, pinned: bool) -> list[list[int]]:
    """All basis families of rank-r matroids on n labeled elements.

    Families are subsets of the r-subsets closed under the basis exchange
    demand: for bases B1, B2 and x in B1 - B2 some B1 - x + y must also be
    chosen.  With ``pinned`` only families containing the first r-subset are
    produced, which still covers every isomorphism class.
    """
    cand = []
    for combo in combinations(range(n), r):
        mask = 0
        for v in combo:
            mask |= 1 << v
        cand.append(mask)
    m = len(cand)
    index_of = {mask: i for i, mask in enumerate(cand)}

    def demands(i: int, j: int) -> list[int]:
        a, b = cand[i], cand[j]
        out = []
        diff = a & ~b
        while diff:
            xbit = diff & -diff
            diff ^= xbit
            repair = 0
            ys = b & ~a
            while ys:
                ybit = ys & -ys
                ys ^= ybit
                repair |= 1 << index_of[(a ^ xbit) | ybit]
            out.append(repair)
        return out

    dem = {}
    for i in range(m):
        for j in range(m):
            if i != j:
                dem[i, j] = demands(i, j)

    results: list[list[int]] = []

    def grow(start: int, chosen_mask: int, chosen: list[int], pending: tuple[int, ...]):
        if not pending and chosen:
            results.append([cand[i] for i in chosen])
        for k in range(start, m):
            new_mask = chosen_mask | (1 << k)
            new_pending = []
            dead = False
            for d in pending:
                if d & new_mask:
                    continue
                if not d >> (k + 1):
                    dead = True
                    break
                new_pending.append(d)
            if not dead:
                for j in chosen:
                    for d in dem[k, j] + dem[j, k]:
                        if d & new_mask:
                            continue
                        if not d >> (k + 1):
                            dead = True
                            break
                        new_pending.append(d)
                    if dead:
                        break
            if not dead:
                grow(k + 1, new_mask, chosen + [k], tuple(new_pending))

    if pinned:
        if m:
            grow(1, 1, [0], ())
    else:
        grow(0, 0, [], ())
    return results


def _circuits_from_bases(n: int, bases: list[int]) -> list[int]:
    r = bases[0].bit_count()
    circuits: list[int] = []
    for k in range(1, min(n, r + 1) + 1):
        for combo in combinations(range(n), k):
            x = 0
            for v in combo:
                x |= 1 << v
            if any(c & x == c for c in circuits):
                continue
            if not any(x & ~b == 0 for b in bases):
                circuits.append(x)
    return circuits


def labeled_matroid_count(n: int) -> int:
    """Number of labeled matroids on n elements, by direct enumeration."""
    if n > 5:
        raise BudgetExceeded("labeled enumeration kept to 5 elements")
    return sum(len(_exchange_families(n, r, pinned=False)) for r in range(n + 1))


def census_matroids(
    n: int,
    rank: int | None = None,
    simple: bool = False,
    connected: bool = False,
) -> list[Matroid]:
    """All isomorphism classes of matroids on n elements, with filters.

    Enumerates basis families per rank, converts to circuits, keeps families
    passing the circuit-axiom check, and deduplicates by isomorphism.  The
    class representatives come back in a deterministic order.
    """
    if n > CENSUS_BUDGET:
        raise BudgetExceeded(f"census limited to {CENSUS_BUDGET} elements")
    ranks = [rank] if rank is not None else list(range(n + 1))
    ground = GroundSet([f"e{i}" for i in range(1, n + 1)])
    classes: list[Matroid] = []
    keys: list[tuple] = []
    for r in ranks:
        if not 0 <= r <= n:
            continue
        for bases in _exchange_families(n, r, pinned=True):
            circuits = _circuits_from_bases(n, bases)
            family = SetFamily(ground, circuits)
            if not is_matroid(Hypergraph(ground, family)):
                continue
            matroid = Matroid(ground, family, _trusted=True)
            if simple and any(c.bit_count() <= 2 for c in matroid.circuits.masks):
                continue
            if connected and len(matroid_components(matroid)) != 1:
                continue
            key = _iso_key(matroid)
            is_new = True
            for existing, k in zip(classes, keys):
                if k == key and isomorphic(existing, matroid) is not None:
                    is_new = False
                    break
            if is_new:
                classes.append(matroid)
                keys.append(key)
    order = sorted(
        range(len(classes)),
        key=lambda i: (classes[i].rank, len(classes[i].circuits.masks), keys[i]),
    )
    return [classes[i] for i in order]


def _iso_key(m: Matroid) -> tuple:
    sizes = tuple(sorted(c.bit_count() for c in m.circuits.masks))
    sigs = []
    for v in range(m.ground.size):
        bit = 1 << v
        sigs.append(tuple(sorted(c.bit_count() for c in m.circuits.masks if c & bit)))
    return (m.ground.size, m.rank, sizes, tuple(sorted(sigs)))
