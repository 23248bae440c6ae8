"""Derived matroids, derivation chains and their limit classification.

The derived matroid of a matroid M lives on the ground set of M's circuits:
element ``C<i>`` of the result is the i-th circuit of M in canonical order.
Seed dependencies are the circuit collections whose size exceeds the
nullity of their union; the elimination fixpoint of the minimal seeds gives
the derived circuits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .closure import NotAMatroidBug, circuit_axioms_hold, closure_masks, matroidal_closure
from .core import (
    BudgetExceeded,
    GroundSet,
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    SetFamily,
    VertexSet,
)
from .cycles import EdgeSubset, matroidal_cycles
from .matroid import (
    ISO_BUDGET,
    Matroid,
    _greedy_basis,
    is_tricycle,
    isomorphic,
    matroid_components,
    cosimplify,
    uniform,
)

DERIVE_BUDGET = 20


class NotInA0(HypermatroidError):
    """A circuit collection claimed as an initial dependent set is not one."""


def circuit_ground(m: Matroid) -> tuple[GroundSet, tuple[VertexSet, ...]]:
    """Ground set of the derived matroid plus the circuit each element names."""
    circuits = m.circuits.members()
    labels = [f"C{i}" for i in range(len(circuits))]
    return GroundSet(labels), circuits


def _nullity(m: Matroid, vertex_mask: int) -> int:
    return vertex_mask.bit_count() - _greedy_basis(m.circuits.masks, vertex_mask).bit_count()


def _minimal_dependents(element_masks: tuple[int, ...], rank_source: Matroid) -> list[int]:
    """Minimal collections with more members than the nullity of their union.

    A minimal such collection A has |A| = nullity(union A) + 1, so the
    search is capped at nullity(full ground) + 1 members.
    """
    n = len(element_masks)
    cap = rank_source.nullity + 1
    found: list[int] = []
    for k in range(2, cap + 1):
        for combo in combinations(range(n), k):
            sel = 0
            union = 0
            for i in combo:
                sel |= 1 << i
                union |= element_masks[i]
            if any(f & sel == f for f in found):
                continue
            if k > _nullity(rank_source, union):
                found.append(sel)
    return found


def initial_dependents(m: Matroid, budget: int = DERIVE_BUDGET) -> SetFamily:
    """Minimal seed dependencies over the circuit ground of ``m``."""
    if m.n_circuits > budget:
        raise BudgetExceeded(f"{m.n_circuits} circuits exceed the budget of {budget}")
    dground, _ = circuit_ground(m)
    seeds = _minimal_dependents(m.circuits.masks, m)
    return SetFamily(dground, seeds)


def _fixpoint_matroid(ground: GroundSet, seed_masks, guard: str = "paper") -> Matroid:
    fixpoint, _, _ = closure_masks(tuple(seed_masks), guard)
    circuits = SetFamily(ground, fixpoint)
    if __debug__ and not circuit_axioms_hold(circuits, guard):
        raise NotAMatroidBug("elimination fixpoint violates the circuit axioms")
    return Matroid(ground, circuits, _trusted=True)


def derived_matroid(m: Matroid, budget: int = DERIVE_BUDGET) -> Matroid:
    """The combinatorial derived matroid on the circuits of ``m``."""
    if m.n_circuits > budget:
        raise BudgetExceeded(f"{m.n_circuits} circuits exceed the budget of {budget}")
    dground, _ = circuit_ground(m)
    seeds = _minimal_dependents(m.circuits.masks, m)
    return _fixpoint_matroid(dground, seeds)


def hypergraphical_matroid(h: Hypergraph, mode: str = "edges", budget: int = DERIVE_BUDGET) -> Matroid:
    """The matroid derived from an arbitrary hypergraph.

    ``mode="edges"`` keeps the hypergraph's own edges as the ground set and
    measures nullity through the matroidal closure.  ``mode="closure"``
    derives from the closure's circuits instead.  The two agree whenever the
    input is already a matroid.
    """
    if mode not in ("edges", "closure"):
        raise InvalidParams("mode must be 'edges' or 'closure'")
    closure_m, _ = matroidal_closure(h)
    if mode == "closure":
        return derived_matroid(closure_m, budget)
    if h.n_edges > budget:
        raise BudgetExceeded(f"{h.n_edges} edges exceed the budget of {budget}")
    labels = [f"C{i}" for i in range(h.n_edges)]
    dground = GroundSet(labels)
    seeds = _minimal_dependents(h.edges.masks, closure_m)
    return _fixpoint_matroid(dground, seeds)


def a0_contains_cycle_witness(m: Matroid, picked: EdgeSubset) -> EdgeSubset:
    """A matroidal cycle among a seed-dependent collection of circuits.

    The circuits named by ``picked`` are viewed as the edges of a hypergraph
    on the ground set of ``m``; some subcollection must doubly cover itself.
    """
    picked = tuple(sorted(set(picked)))
    circ = m.circuits.masks
    if any(not 0 <= i < len(circ) for i in picked):
        raise InvalidParams("circuit index out of range")
    union = 0
    for i in picked:
        union |= circ[i]
    if len(picked) <= _nullity(m, union):
        raise NotInA0("the collection does not outnumber the nullity of its union")
    sub = SetFamily(m.ground, [circ[i] for i in picked])
    sub_h = Hypergraph(m.ground, sub)
    by_mask = {mask: i for i, mask in zip(picked, [circ[i] for i in picked])}
    cycles = matroidal_cycles(sub_h)
    if not cycles:  # pragma: no cover - impossible for seed dependents
        raise NotAMatroidBug("a seed dependent collection contained no cycle")
    first = cycles[0]
    return tuple(sorted(by_mask[sub_h.edges.masks[j]] for j in first))


@dataclass(frozen=True)
class DerivationStep:
    ground_size: int
    n_circuits: int
    rank: int
    nullity: int


@dataclass(frozen=True)
class Classification:
    """Limit behaviour of an iterated derivation."""

    kind: str  # fades | converges | diverges | budget-exceeded
    limit: Matroid | None = None
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class DerivationTrace:
    matroids: tuple[Matroid, ...]
    steps: tuple[DerivationStep, ...]
    classification: Classification


def _step(m: Matroid) -> DerivationStep:
    return DerivationStep(
        ground_size=m.n_elements,
        n_circuits=m.n_circuits,
        rank=m.rank,
        nullity=m.nullity,
    )


def _divergence_component(m: Matroid) -> Matroid | None:
    """A connected component whose nullity certifies strict growth."""
    for comp in matroid_components(m):
        if comp.nullity >= 4:
            return comp
    return None


def iterate_derivation(
    m: Matroid, max_steps: int = 5, circuit_budget: int = DERIVE_BUDGET
) -> DerivationTrace:
    """Repeatedly derive, classifying the chain as soon as its fate is known.

    Stops with ``fades`` on the empty matroid, ``converges`` when two
    successive steps are isomorphic, ``diverges`` once a step certifies
    strictly growing nullity, and ``budget-exceeded`` otherwise.
    """
    matroids = [m]
    steps = [_step(m)]
    classification = None
    current = m
    for k in range(1, max_steps + 1):
        if current.n_elements == 0:
            classification = Classification("fades", evidence={"step": k - 1})
            break
        if current.n_circuits > circuit_budget:
            classification = Classification(
                "budget-exceeded",
                evidence={"step": k - 1, "reason": f"{current.n_circuits} circuits"},
            )
            break
        nxt = derived_matroid(current, circuit_budget)
        matroids.append(nxt)
        steps.append(_step(nxt))
        if nxt.n_elements == 0:
            classification = Classification("fades", evidence={"step": k})
            break
        if nxt.n_elements == current.n_elements:
            if nxt.n_elements > ISO_BUDGET:
                classification = Classification(
                    "budget-exceeded",
                    evidence={"step": k, "reason": "isomorphism check too large"},
                )
                break
            if isomorphic(current, nxt) is not None:
                classification = Classification("converges", limit=nxt, evidence={"step": k})
                break
        witness = _divergence_component(nxt)
        if witness is not None and nxt.nullity > current.nullity:
            classification = Classification(
                "diverges",
                evidence={
                    "step": k,
                    "component_nullity": witness.nullity,
                    "nullity": nxt.nullity,
                    "previous_nullity": current.nullity,
                },
            )
            break
        current = nxt
    if classification is None:
        if current.n_elements == 0:
            classification = Classification("fades", evidence={"step": len(steps) - 1})
        else:
            classification = Classification(
                "budget-exceeded", evidence={"reason": f"no verdict after {max_steps} steps"}
            )
    return DerivationTrace(tuple(matroids), tuple(steps), classification)


def classify_matroid(m: Matroid) -> Classification:
    """Closed-form limit classification of a connected matroid.

    Single circuits and tricycles fade; matroids whose cosimplification is
    the four-point rank-two uniform matroid converge to it; everything else
    diverges with strictly growing nullity.
    """
    if m.n_elements == 0:
        return Classification("fades")
    if len(matroid_components(m)) > 1:
        raise InvalidParams("classify_matroid needs a connected matroid")
    if m.n_circuits == 0:
        # connected and circuit-free means a single free element
        return Classification("fades")
    if m.n_circuits == 1:
        return Classification("fades", evidence={"shape": "single-circuit"})
    if is_tricycle(m):
        return Classification("fades", evidence={"shape": "tricycle"})
    cos = cosimplify(m)
    target = uniform(4, 2)
    if cos.n_elements == 4 and isomorphic(cos, target) is not None:
        return Classification("converges", limit=target, evidence={"via": "cosimplification"})
    return Classification("diverges")
