"""The elimination operator on set families and the matroidal closure.

The closure of a hypergraph is computed by iterating ``min(epsilon(F))``
until the family stops changing.  Up-closed intermediate families are never
materialized; an antichain stands for itself plus all implicit supersets,
which keeps the iteration polynomial in the antichain sizes instead of
exponential in the ground set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    SetFamily,
    bits_of,
)

GUARDS = ("paper", "classic")


class NotAMatroidBug(HypermatroidError):
    """Internal: the closure fixpoint failed the circuit axioms.

    This signals an implementation fault, never a user error.
    """


@dataclass(frozen=True)
class ClosureReport:
    """Iteration statistics for one closure computation."""

    closure_edges: SetFamily
    iterations: int
    intermediate_sizes: tuple[int, ...]


def _check_guard(guard: str) -> None:
    if guard not in GUARDS:
        raise InvalidParams(f"elimination guard must be one of {GUARDS}")


def epsilon_masks(masks: tuple[int, ...], guard: str = "paper") -> tuple[int, ...]:
    """One elimination round on raw bitmasks, without the minimality pass."""
    family = set(masks)
    generated = set(masks)
    seq = list(masks)
    for i, a in enumerate(seq):
        for b in seq[i:]:
            inter = a & b
            if guard == "paper":
                # membership guard; excludes a == b since a & a is in the family
                if inter in family:
                    continue
            else:
                if a == b or inter == 0:
                    continue
            union = a | b
            for v in bits_of(inter):
                generated.add(union & ~(1 << v))
    return tuple(sorted(generated, key=lambda m: (m.bit_count(), m)))


def min_masks(masks: tuple[int, ...]) -> tuple[int, ...]:
    """Inclusion-minimal members of a canonically sorted mask tuple."""
    mins: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(p & ~m == 0 for p in mins):
            mins.append(m)
    return tuple(mins)


def epsilon(family: SetFamily, guard: str = "paper") -> SetFamily:
    """Close a family under one round of union-minus-a-shared-vertex.

    Adds ``(A1 | A2) - {v}`` for every pair whose intersection is not itself
    a member and every vertex ``v`` in the intersection.
    """
    _check_guard(guard)
    return SetFamily(family.ground, epsilon_masks(family.masks, guard))


def min_family(family: SetFamily) -> SetFamily:
    """The inclusion-minimal members of a family, as an antichain."""
    return SetFamily(family.ground, min_masks(family.masks))


def closure_masks(
    masks: tuple[int, ...], guard: str = "paper"
) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    """Iterate min(epsilon(.)) to its fixpoint on raw masks.

    Returns (fixpoint, rounds, per-round family sizes).  Termination is
    guaranteed because the implicit up-closures form an increasing chain of
    subsets of a finite power set.
    """
    current = tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))
    sizes = [len(current)]
    rounds = 0
    while True:
        nxt = min_masks(epsilon_masks(current, guard))
        rounds += 1
        sizes.append(len(nxt))
        if nxt == current:
            break
        current = nxt
    return current, rounds, tuple(sizes)


def circuit_axioms_hold(family: SetFamily, guard: str = "paper") -> bool:
    """True iff the family is an antichain stable under min(epsilon(.)).

    Stability of an antichain under one elimination round is exactly the
    circuit elimination axiom: every generated set must contain a member.
    The empty set is never a circuit.
    """
    masks = family.masks
    if any(m == 0 for m in masks):
        return False
    if not family.is_antichain():
        return False
    return min_masks(epsilon_masks(masks, guard)) == masks


def matroidal_closure(h: Hypergraph, guard: str = "paper"):
    """Compute the matroid canonically generated by a hypergraph's edges.

    Returns ``(matroid, report)``.  The matroid's circuits are the stable
    antichain reached from the edge family; the report records how many
    elimination rounds were needed and the intermediate family sizes.
    """
    _check_guard(guard)
    fixpoint, rounds, sizes = closure_masks(h.edges.masks, guard)
    circuits = SetFamily(h.ground, fixpoint)
    from .matroid import Matroid, NotAMatroid

    try:
        matroid = Matroid.from_circuits(h.ground, circuits)
    except NotAMatroid as exc:  # pragma: no cover - guarded by the fixpoint test
        raise NotAMatroidBug(f"closure fixpoint violates the circuit axioms: {exc}") from exc
    report = ClosureReport(closure_edges=circuits, iterations=rounds, intermediate_sizes=sizes)
    return matroid, report
