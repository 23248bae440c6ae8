import pytest

from hypermatroid import (
    NotInA0,
    a0_contains_cycle_witness,
    classify_matroid,
    derived_matroid,
    direct_sum,
    hypergraphical_matroid,
    initial_dependents,
    is_doubly_covering,
    is_matroid,
    isomorphic,
    iterate_derivation,
    make_hypergraph,
    matroid_components,
    relabel,
    series_extend,
    theta,
    uniform,
)
from hypermatroid.matroid import Matroid, _greedy_basis

K43 = make_hypergraph(
    ["1", "2", "3", "4"],
    [["1", "2", "3"], ["1", "2", "4"], ["1", "3", "4"], ["2", "3", "4"]],
)


def seed_indexsets(m):
    fam = initial_dependents(m)
    return {tuple(i for i in range(m.n_circuits) if mask >> i & 1) for mask in fam.masks}


def test_initial_dependents_u42_all_triples():
    assert seed_indexsets(uniform(4, 2)) == {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_initial_dependents_single_circuit_empty(n):
    assert seed_indexsets(uniform(n + 1, n)) == set()


def test_initial_dependents_triangle_triple():
    assert seed_indexsets(theta(1, 1, 1)) == {(0, 1, 2)}


def test_derived_u42_fixed_point():
    d = derived_matroid(uniform(4, 2))
    assert d.n_elements == 4 and d.n_circuits == 4
    assert isomorphic(d, uniform(4, 2)) is not None


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_derived_single_circuit_is_free_point(n):
    d = derived_matroid(uniform(n + 1, n))
    assert d.n_elements == 1 and d.n_circuits == 0


@pytest.mark.parametrize("pqr", [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 1, 3)])
def test_derived_tricycle_is_u32(pqr):
    d = derived_matroid(theta(*pqr))
    assert isomorphic(d, uniform(3, 2)) is not None


def _naive_derived_circuits(m):
    """Literal construction: full seed family, up-closed elimination rounds
    materialized inside the powerset of the circuit set.  Ranks come from an
    exhaustive subset scan, independent of the library's greedy."""
    circ = m.circuits.masks
    nc = len(circ)

    def exhaustive_rank(vertex_mask):
        n = m.ground.size
        best = 0
        for sub in range(1 << n):
            if sub & ~vertex_mask:
                continue
            if any(c & sub == c for c in circ):
                continue
            best = max(best, sub.bit_count())
        return best

    def nullity(sel):
        union = 0
        for i in range(nc):
            if sel >> i & 1:
                union |= circ[i]
        return union.bit_count() - exhaustive_rank(union)

    fam = {sel for sel in range(1, 1 << nc) if sel.bit_count() > nullity(sel)}
    while True:
        new = set(fam)
        for a in fam:
            for b in fam:
                inter = a & b
                if inter in fam:
                    continue
                bits = inter
                while bits:
                    low = bits & -bits
                    bits ^= low
                    new.add((a | b) & ~low)
        up = {sel for sel in range(1, 1 << nc) if any(g & sel == g for g in new)}
        if up == fam:
            break
        fam = up
    return sorted(
        (a for a in fam if not any(b != a and b & a == b for b in fam)),
        key=lambda x: (x.bit_count(), x),
    )


def test_derived_matches_materialized_construction(census_upto5, named_matroids):
    pool = [m for m in census_upto5 + list(named_matroids) if 1 <= m.n_circuits <= 10]
    for m in pool:
        assert list(derived_matroid(m).circuits.masks) == _naive_derived_circuits(m)


def test_hypergraphical_modes_agree_on_matroids(census_upto5):
    for m in census_upto5:
        if m.n_circuits > 12 or m.n_circuits == 0:
            continue
        h = m.as_hypergraph()
        assert hypergraphical_matroid(h, "edges") == derived_matroid(m)
        assert hypergraphical_matroid(h, "closure") == derived_matroid(m)


def test_hypergraphical_k43_both_modes():
    for mode in ("edges", "closure"):
        d = hypergraphical_matroid(K43, mode)
        assert isomorphic(d, uniform(4, 2)) is not None


def test_hypergraphical_disjoint_edges():
    h = make_hypergraph(None, [["a", "b"], ["c", "d"]])
    d = hypergraphical_matroid(h, "edges")
    assert d.n_elements == 2 and d.n_circuits == 0


def test_hypergraphical_on_non_matroid():
    # path closes to a rank-1 triangle before deriving on its two edges
    path = make_hypergraph(None, [["a", "b"], ["b", "c"]])
    d_edges = hypergraphical_matroid(path, "edges")
    assert d_edges.n_elements == 2
    d_closure = hypergraphical_matroid(path, "closure")
    assert d_closure.n_elements == 3
    assert isomorphic(d_closure, uniform(3, 2)) is not None


def test_derived_respects_direct_sums(census_upto5):
    import random

    rng = random.Random(13)
    pool = [m for m in census_upto5 if 1 <= m.n_circuits <= 6 and m.ground.size <= 4]
    for _ in range(20):
        a = rng.choice(pool)
        b = rng.choice(pool)
        b = relabel(b, {lab: f"r{lab}" for lab in b.ground.labels})
        s = direct_sum([a, b])
        if s.n_circuits > 12:
            continue
        da, db = derived_matroid(a), derived_matroid(b)
        db = relabel(db, {lab: f"D{i}" for i, lab in enumerate(db.ground.labels)})
        assert isomorphic(derived_matroid(s), direct_sum([da, db])) is not None


def test_derived_is_always_simple(census_upto5):
    for m in census_upto5:
        if not 1 <= m.n_circuits <= 10:
            continue
        d = derived_matroid(m)
        assert all(len(c) >= 3 for c in d.circuits)


def test_iterate_u54_fades():
    trace = iterate_derivation(uniform(5, 4))
    assert [s.ground_size for s in trace.steps] == [5, 1, 0]
    assert trace.classification.kind == "fades"


def test_iterate_theta_chain():
    trace = iterate_derivation(theta(2, 2, 2))
    assert [s.ground_size for s in trace.steps] == [6, 3, 1, 0]
    assert trace.classification.kind == "fades"
    assert isomorphic(trace.matroids[1], uniform(3, 2)) is not None
    assert trace.matroids[2].n_elements == 1 and trace.matroids[2].n_circuits == 0
    assert trace.matroids[3].n_elements == 0


def test_iterate_u42_converges():
    trace = iterate_derivation(uniform(4, 2))
    assert trace.classification.kind == "converges"
    assert trace.classification.evidence["step"] == 1
    assert isomorphic(trace.classification.limit, uniform(4, 2)) is not None


def test_iterate_u52_diverges():
    trace = iterate_derivation(uniform(5, 2), max_steps=2)
    assert trace.classification.kind == "diverges"
    assert trace.steps[1].nullity > trace.steps[0].nullity


def test_iterate_budget_exhaustion():
    trace = iterate_derivation(uniform(6, 2), circuit_budget=10)
    assert trace.classification.kind == "budget-exceeded"


def test_iterate_empty_input_fades():
    from hypermatroid import GroundSet, SetFamily

    g = GroundSet([])
    empty = Matroid(g, SetFamily(g, []), _trusted=True)
    trace = iterate_derivation(empty)
    assert trace.classification.kind == "fades"
    assert trace.steps[0].ground_size == 0


def test_classify_closed_forms():
    assert classify_matroid(uniform(6, 5)).kind == "fades"
    assert classify_matroid(uniform(1, 1)).kind == "fades"
    assert classify_matroid(theta(2, 2, 2)).kind == "fades"
    c = classify_matroid(uniform(4, 2))
    assert c.kind == "converges"
    assert isomorphic(c.limit, uniform(4, 2)) is not None
    assert classify_matroid(uniform(5, 2)).kind == "diverges"


def test_classify_series_extension_converges():
    m = series_extend(uniform(4, 2), "e4")
    c = classify_matroid(m)
    assert c.kind == "converges"
    assert isomorphic(c.limit, uniform(4, 2)) is not None


def test_classify_requires_connected():
    from hypermatroid import InvalidParams

    s = direct_sum([uniform(3, 2), relabel(uniform(3, 2), {"e1": "f1", "e2": "f2", "e3": "f3"})])
    with pytest.raises(InvalidParams):
        classify_matroid(s)


def test_classify_agrees_with_iteration(census_upto5):
    for m in census_upto5:
        comps = matroid_components(m)
        if len(comps) != 1 or m.n_circuits > 12:
            continue
        verdict = classify_matroid(m)
        trace = iterate_derivation(m, max_steps=6)
        if trace.classification.kind != "budget-exceeded":
            assert verdict.kind == trace.classification.kind, m


def test_fixed_points_in_census_are_u42(census_upto5, census6):
    hits = []
    for m in census_upto5 + census6:
        if len(matroid_components(m)) != 1:
            continue
        if m.n_circuits != m.n_elements or m.n_circuits > 20:
            continue
        d = derived_matroid(m)
        if d.n_elements == m.n_elements and isomorphic(d, m) is not None:
            hits.append(m)
    assert len(hits) == 1
    assert isomorphic(hits[0], uniform(4, 2)) is not None


def test_no_census_matroid_derives_a_tricycle(census_upto5, census6):
    from hypermatroid import is_tricycle

    for m in census_upto5 + census6:
        if len(matroid_components(m)) != 1:
            continue
        if m.n_circuits <= 12:
            pass
        elif m.n_circuits - m.nullity <= 2 and m.n_circuits <= 20:
            pass  # larger ones can only reach tricycle nullity if this holds
        else:
            continue
        if m.n_circuits == 0:
            continue
        assert not is_tricycle(derived_matroid(m))


def test_a0_witness_u42():
    m = uniform(4, 2)
    w = a0_contains_cycle_witness(m, (0, 1, 2))
    assert w == (0, 1, 2)
    w_all = a0_contains_cycle_witness(m, (0, 1, 2, 3))
    assert len(w_all) == 3
    assert set(w_all) <= {0, 1, 2, 3}


def test_a0_witness_theta():
    m = theta(1, 1, 1)
    assert a0_contains_cycle_witness(m, (0, 1, 2)) == (0, 1, 2)


def test_a0_witness_is_doubly_covering():
    m = uniform(5, 2)
    fam = initial_dependents(m)
    circuit_h = m.as_hypergraph()
    for mask in fam.masks[:10]:
        picked = tuple(i for i in range(m.n_circuits) if mask >> i & 1)
        w = a0_contains_cycle_witness(m, picked)
        assert set(w) <= set(picked)
        assert is_doubly_covering(circuit_h, w)


def test_a0_witness_rejects_non_dependent():
    m = uniform(4, 2)
    with pytest.raises(NotInA0):
        a0_contains_cycle_witness(m, (0, 1))


def test_minimal_seed_dependents_contain_cycles(census_upto5):
    from hypermatroid.cycles import is_matroidal_cycle

    for m in census_upto5:
        if not 1 <= m.n_circuits <= 10:
            continue
        h = m.as_hypergraph()
        for mask in initial_dependents(m).masks:
            picked = tuple(i for i in range(m.n_circuits) if mask >> i & 1)
            witness = a0_contains_cycle_witness(m, picked)
            assert set(witness) <= set(picked)
            assert is_matroidal_cycle(h, witness)


def test_minimal_seed_dependent_need_not_be_a_cycle():
    # a minimal seed dependent can properly contain its cycle: in the
    # graphic matroid of the complete graph on four vertices, a triangle
    # plus the three quadrilaterals is minimally dependent while the three
    # quadrilaterals alone already doubly cover
    from hypermatroid.cycles import is_matroidal_cycle
    from hypermatroid import Matroid

    k4 = make_hypergraph(
        ["12", "13", "14", "23", "24", "34"],
        [
            ["12", "13", "23"], ["12", "14", "24"], ["13", "14", "34"], ["23", "24", "34"],
            ["12", "13", "24", "34"], ["12", "14", "23", "34"], ["13", "14", "23", "24"],
        ],
    )
    m = Matroid.from_circuits(k4.ground, k4.edges)
    seeds = {
        tuple(i for i in range(m.n_circuits) if mask >> i & 1)
        for mask in initial_dependents(m).masks
    }
    non_cycles = [s for s in seeds if not is_matroidal_cycle(m.as_hypergraph(), s)]
    assert non_cycles
    for s in non_cycles:
        w = a0_contains_cycle_witness(m, s)
        assert set(w) < set(s)


def _cycle_seeded_fixpoint(h):
    from hypermatroid.closure import closure_masks
    from hypermatroid.cycles import matroidal_cycles as cycles

    seeds = []
    for cyc in cycles(h):
        mask = 0
        for i in cyc:
            mask |= 1 << i
        seeds.append(mask)
    return closure_masks(tuple(seeds))[0]


def test_cycle_seeding_probe():
    """Empirical status of the alternative seeding by matroidal cycles.

    Seeding the edge-ground fixpoint with the cycles of the hypergraph
    agrees with the nullity seeding on some inputs but not in general, and
    not even for every matroid-as-hypergraph.
    """
    # agreement cases
    for m in (uniform(4, 2), theta(1, 1, 1), theta(2, 2, 2)):
        h = m.as_hypergraph()
        assert _cycle_seeded_fixpoint(h) == hypergraphical_matroid(h, "edges").circuits.masks

    # general hypergraph where the two differ
    h = make_hypergraph(["a", "b"], [["b"], ["a", "b"]])
    assert _cycle_seeded_fixpoint(h) == ()
    assert hypergraphical_matroid(h, "edges").n_circuits == 1

    # graphic matroid of the complete graph on four vertices: differs too
    k4 = make_hypergraph(
        ["12", "13", "14", "23", "24", "34"],
        [
            ["12", "13", "23"], ["12", "14", "24"], ["13", "14", "34"], ["23", "24", "34"],
            ["12", "13", "24", "34"], ["12", "14", "23", "34"], ["13", "14", "23", "24"],
        ],
    )
    assert is_matroid(k4)
    assert _cycle_seeded_fixpoint(k4) != hypergraphical_matroid(k4, "edges").circuits.masks
