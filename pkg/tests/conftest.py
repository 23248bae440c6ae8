import random

import pytest

from hypermatroid import make_hypergraph, matroidal_closure, theta, uniform
from hypermatroid.reference import census_matroids

CORPUS_SEED = 20260810
CORPUS_SIZE = 500


def random_hypergraph(rng, max_vertices=8, max_edges=12):
    n = rng.randint(1, max_vertices)
    labels = [chr(97 + i) for i in range(n)]
    k = rng.randint(0, max_edges)
    edges = set()
    for _ in range(k):
        size = rng.randint(1, n)
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return make_hypergraph(labels, [[labels[i] for i in e] for e in edges])


@pytest.fixture(scope="session")
def corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_hypergraph(rng) for _ in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def closure_corpus(corpus):
    """Closure matroids of the random corpus, deduplicated by circuit family."""
    seen = set()
    out = []
    for h in corpus:
        m, _ = matroidal_closure(h)
        key = (m.ground.labels, m.circuits.masks)
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


@pytest.fixture(scope="session")
def named_matroids():
    ms = [uniform(n + 1, n) for n in range(1, 6)]
    ms += [uniform(4, 2), uniform(5, 2), uniform(5, 3), uniform(4, 1), uniform(3, 3)]
    ms += [theta(p, q, r) for p in (1, 2, 3) for q in (1, 2, 3) for r in (1, 2, 3) if p <= q <= r]
    return ms


@pytest.fixture(scope="session")
def census_upto5():
    return [m for n in range(0, 6) for m in census_matroids(n)]


@pytest.fixture(scope="session")
def census6():
    return census_matroids(6)
