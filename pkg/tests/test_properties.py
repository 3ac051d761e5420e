"""Property suites; runnable on their own with ``pytest tests/test_properties.py``."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from topolab import (
    Graph,
    IndexKind,
    RadicalSum,
    degree_sequence,
    edge_partition,
    index_exact,
    make_complete,
    make_cycle,
    make_path,
    normalize_radical,
    parse_graph,
    relabel,
    serialize_graph,
)
from topolab.ops import corona, join
from topolab.radical import square_free_split

GENERATORS = {"path": (make_path, 1), "cycle": (make_cycle, 3), "complete": (make_complete, 1)}


@st.composite
def standard_graphs(draw, max_n=12):
    name = draw(st.sampled_from(sorted(GENERATORS)))
    maker, lo = GENERATORS[name]
    return maker(draw(st.integers(lo, max_n)))


@st.composite
def random_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


any_graph = st.one_of(standard_graphs(), random_graphs())
kinds = st.sampled_from(list(IndexKind))


def check_valid(g):
    for v, nbrs in enumerate(g.adj):
        assert v not in nbrs
        for u in nbrs:
            assert v in g.adj[u]
    assert sum(degree_sequence(g)) == 2 * g.m


@given(standard_graphs(max_n=30))
def test_generators_valid(g):
    check_valid(g)


@given(any_graph, any_graph)
@settings(max_examples=60)
def test_join_laws(g1, g2):
    g = join(g1, g2)
    check_valid(g)
    assert g.n == g1.n + g2.n
    assert g.m == g1.m + g2.m + g1.n * g2.n
    d = degree_sequence(g)
    assert d[: g1.n] == [x + g2.n for x in degree_sequence(g1)]
    assert d[g1.n:] == [x + g1.n for x in degree_sequence(g2)]


@given(standard_graphs(max_n=8), any_graph)
@settings(max_examples=60)
def test_corona_laws(g, h):
    c = corona(g, h)
    check_valid(c)
    assert c.n == g.n * (1 + h.n)
    assert c.m == g.m + g.n * h.m + g.n * h.n
    d = degree_sequence(c)
    assert d[: g.n] == [x + h.n for x in degree_sequence(g)]
    assert d[g.n:] == [x + 1 for x in degree_sequence(h)] * g.n


@given(any_graph)
def test_serialize_roundtrip(g):
    assert parse_graph(serialize_graph(g)) == g


@given(any_graph, any_graph)
@settings(max_examples=40)
def test_product_roundtrip(g1, g2):
    for g in (join(g1, g2), corona(g1, g2)):
        assert parse_graph(serialize_graph(g)) == g


@given(any_graph, kinds, st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_label_invariance(g, kind, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert index_exact(relabel(g, perm), kind) == index_exact(g, kind)


@given(any_graph, any_graph, kinds)
@settings(max_examples=40)
def test_join_commutes_on_index_values(g1, g2, kind):
    a, b = join(g1, g2), join(g2, g1)
    assert sorted(degree_sequence(a)) == sorted(degree_sequence(b))
    assert index_exact(a, kind) == index_exact(b, kind)


@given(any_graph)
def test_partition_sums_to_size(g):
    assert sum(edge_partition(g).values()) == g.m


@given(st.sampled_from(["cycle", "complete"]), st.integers(3, 50))
def test_regular_graph_laws(name, n):
    g = GENERATORS[name][0](n)
    k, m = g.degree(0), g.m
    assert index_exact(g, IndexKind.ESO) == RadicalSum({2: 2 * m * k * k})
    assert index_exact(g, IndexKind.EU) == RadicalSum({3: m * k})


fractions_ = st.fractions(min_value=-50, max_value=50, max_denominator=20)
radicands = st.integers(1, 5000)
radsums = st.dictionaries(radicands, fractions_, max_size=5).map(RadicalSum)


@given(fractions_, radicands)
def test_normalize_idempotent(q, n):
    once = normalize_radical(q, n)
    assert normalize_radical(once.coef, once.radicand) == once
    r = once.radicand
    assert all(r % (p * p) for p in range(2, int(r ** 0.5) + 1))
    k, rest = square_free_split(n)
    assert k * k * rest == n


@given(radsums, radsums, radsums)
def test_vector_space_addition(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + RadicalSum() == a
    assert a - a == RadicalSum()


@given(radsums, radsums, fractions_, fractions_)
def test_vector_space_scaling(a, b, p, q):
    assert (a + b) * p == a * p + b * p
    assert a * (p + q) == a * p + a * q
    assert (a * p) * q == a * (p * q)
    assert a * Fraction(1) == a


@given(radsums)
def test_to_float_matches_termwise(a):
    expected = sum(float(q) * n ** 0.5 for n, q in a.terms.items())
    scale = max([1.0] + [abs(float(q)) * n ** 0.5 for n, q in a.terms.items()])
    assert abs(float(a) - expected) <= 1e-12 * scale
