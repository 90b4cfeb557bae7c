import pytest
from hypothesis import given, settings, strategies as st

from hyperps import build, describe, generate, load, loads
from hyperps.formats import FormatError, dump, dumps, read_results_tsv, write_results_tsv

FIG1_TEXT = "# Fig. 1\n1 2\n1 2 3 4\n\n1 4 5\n3 4\n"


def test_fig1_file(tmp_path, fig1):
    p = tmp_path / "fig1.txt"
    p.write_text(FIG1_TEXT)
    h = load(p)
    assert [he.members for he in h.hyperedges.values()] == [
        he.members for he in fig1.hyperedges.values()
    ]


def test_weight_token():
    h = loads("w=2.5 7 8\n")
    assert h.members(0) == (7, 8) and h.weight(0) == 2.5


def test_explicit_ids():
    h = loads("e=10 1 2\ne=3 w=0.5 2\n")
    assert list(h.hyperedges) == [3, 10] and h.weight(3) == 0.5


@pytest.mark.parametrize("text, line", [
    ("1 2\nw=3\n", 2),
    ("1 x\n", 1),
    ("1 2\n\n1 -3\n", 3),
    ("q=1 2\n", 1),
    ("w=abc 1\n", 1),
    ("1.5 2\n", 1),
])
def test_malformed_lines(text, line):
    with pytest.raises(FormatError) as exc:
        loads(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)


id_lists = st.lists(
    st.lists(st.integers(0, 2**64 - 1), min_size=1, max_size=5, unique=True),
    min_size=1, max_size=8,
)


@settings(max_examples=100, deadline=None)
@given(id_lists, st.data())
def test_roundtrip(lists, data):
    weights = data.draw(st.lists(st.floats(0, 1e6), min_size=len(lists), max_size=len(lists)))
    use_ids = data.draw(st.booleans())
    ids = None
    if use_ids:
        ids = data.draw(st.lists(st.integers(0, 2**64 - 1), min_size=len(lists),
                                 max_size=len(lists), unique=True))
    h = build(list(zip(lists, weights)), ids=ids)
    back = loads(dumps(h))
    assert list(back.hyperedges.values()) == list(h.hyperedges.values())


def test_dump_load_file(tmp_path, fig1):
    p = tmp_path / "h.txt"
    dump(fig1, p)
    assert list(load(p).hyperedges.values()) == list(fig1.hyperedges.values())


def test_results_tsv(tmp_path):
    rows = [("vertex", 1, (0.5,)), ("vertex", 2, (float("inf"),)), ("hyperedge", 0, (3, 0.25))]
    p = write_results_tsv(rows, tmp_path / "r.tsv", ("value", "entropy"))
    assert p.read_text().splitlines()[0] == "kind\tid\tvalue\tentropy"
    assert read_results_tsv(p) == rows


def test_generate_deterministic():
    a = generate(200, 100, seed=3, max_cardinality=8)
    b = generate(200, 100, seed=3, max_cardinality=8)
    c = generate(200, 100, seed=4, max_cardinality=8)
    assert list(a.hyperedges.values()) == list(b.hyperedges.values())
    assert list(a.hyperedges.values()) != list(c.hyperedges.values())


@pytest.mark.parametrize("dist", ["uniform", "powerlaw"])
def test_generate_shape(dist):
    h = generate(500, 300, dist, min_cardinality=2, max_cardinality=12, vertex_skew=1.0, seed=1)
    assert h.num_hyperedges == 300
    assert all(2 <= h.cardinality(e) <= 12 for e in h.hyperedges)
    assert all(0 <= v < 500 for v in h.vertices)
    # skewed vertex choice produces a hub
    assert h.max_degree() > 3 * h.num_bipartite_edges / h.num_vertices


def test_generate_validation():
    with pytest.raises(ValueError):
        generate(5, 3, max_cardinality=6)
    with pytest.raises(ValueError):
        generate(5, 3, "zipf", max_cardinality=2)


def test_describe_fig1(fig1):
    assert describe(fig1, clique=True) == {
        "vertices": 5, "hyperedges": 4, "max_degree": 3, "max_cardinality": 4,
        "bipartite_edges": 11, "clique_edges": 8,
    }
