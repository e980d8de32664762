import pytest

from thueplane import blocking, embed, gen, verify
from thueplane.blocking import (
    blocking_graph,
    blocking_set_biconnected,
    blocking_set_even,
    blocking_set_even_biconnected,
    blocking_set_even_biconnected_edge,
    blocking_set_even_bridgeless,
    blocking_set_good_size,
    is_bridgeless_cactus,
    validate_blocking_set,
)
from thueplane.embed import ClassMismatchError
from thueplane.words import EXCEPTIONAL_CYCLE_LENGTHS

from conftest import (
    SHOWCASE_BLOCKING_SET,
    fan5,
    polygon,
    showcase_graph,
    two_triangles_bridge,
    two_triangles_shared_vertex,
    wheel,
)


def biconnected_corpus(count, max_n=30, min_n=3):
    for seed in range(count):
        n = min_n + (seed * 13) % (max_n - min_n + 1)
        yield gen.generate(gen.GenSpec("outerplane_biconnected", n, seed))


def cycle_lengths_of(bg):
    return [len(bg.graph.faces[f]) for f in bg.graph.inner_faces()]


# -- validation -----------------------------------------------------------------


def test_showcase_blocking_set_valid():
    G = showcase_graph()
    ok, viol = validate_blocking_set(G, SHOWCASE_BLOCKING_SET)
    assert ok, viol


def test_full_cover_invalid(triangle):
    ok, viol = validate_blocking_set(triangle, {0, 1, 2})
    assert not ok and viol


def test_empty_on_triangle_invalid(triangle):
    ok, viol = validate_blocking_set(triangle, set())
    assert not ok


def test_chord_pair_invalid():
    ok, viol = validate_blocking_set(fan5(), {0, 2})
    assert not ok
    assert any("chord" in v for v in viol)


def test_nonconsecutive_invalid():
    ok, viol = validate_blocking_set(polygon(6), {0, 3})
    assert not ok


# -- one-per-face construction -----------------------------------------------------


def test_triangle_include():
    tri = polygon(3)
    assert blocking_set_biconnected(tri, 0, True) == frozenset({0})


def test_include_and_exclude_respected():
    for G in biconnected_corpus(40, max_n=25):
        for v in (0, G.n // 2):
            B_in = blocking_set_biconnected(G, v, True)
            assert v in B_in
            B_out = blocking_set_biconnected(G, v, False)
            assert v not in B_out
            for B in (B_in, B_out):
                ok, viol = validate_blocking_set(G, B)
                assert ok, viol
                for f in G.inner_faces():
                    assert sum(1 for x in G.face_vertices(f) if x in B) == 1


def test_one_per_face_bounds_size():
    fan = fan5()
    B = blocking_set_biconnected(fan, 1, True)
    assert len(B) <= len(fan.inner_faces())


def test_rejects_non_biconnected():
    with pytest.raises(ClassMismatchError):
        blocking_set_biconnected(two_triangles_shared_vertex(), 0, True)
    with pytest.raises(ClassMismatchError):
        blocking_set_biconnected(wheel(5), 0, True)


# -- even single cycle --------------------------------------------------------------


def test_even_biconnected_single_face():
    tri = polygon(3)
    B = blocking_set_even_biconnected(tri, 0, True)
    assert 0 in B and len(B) == 2
    bg = blocking_graph(tri, B)
    assert cycle_lengths_of(bg) == [2]


def test_even_biconnected_corpus():
    for i, G in enumerate(biconnected_corpus(120, max_n=40)):
        v = i % G.n
        include = i % 2 == 0
        B = blocking_set_even_biconnected(G, v, include)
        assert (v in B) == include
        ok, viol = validate_blocking_set(G, B)
        assert ok, viol
        bg = blocking_graph(G, B)
        lens = cycle_lengths_of(bg)
        assert len(lens) == 1 and lens[0] == len(B) and lens[0] % 2 == 0


def test_even_parity_repair_grows_by_one():
    # whenever the one-per-face set is odd, the even variant adds one vertex
    seen_repair = False
    for i, G in enumerate(biconnected_corpus(80, max_n=30)):
        B1 = blocking_set_biconnected(G, 0, True)
        B2 = blocking_set_even_biconnected(G, 0, True)
        if len(B1) % 2 == 0:
            assert B2 == B1
        else:
            assert len(B2) == len(B1) + 1 and B1 < B2
            seen_repair = True
    assert seen_repair


# -- edge variant -------------------------------------------------------------------


def test_edge_variant_triangle():
    tri = polygon(3)
    B = blocking_set_even_biconnected_edge(tri, 0, 1)
    assert B == frozenset({1, 2})


def test_edge_variant_square():
    sq = polygon(4)
    B = blocking_set_even_biconnected_edge(sq, 0, 1)
    assert 0 not in B and 1 in B and len(B) % 2 == 0
    assert validate_blocking_set(sq, B)[0]


def test_edge_variant_corpus():
    for i, G in enumerate(biconnected_corpus(120, max_n=40)):
        W = embed.outer_walk(G, 0)
        k = i % len(W)
        a, b = W[k], W[(k + 1) % len(W)]
        B = blocking_set_even_biconnected_edge(G, a, b)
        assert a not in B and b in B
        ok, viol = validate_blocking_set(G, B)
        assert ok, viol
        lens = cycle_lengths_of(blocking_graph(G, B))
        assert lens == [len(B)] and len(B) % 2 == 0


def test_edge_variant_rejects_chord():
    fan = fan5()
    with pytest.raises(ClassMismatchError):
        blocking_set_even_biconnected_edge(fan, 0, 2)


# -- bridgeless / general even --------------------------------------------------------


def test_bowtie_even_cycles():
    G = two_triangles_shared_vertex()
    B = blocking_set_even_bridgeless(G)
    assert validate_blocking_set(G, B)[0]
    lens = cycle_lengths_of(blocking_graph(G, B))
    assert lens and all(l % 2 == 0 for l in lens)


def test_even_cycle_two_consecutive():
    c8 = polygon(8)
    B = blocking_set_even_bridgeless(c8)
    assert validate_blocking_set(c8, B)[0]


def test_bridgeless_rejects_bridges():
    with pytest.raises(ClassMismatchError):
        blocking_set_even_bridgeless(two_triangles_bridge())


def test_bridgeless_corpus():
    for seed in range(100):
        n = 3 + (seed * 11) % 40
        G = gen.generate(gen.GenSpec("outerplane_bridgeless", n, seed))
        B = blocking_set_even_bridgeless(G)
        ok, viol = validate_blocking_set(G, B)
        assert ok, viol
        for l in cycle_lengths_of(blocking_graph(G, B)):
            assert l % 2 == 0


def test_tree_has_empty_blocking_set():
    t = gen.generate(gen.GenSpec("tree", 9, 1))
    assert blocking_set_even(t) == frozenset()


def test_bridge_joined_triangles_even():
    G = two_triangles_bridge()
    B = blocking_set_even(G)
    assert validate_blocking_set(G, B)[0]
    for l in cycle_lengths_of(blocking_graph(G, B)):
        assert l % 2 == 0


def test_even_corpus():
    for seed in range(150):
        n = 1 + (seed * 7) % 55
        G = gen.generate(gen.GenSpec("outerplane", n, seed))
        B = blocking_set_even(G)
        ok, viol = validate_blocking_set(G, B)
        assert ok, viol
        if B:
            bg = blocking_graph(G, B)
            assert is_bridgeless_cactus(bg.graph)
            for l in cycle_lengths_of(bg):
                assert l % 2 == 0


def test_even_rejects_multigraph(triangle):
    from conftest import decorate_multigraph

    with pytest.raises(ClassMismatchError):
        blocking_set_even(decorate_multigraph(triangle, parallels=1, loops=0))


# -- size control ----------------------------------------------------------------------


def test_good_size_cycle():
    c9 = polygon(9)
    B = blocking_set_good_size(c9)
    assert len(B) == 2
    assert validate_blocking_set(c9, B)[0]


def test_good_size_corpus():
    for i, G in enumerate(biconnected_corpus(150, max_n=45)):
        B = blocking_set_good_size(G)
        assert len(B) not in EXCEPTIONAL_CYCLE_LENGTHS
        ok, viol = validate_blocking_set(G, B)
        assert ok, viol


def test_good_size_patch_fires_somewhere():
    # some instance must hit the exceptional even sizes and grow by one
    seen_odd = False
    for i, G in enumerate(biconnected_corpus(400, max_n=45)):
        B = blocking_set_good_size(G)
        if len(B) % 2 == 1:
            seen_odd = True
            assert len(B) in (11, 15)
            assert validate_blocking_set(G, B)[0]
            break
    assert seen_odd


# -- blocking graph ----------------------------------------------------------------------


def test_blocking_graph_single_vertex_is_loop(triangle):
    B = blocking_set_biconnected(triangle, 0, True)
    bg = blocking_graph(triangle, B)
    assert bg.graph.n == 1 and len(bg.graph.edges) == 1
    assert bg.graph.edges[0] == (0, 0)


def test_blocking_graph_rejects_invalid(triangle):
    with pytest.raises(ValueError):
        blocking_graph(triangle, {0, 1, 2})


def test_blocking_graph_is_bridgeless_cactus_on_corpus():
    for seed in range(60):
        n = 3 + (seed * 9) % 45
        G = gen.generate(gen.GenSpec("outerplane", n, seed))
        B = blocking_set_even(G)
        if B:
            bg = blocking_graph(G, B)
            assert is_bridgeless_cactus(bg.graph)
            assert sorted(bg.host_vertex) == sorted(B)


def test_showcase_blocking_graph():
    G = showcase_graph()
    bg = blocking_graph(G, SHOWCASE_BLOCKING_SET)
    assert is_bridgeless_cactus(bg.graph)


def _b_subsequences_of_outer_paths(G, B):
    """Subsequences of outer facial paths restricted to B."""
    subs = set()
    for p in verify.facial_paths(G):
        if p.is_outer:
            seq = tuple(x for x in p.vertices if x in B)
            if seq:
                subs.add(seq)
    return subs


def test_outer_path_restriction_is_blocking_graph_path():
    # the B-subsequence of any outer facial path appears as an outer facial
    # path of the blocking graph
    for seed in range(25):
        n = 3 + (seed * 5) % 12
        G = gen.generate(gen.GenSpec("outerplane", n, seed))
        B = blocking_set_even(G)
        if not B:
            continue
        bg = blocking_graph(G, B)
        local = {h: i for i, h in enumerate(bg.host_vertex)}
        outer_paths = {
            p.vertices for p in verify.facial_paths(bg.graph) if p.is_outer
        }
        outer_paths |= {tuple(reversed(p)) for p in outer_paths}
        for seq in _b_subsequences_of_outer_paths(G, B):
            mapped = tuple(local[x] for x in seq)
            assert mapped in outer_paths, (seed, seq)


def test_inner_face_restriction_is_path_and_blocking_graph_facial_path():
    for seed in range(25):
        n = 3 + (seed * 5) % 12
        G = gen.generate(gen.GenSpec("outerplane", n, seed))
        B = blocking_set_even(G)
        if not B:
            continue
        bg = blocking_graph(G, B)
        local = {h: i for i, h in enumerate(bg.host_vertex)}
        all_paths = {p.vertices for p in verify.facial_paths(bg.graph)}
        all_paths |= {tuple(reversed(p)) for p in all_paths}
        for f in G.inner_faces():
            cyc = G.face_vertices(f)
            hits = [x for x in cyc if x in B]
            if not hits:
                continue
            L = len(cyc)
            # rotate so the B-stretch is contiguous, then read it off
            starts = [
                i
                for i in range(L)
                if cyc[i] in B and cyc[(i - 1) % L] not in B
            ]
            assert len(starts) == 1, "B-vertices must be consecutive on the face"
            i = starts[0]
            seq = []
            while cyc[i] in B:
                seq.append(cyc[i])
                i = (i + 1) % L
            assert len(seq) == len(hits)
            mapped = tuple(local[x] for x in seq)
            assert mapped in all_paths, (seed, f, seq)


def test_blocking_graph_json_round_trip():
    G = showcase_graph()
    bg = blocking_graph(G, SHOWCASE_BLOCKING_SET)
    doc = bg.to_json()
    assert doc["host_vertex"] == sorted(SHOWCASE_BLOCKING_SET)
    bg2 = blocking.blocking_graph_from_json(doc)
    assert bg2.graph.edges == bg.graph.edges
    assert bg2.host_vertex == bg.host_vertex
