"""Shared fixtures: hand-built embedded graphs with hand-derived facts."""

import random

import pytest

from thueplane import embed
from thueplane.gen import _Builder


def polygon(n, chords=()):
    b = _Builder()
    v0 = b.new_vertex()
    b.add_polygon_block(v0, n, sorted(chords))
    return b.finish_outerplane()


def fan5():
    """Pentagon 0..4 with apex chords (0,2), (0,3): three inner faces, two
    chords, the two extreme faces are the ears."""
    return polygon(5, [(0, 2), (0, 3)])


def wheel(k):
    """Cycle 0..k-1 plus hub k joined to every rim vertex, hub inside."""
    G = polygon(k)
    f = G.inner_faces()[0]
    walk = G.faces[f]
    verts = G.face_vertices(f)
    base = len(G.edges)
    new_edges = list(G.edges) + [(k, verts[p]) for p in range(k)]
    new_rot = [list(r) for r in G.rotations]
    new_rot.append([2 * (base + t) for t in reversed(range(k))])
    for t in range(k):
        anchor = walk[t]
        rot = new_rot[G.origin[anchor]]
        j = rot.index(anchor)
        rot.insert(j, 2 * (base + t) + 1)
    outer = [G.faces[g][0] for g in G.outer_faces]
    return embed.EmbeddedGraph(k + 1, new_edges, new_rot, tuple(outer))


def two_triangles_shared_vertex():
    b = _Builder()
    b.new_vertex()
    b.add_polygon_block(0, 3, [])
    b.add_polygon_block(2, 3, [])
    return b.finish_outerplane()


def two_triangles_bridge():
    b = _Builder()
    b.new_vertex()
    b.add_polygon_block(0, 3, [])
    v = b.new_vertex()
    b.add_edge(2, v)
    b.add_polygon_block(v, 3, [])
    return b.finish_outerplane()


def showcase_graph():
    """Pentagon block {0..4} with chord (0,2), bridge 4-5, triangle block
    {5,6,7}, pendant 8 on 6.  Hand counts: 3 inner faces, 2 bridges,
    2 blocks; B = {1, 3, 6} is a valid blocking set."""
    b = _Builder()
    b.new_vertex()
    b.add_polygon_block(0, 5, [(0, 2)])
    v5 = b.new_vertex()
    b.add_edge(4, v5)
    b.add_polygon_block(v5, 3, [])
    v8 = b.new_vertex()
    b.add_edge(6, v8)
    return b.finish_outerplane()


SHOWCASE_BLOCKING_SET = frozenset({1, 3, 6})


def path_graph(n):
    edges = [(i, i + 1) for i in range(n - 1)]
    rot = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        rot[u].append(2 * e)
        rot[v].append(2 * e + 1)
    return embed.build(n, edges, rot, 0 if edges else None)


def decorate_multigraph(G, seed=0, parallels=2, loops=1):
    """Add parallel copies (each bounding an empty lens) and empty loops to
    an embedded graph, preserving the embedding and the outer face."""
    rnd = random.Random(seed)
    edges = list(G.edges)
    rot = [list(r) for r in G.rotations]

    for _ in range(parallels):
        if not G.edges:
            break
        e = rnd.randrange(len(G.edges))
        u, v = G.edges[e]
        if u == v:
            continue
        ne = len(edges)
        edges.append((u, v))
        du, dv = G.dart_of(e, u), G.dart_of(e, v)
        rot[u].insert(rot[u].index(du) + 1, 2 * ne)
        rot[v].insert(rot[v].index(dv), 2 * ne + 1)

    for _ in range(loops):
        v = rnd.randrange(G.n)
        ne = len(edges)
        edges.append((v, v))
        pos = rnd.randrange(len(rot[v]) + 1)
        rot[v][pos:pos] = [2 * ne + 1, 2 * ne]

    outer = [G.faces[f][0] for f in G.outer_faces]
    return embed.EmbeddedGraph(G.n, edges, rot, embed._dedup_outer(edges, rot, outer))


@pytest.fixture
def triangle():
    return polygon(3)
