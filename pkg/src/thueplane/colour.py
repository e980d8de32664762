"""Facial nonrepetitive colouring pipelines.

Bounds produced here: even cacti get at most 7 colours, outerplane graphs
at most 11 (4 tree colours + 7 cactus colours for the blocking graph),
outerplane graphs with a single 2-connected component at most 7, and plane
graphs at most 22 via the peeling layering (11 per layer parity).  Every
pipeline verifies its own output before returning it; a verification
failure signals a bug, never a valid outcome.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from thueplane import blocking, embed, verify
from thueplane.embed import ClassMismatchError
from thueplane.words import (
    EXCEPTIONAL_CYCLE_LENGTHS,
    bfs_levels,
    cycle_colouring,
    palindrome_free_nonrepetitive,
    ternary_nonrepetitive,
    tree_colouring,
)


class VerificationBugError(RuntimeError):
    """A pipeline produced a colouring its own verifier rejects."""


@dataclass(frozen=True)
class Colouring:
    colours: tuple  # vertex id -> colour in 1..palette_max
    palette_max: int
    verified: bool = True

    def distinct_colours(self):
        return len(set(self.colours))

    def to_json(self):
        return {
            "colours": list(self.colours),
            "palette_max": self.palette_max,
            "verified": self.verified,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def colouring_from_json(doc):
    try:
        return Colouring(tuple(doc["colours"]), int(doc["palette_max"]), bool(doc.get("verified", False)))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed colouring document: {exc}") from exc


@dataclass(frozen=True)
class PeelingLayering:
    layer: tuple  # vertex id -> layer index

    def layer_sets(self):
        if not self.layer:
            return []
        out = [[] for _ in range(max(self.layer) + 1)]
        for v, i in enumerate(self.layer):
            out[i].append(v)
        return [tuple(s) for s in out]


def _checked(G, colours, palette_max):
    bad = verify.verify_facial_nonrepetitive(G, colours)
    if bad is not None:
        raise VerificationBugError(
            f"pipeline colouring failed verification on face {bad.face}: {bad.vertices}"
        )
    return Colouring(tuple(colours), palette_max)


# -- even cacti ---------------------------------------------------------------


def _component_adjacency(G, comp):
    local = {x: i for i, x in enumerate(comp)}
    adj = [[] for _ in comp]
    for x in comp:
        for w in sorted(G.neighbours(x)):
            adj[local[x]].append(local[w])
    return local, adj


def _colour_tree_component(G, comp, colours):
    local, adj = _component_adjacency(G, comp)
    cols = tree_colouring(adj, root=0, palette=(1, 2, 3, 4))
    for x in comp:
        colours[x] = cols[local[x]]


def _colour_cycle_component(G, comp, cid, colours):
    W = embed.outer_walk(G, cid)
    word = cycle_colouring(len(W))
    for i, x in enumerate(W):
        colours[x] = word[i] + 1


def _distinct_segment_edges(W, members):
    """Edges of the auxiliary graph on ``members``: one edge per pair of
    cyclically consecutive member occurrences of the walk W whose connecting
    walk segment is a path (all vertices distinct), i.e. an outer facial
    path free of other members."""
    L = len(W)
    occ = [i for i in range(L) if W[i] in members]
    m = len(occ)
    edges = []
    if m <= 1:
        return edges
    for j in range(m):
        i0, i1 = occ[j], occ[(j + 1) % m]
        seg = [W[i0]]
        k = i0
        while k != i1:
            k = (k + 1) % L
            seg.append(W[k])
        if len(set(seg)) == len(seg):
            edges.append((W[i0], W[i1]))
    return edges


def _colour_cactus_component(G, comp, cid, colours):
    """Colour one cactus component; returns the internals (deepest-vertex
    set and levelling) so tests can probe the construction."""
    local = {x: i for i, x in enumerate(comp)}
    degs = {x: G.degree(x) for x in comp}
    n_edges = sum(degs.values()) // 2

    if n_edges == len(comp) - 1:
        _colour_tree_component(G, comp, colours)
        return set(), {}
    if all(d == 2 for d in degs.values()) and n_edges == len(comp):
        _colour_cycle_component(G, comp, cid, colours)
        return set(), {}

    # root: a degree-1 vertex if any, else a vertex of degree >= 3
    deg1 = [x for x in comp if degs[x] == 1]
    root = min(deg1) if deg1 else min(x for x in comp if degs[x] >= 3)

    _, adj = _component_adjacency(G, comp)
    lev_local = bfs_levels(adj, local[root])
    lam = {x: lev_local[local[x]] for x in comp}

    comp_faces = [
        f for f in G.inner_faces() if G.comp_of[G.origin[G.faces[f][0]]] == cid
    ]

    H = set()
    for f in comp_faces:
        cyc = G.face_vertices(f)
        deepest = max(cyc, key=lambda x: (lam[x], x))
        others = [x for x in cyc if x != deepest]
        if all(lam[x] < lam[deepest] for x in others) and degs[deepest] == 2:
            H.add(deepest)

    if degs[root] != 1 and len(H) in EXCEPTIONAL_CYCLE_LENGTHS:
        stars = [
            f for f in comp_faces
            if sum(1 for x in G.face_vertices(f) if degs[x] > 2) == 1
        ]
        if not stars:
            raise VerificationBugError("no single-attachment face in a rooted even cactus")
        fstar = min(stars)
        cyc = G.face_vertices(fstar)
        b = max(cyc, key=lambda x: (lam[x], x))
        i = cyc.index(b)
        nb1, nb2 = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        patch_count = len(H)
        H.add(min(nb1, nb2))
        if patch_count == 9:
            H.add(max(nb1, nb2))

    if H:
        W = embed.outer_walk(G, cid)
        h_edges = _distinct_segment_edges(W, H)
        h_adj = {x: [] for x in H}
        for u, w in h_edges:
            h_adj[u].append(w)
            h_adj[w].append(u)
        if any(len(nb) > 2 for nb in h_adj.values()):
            raise VerificationBugError("auxiliary deepest-vertex graph is not paths/cycle")
        seen = set()
        for x0 in sorted(H):
            if x0 in seen:
                continue
            compH = _trace_h_component(h_adj, x0)
            seen.update(compH["vertices"])
            if compH["cycle"]:
                order = compH["order"]
                m = len(order)
                word = (0, 1) if m == 2 else cycle_colouring(m)
                if len(set(word)) > 3:
                    raise VerificationBugError("auxiliary cycle needed four symbols")
                for i, x in enumerate(order):
                    colours[x] = word[i] + 1
            else:
                order = compH["order"]
                word = ternary_nonrepetitive(len(order))
                for i, x in enumerate(order):
                    colours[x] = word[i] + 1

    word = palindrome_free_nonrepetitive(max(lam.values()) + 1)
    for x in comp:
        if x not in H:
            colours[x] = 4 + word[lam[x]]
    return H, lam


def _trace_h_component(h_adj, x0):
    """Walk a path or cycle component of the auxiliary graph from x0."""
    comp = {x0}
    frontier = [x0]
    while frontier:
        x = frontier.pop()
        for y in h_adj[x]:
            if y not in comp:
                comp.add(y)
                frontier.append(y)
    deg_ends = [x for x in sorted(comp) if len(h_adj[x]) <= 1]
    edge_count = sum(len(h_adj[x]) for x in comp) // 2
    is_cycle = not deg_ends and edge_count >= len(comp)
    if is_cycle:
        start = min(comp)
        order = [start]
        prev = None
        cur = start
        while True:
            nxts = [y for y in h_adj[cur] if y != prev] or h_adj[cur][:1]
            nxt = nxts[0]
            if nxt == start:
                break
            order.append(nxt)
            prev, cur = cur, nxt
        return {"vertices": comp, "cycle": True, "order": order}
    start = deg_ends[0] if deg_ends else min(comp)
    order = [start]
    prev = None
    cur = start
    while True:
        nxts = [y for y in h_adj[cur] if y != prev]
        if not nxts:
            break
        order.append(nxts[0])
        prev, cur = cur, nxts[0]
    return {"vertices": comp, "cycle": False, "order": order}


def colour_cactus_even(G):
    """Facially nonrepetitive colouring of a cactus whose cycles are all
    even, over at most 7 colours: deepest degree-2 vertices of the cycles
    (plus the exceptional-length patch) over {1,2,3}, everything else by
    breadth-first level through a palindrome-free word over {4,5,6,7}."""
    if not embed.is_outerplane(G):
        raise ClassMismatchError("input is not a cactus (not outerplane)")
    Gs, _ = embed.simplify(G)
    if embed.chords(Gs):
        raise ClassMismatchError("input is not a cactus (it has chords)")
    for f in Gs.inner_faces():
        if len(Gs.faces[f]) % 2 == 1:
            raise ClassMismatchError("cactus has an odd cycle")

    colours = [None] * Gs.n
    for cid, comp in enumerate(Gs.components):
        _colour_cactus_component(Gs, comp, cid, colours)
    return _checked(G, colours, 7)


# -- outerplane ---------------------------------------------------------------


def _colour_forest(G, rest, colours, palette=(1, 2, 3, 4)):
    """Tree-colour every component of G[rest] (each must be a tree)."""
    rest = sorted(rest)
    rest_set = set(rest)
    seen = set()
    for x0 in rest:
        if x0 in seen:
            continue
        comp = [x0]
        seen.add(x0)
        qi = 0
        while qi < len(comp):
            x = comp[qi]
            qi += 1
            for w in G.neighbours(x):
                if w in rest_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
        comp = sorted(comp)
        local = {x: i for i, x in enumerate(comp)}
        adj = [[] for _ in comp]
        for x in comp:
            for w in sorted(G.neighbours(x)):
                if w in rest_set:
                    adj[local[x]].append(local[w])
        cols = tree_colouring(adj, root=0, palette=palette)
        for x in comp:
            colours[x] = cols[local[x]]


def _colour_outerplane_core(G):
    """Colour values over {1..11} for a (multigraph) outerplane input;
    verification is the caller's job."""
    Gs, _ = embed.simplify(G)
    colours = [None] * Gs.n
    B = blocking.blocking_set_even(Gs)
    if B:
        bg = blocking.blocking_graph(Gs, B)
        sub = colour_cactus_even(bg.graph)
        for i, host in enumerate(bg.host_vertex):
            colours[host] = 4 + sub.colours[i]
    _colour_forest(Gs, [x for x in range(Gs.n) if x not in B], colours)
    return colours


def colour_outerplane(G):
    """Facially nonrepetitive colouring of an outerplane multigraph with at
    most 11 colours: an even blocking set's blocking graph is cactus-coloured
    over {5..11} and the remaining forest over {1..4}."""
    if not embed.is_outerplane(G):
        raise ClassMismatchError("input is not outerplane")
    return _checked(G, _colour_outerplane_core(G), 11)


def colour_outerplane_single_block(G):
    """At most 7 colours for an outerplane graph with at most one
    2-connected component: a blocking set of non-exceptional size makes the
    blocking cycle 3-colourable over {5,6,7}; trees take {1,2,3,4}."""
    if not embed.is_outerplane(G):
        raise ClassMismatchError("input is not outerplane")
    Gs, _ = embed.simplify(G)
    blocks = embed.biconnected_components(Gs)
    if len(blocks) > 1:
        raise ClassMismatchError("graph has more than one 2-connected component")

    colours = [None] * Gs.n
    if blocks:
        vs = blocks[0]
        sub, vmap = embed.induced_embedded_subgraph(Gs, vs)
        back = {vmap[x]: x for x in vs}
        B = frozenset(back[x] for x in blocking.blocking_set_good_size(sub))
        bg = blocking.blocking_graph(Gs, B)
        core, _ = embed.simplify(bg.graph)
        if len(core.edges) == 1:
            u, w = core.edges[0]
            local_cols = {u: 5, w: 6}
        else:
            W = embed.outer_walk(core, 0)
            word = cycle_colouring(len(W))
            if len(set(word)) > 3:
                raise VerificationBugError("blocking cycle required four symbols")
            local_cols = {x: word[i] + 5 for i, x in enumerate(W)}
        for i, host in enumerate(bg.host_vertex):
            colours[host] = local_cols[i]
        rest = [x for x in range(Gs.n) if x not in B]
    else:
        rest = list(range(Gs.n))
    _colour_forest(Gs, rest, colours)
    return _checked(G, colours, 7)


# -- plane graphs -------------------------------------------------------------


def _peel(G):
    """Iterated outer-vertex removal.  Yields per round the original-id
    vertex set, the embedded layer graph and its local->original map; the
    outer face of each intermediate graph is the face that absorbed the
    removed material."""
    cur = G
    cur_ids = list(range(G.n))
    rounds = []
    while cur.n > 0:
        vi = set()
        for cid in range(len(cur.components)):
            f = cur.outer_face_of_component(cid)
            if f is None:
                vi.update(cur.components[cid])
            else:
                vi.update(cur.face_vertices(f))
        layer_graph, lmap = embed.induced_embedded_subgraph(cur, sorted(vi))
        layer_ids = [cur_ids[x] for x in range(cur.n) if lmap[x] != -1]
        rounds.append((sorted(cur_ids[x] for x in vi), layer_graph, layer_ids))

        rest = [x for x in range(cur.n) if x not in vi]
        if not rest:
            break
        keep, new_edges, new_rot, _vmap, dart_map = embed._induced(cur, rest)
        outer_cands = []
        for f in range(len(cur.faces)):
            verts = cur.face_vertices(f)
            if any(x in vi for x in verts):
                outer_cands.extend(dart_map[d] for d in cur.faces[f] if dart_map[d] != -1)
        nxt = embed.EmbeddedGraph(
            len(keep), new_edges, new_rot, embed._dedup_outer(new_edges, new_rot, outer_cands)
        )
        cur_ids = [cur_ids[x] for x in keep]
        cur = nxt
    return rounds


def peeling_layering(G):
    """Layer index per vertex: layer 0 holds the outer-face vertices, layer
    i the outer-face vertices once layers below are removed."""
    layer = [0] * G.n
    for i, (orig_ids, _g, _m) in enumerate(_peel(G)):
        for x in orig_ids:
            layer[x] = i
    return PeelingLayering(tuple(layer))


def augment_plus(G):
    """Add, inside every inner face, an edge between each pair of cyclically
    consecutive same-layer occurrences of the face walk (the lower of the
    two layers the walk touches).  The layer sets are unchanged and each
    layer's induced subgraph becomes outerplane."""
    layer = peeling_layering(G).layer
    new_edges = list(G.edges)
    # darts are inserted at a face corner just before the corner's walk
    # dart; each corner takes its occurrence's incoming dart then outgoing
    corner_in = {}
    corner_out = {}

    for f in sorted(G.inner_faces()):
        walk = G.faces[f]
        verts = G.face_vertices(f)
        L = len(verts)
        lmin = min(layer[x] for x in verts)
        if any(layer[x] not in (lmin, lmin + 1) for x in verts):
            raise VerificationBugError("inner face spans more than two peeling layers")
        occ = [i for i in range(L) if layer[verts[i]] == lmin]
        m = len(occ)
        if m < 2:
            continue
        for j in range(m):
            p, q = occ[j], occ[(j + 1) % m]
            u, w = verts[p], verts[q]
            if u == w:
                continue
            e = len(new_edges)
            new_edges.append((u, w))
            corner_out[walk[p]] = 2 * e
            corner_in[walk[q]] = 2 * e + 1

    new_rot = [list(r) for r in G.rotations]
    for anchor in sorted(set(corner_in) | set(corner_out)):
        ds = []
        if anchor in corner_in:
            ds.append(corner_in[anchor])
        if anchor in corner_out:
            ds.append(corner_out[anchor])
        rot = new_rot[G.origin[anchor]]
        j = rot.index(anchor)
        rot[j:j] = ds

    outer = [G.faces[f][0] for f in G.outer_faces]
    return embed.EmbeddedGraph(G.n, new_edges, new_rot, embed._dedup_outer(new_edges, new_rot, outer))


def colour_plane(G):
    """Facially nonrepetitive colouring of any plane graph with at most 22
    colours: augment, peel into layers, colour each layer's outerplane graph
    with {1..11} on even layers and {12..22} on odd ones."""
    Gp = augment_plus(G)
    base_layers = peeling_layering(G).layer
    colours = [None] * G.n
    for i, (orig_ids, layer_graph, layer_ids) in enumerate(_peel(Gp)):
        if any(base_layers[x] != i for x in orig_ids):
            raise VerificationBugError("augmentation changed the peeling layering")
        if not embed.is_outerplane(layer_graph):
            raise VerificationBugError("peeled layer graph is not outerplane")
        vals = _colour_outerplane_core(layer_graph)
        bad = verify.verify_facial_nonrepetitive(layer_graph, vals)
        if bad is not None:
            raise VerificationBugError("layer colouring failed verification")
        base = 0 if i % 2 == 0 else 11
        for local, orig in enumerate(layer_ids):
            colours[orig] = base + vals[local]
    return _checked(G, colours, 22)


# -- proof-shaped helpers ------------------------------------------------------


def interleave_check_decomposition(P, B):
    """Split a vertex sequence into the alternating form
    A_0, B_1, A_1, ..., B_k, A_k with the B_i the maximal runs inside B and
    the A_i (possibly empty) runs outside it."""
    B = set(B)
    blocks = [()]
    in_b = False
    for v in P:
        if (v in B) == in_b:
            blocks[-1] = blocks[-1] + (v,)
        else:
            in_b = not in_b
            blocks.append((v,))
    if in_b:
        blocks.append(())
    return blocks
