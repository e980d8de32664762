"""Seeded random and exhaustive generators of embedded test instances.

Every generator is correct by construction (no planarity testing): polygons
with non-crossing chords, feature gluing along the outer face, and
face-interior vertex insertion all maintain an explicit rotation system.
Outputs are validated against their class predicate before being returned;
a predicate failure is a generator bug, not a caller error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from thueplane import embed

KINDS = (
    "tree",
    "cycle",
    "cactus_even",
    "outerplane",
    "outerplane_biconnected",
    "outerplane_bridgeless",
    "plane",
)


class GenerationError(RuntimeError):
    """A generated instance failed its own class predicate (a bug)."""


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int = 0
    chord_probability: float = 0.5
    attachment_probability: float = 0.35

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        for p in (self.chord_probability, self.attachment_probability):
            if not (0.0 <= p <= 1.0):
                raise ValueError("probabilities must lie in [0, 1]")


def _rng(spec):
    return random.Random(f"{spec.kind}:{spec.n}:{spec.seed}")


# -- incremental outerplane builder -------------------------------------------


class _Builder:
    """Edges plus mutable rotations; features attached at a vertex append
    their darts as one contiguous run, which keeps the union outerplane."""

    def __init__(self):
        self.edges = []
        self.rot = []

    def new_vertex(self):
        self.rot.append([])
        return len(self.rot) - 1

    def add_edge(self, u, v):
        e = len(self.edges)
        self.edges.append((u, v))
        self.rot[u].append(2 * e)
        self.rot[v].append(2 * e + 1)
        return e

    def add_polygon_block(self, anchor, size, chord_pairs):
        """Polygon of ``size`` vertices using ``anchor`` as local vertex 0;
        chord_pairs are local index pairs.  Returns the local->global ids."""
        ids = [anchor] + [self.new_vertex() for _ in range(size - 1)]
        incident = {i: [] for i in range(size)}
        base = len(self.edges)
        for i in range(size):
            j = (i + 1) % size
            e = len(self.edges)
            self.edges.append((ids[i], ids[j]))
            incident[i].append((j, 2 * e))
            incident[j].append((i, 2 * e + 1))
        for a, b in chord_pairs:
            e = len(self.edges)
            self.edges.append((ids[a], ids[b]))
            incident[a].append((b, 2 * e))
            incident[b].append((a, 2 * e + 1))
        for i in range(size):
            incident[i].sort(key=lambda t: (t[0] - i) % size)
            self.rot[ids[i]].extend(d for _, d in incident[i])
        return ids

    def finish_outerplane(self):
        """Designate the face witnessing outerplanarity as outer."""
        g0 = embed.EmbeddedGraph(len(self.rot), self.edges, self.rot, ())
        want = {v for v in range(g0.n) if g0.rotations[v]}
        if not want:
            return embed.EmbeddedGraph(len(self.rot), self.edges, self.rot, ())
        for f, walk in enumerate(g0.faces):
            if {g0.origin[d] for d in walk} == want:
                return embed.EmbeddedGraph(len(self.rot), self.edges, self.rot, (walk[0],))
        raise GenerationError("construction lost outerplanarity")


def _triangulation_chords(size, rng):
    """Chord set (local index pairs) of a uniformly random triangulation of
    a convex polygon, via a uniformly random binary tree (leaf insertion)."""
    k = size - 1  # leaves <-> polygon sides other than the base (0, size-1)
    if k < 2:
        return []
    left = [-1]
    right = [-1]
    parent = [-1]
    root = 0
    for _ in range(k - 1):
        x = rng.randrange(len(left))
        side = rng.randrange(2)
        internal = len(left)
        leaf = internal + 1
        left.extend([0, -1])
        right.extend([0, -1])
        parent.extend([parent[x], internal])
        p = parent[x]
        if p == -1:
            root = internal
        elif left[p] == x:
            left[p] = internal
        else:
            right[p] = internal
        parent[x] = internal
        if side == 0:
            left[internal], right[internal] = x, leaf
        else:
            left[internal], right[internal] = leaf, x

    # in-order leaf ranks give boundary sides; spans of internal nodes give
    # triangulation diagonals
    span = {}
    chords = []
    next_leaf = [0]
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if left[node] == -1:
            i = next_leaf[0]
            next_leaf[0] += 1
            span[node] = (i, i + 1)
            continue
        if not done:
            stack.append((node, True))
            stack.append((right[node], False))
            stack.append((left[node], False))
        else:
            lo = span[left[node]][0]
            hi = span[right[node]][1]
            span[node] = (lo, hi)
            if node != root:
                chords.append((lo, hi))
    return chords


def _thinned_block_chords(size, rng, chord_p):
    return sorted(c for c in _triangulation_chords(size, rng) if rng.random() < chord_p)


def _gen_cycle(spec):
    if spec.n < 3:
        raise ValueError("cycles need at least 3 vertices")
    b = _Builder()
    v0 = b.new_vertex()
    b.add_polygon_block(v0, spec.n, [])
    return b.finish_outerplane()


def _gen_tree(spec, rng=None):
    rng = rng or _rng(spec)
    b = _Builder()
    b.new_vertex()
    for v in range(1, spec.n):
        b.new_vertex()
        b.add_edge(rng.randrange(v), v)
    return b.finish_outerplane()


def _gen_outerplane_biconnected(spec, rng=None):
    if spec.n < 3:
        raise ValueError("biconnected graphs need at least 3 vertices")
    rng = rng or _rng(spec)
    b = _Builder()
    v0 = b.new_vertex()
    b.add_polygon_block(v0, spec.n, _thinned_block_chords(spec.n, rng, spec.chord_probability))
    return b.finish_outerplane()


def _block_size(rng, budget, lo=3, hi=12, avoid_remainder_one=False):
    """Pick a block size whose glue cost (size - 1) fits the budget."""
    hi = min(hi, budget + 1)
    choices = list(range(lo, hi + 1))
    if avoid_remainder_one:
        choices = [m for m in choices if budget - (m - 1) != 1]
    return rng.choice(choices) if choices else None


def _gen_outerplane_bridgeless(spec, rng=None):
    if spec.n == 2:
        raise ValueError("no simple bridgeless outerplane graph on 2 vertices")
    rng = rng or _rng(spec)
    b = _Builder()
    v0 = b.new_vertex()
    if spec.n == 1:
        return b.finish_outerplane()
    hi = min(spec.n, 12)
    choices = [m for m in range(3, hi + 1) if spec.n - m != 1] or [spec.n]
    first = rng.choice(choices)
    b.add_polygon_block(v0, first, _thinned_block_chords(first, rng, spec.chord_probability))
    budget = spec.n - first
    while budget > 0:
        m = _block_size(rng, budget, avoid_remainder_one=True)
        if m is None:
            raise GenerationError("block budgeting failed")
        anchor = rng.randrange(len(b.rot))
        b.add_polygon_block(anchor, m, _thinned_block_chords(m, rng, spec.chord_probability))
        budget -= m - 1
    return b.finish_outerplane()


def _gen_cactus_even(spec, rng=None):
    rng = rng or _rng(spec)
    b = _Builder()
    b.new_vertex()
    budget = spec.n - 1
    while budget > 0:
        cyc_lengths = [m for m in (4, 6, 8, 10) if m - 1 <= budget]
        if cyc_lengths and rng.random() > spec.attachment_probability:
            m = rng.choice(cyc_lengths)
            anchor = rng.randrange(len(b.rot))
            b.add_polygon_block(anchor, m, [])
            budget -= m - 1
        else:
            b.new_vertex()
            b.add_edge(rng.randrange(len(b.rot) - 1), len(b.rot) - 1)
            budget -= 1
    return b.finish_outerplane()


def _gen_outerplane(spec, rng=None):
    rng = rng or _rng(spec)
    b = _Builder()
    b.new_vertex()
    budget = spec.n - 1
    while budget > 0:
        m = _block_size(rng, budget) if budget >= 2 else None
        if m is not None and rng.random() > spec.attachment_probability:
            chords_ = _thinned_block_chords(m, rng, spec.chord_probability)
            if budget >= m and rng.random() < 0.5:
                base = b.new_vertex()
                b.add_edge(rng.randrange(len(b.rot) - 1), base)
                b.add_polygon_block(base, m, chords_)
                budget -= m
            else:
                anchor = rng.randrange(len(b.rot))
                b.add_polygon_block(anchor, m, chords_)
                budget -= m - 1
        else:
            b.new_vertex()
            b.add_edge(rng.randrange(len(b.rot) - 1), len(b.rot) - 1)
            budget -= 1
    return b.finish_outerplane()


def _gen_plane(spec, rng=None):
    rng = rng or _rng(spec)
    b = _Builder()
    v0 = b.new_vertex()
    if spec.n == 1:
        return b.finish_outerplane()
    if spec.n == 2:
        b.new_vertex()
        b.add_edge(0, 1)
        return b.finish_outerplane()
    b.add_polygon_block(v0, 3, [])
    G = b.finish_outerplane()
    while G.n < spec.n:
        inner = G.inner_faces()
        f = inner[rng.randrange(len(inner))]
        walk = G.faces[f]
        verts = G.face_vertices(f)
        first_occ = []
        seen = set()
        for i, x in enumerate(verts):
            if x not in seen:
                seen.add(x)
                first_occ.append(i)
        dv = len(first_occ)
        k = rng.randint(2, dv)
        s = rng.randrange(dv)
        corners = sorted(first_occ[(s + t) % dv] for t in range(k))

        z = G.n
        new_edges = list(G.edges) + [(z, verts[p]) for p in corners]
        base = len(G.edges)
        new_rot = [list(r) for r in G.rotations]
        new_rot.append([2 * (base + t) for t in reversed(range(k))])
        for t, p in enumerate(corners):
            anchor = walk[p]
            rot = new_rot[G.origin[anchor]]
            j = rot.index(anchor)
            rot.insert(j, 2 * (base + t) + 1)
        outer = [G.faces[g][0] for g in G.outer_faces]
        G = embed.EmbeddedGraph(G.n + 1, new_edges, new_rot, tuple(outer))
    return G


# -- public entry points -------------------------------------------------------


def _check_class(spec, G):
    kind = spec.kind
    if G.n != spec.n:
        raise GenerationError(f"generated {G.n} vertices instead of {spec.n}")
    simple_ok = all(u != v for u, v in G.edges) and len(
        {(min(u, v), max(u, v)) for u, v in G.edges}
    ) == len(G.edges)
    if not simple_ok:
        raise GenerationError("generator emitted loops or parallel edges")
    if kind == "plane":
        return
    if not embed.is_outerplane(G):
        raise GenerationError("instance is not outerplane")
    if kind == "tree":
        if len(G.edges) != spec.n - 1 or len(G.components) != 1:
            raise GenerationError("instance is not a tree")
    elif kind == "cycle":
        if not all(G.degree(v) == 2 for v in range(G.n)) or len(G.components) != 1:
            raise GenerationError("instance is not a cycle")
    elif kind == "cactus_even":
        if embed.chords(G):
            raise GenerationError("cactus has chords")
        if any(len(G.faces[f]) % 2 for f in G.inner_faces()):
            raise GenerationError("cactus has an odd cycle")
    elif kind == "outerplane_biconnected":
        blocks = embed.biconnected_components(G)
        if len(blocks) != 1 or len(blocks[0]) != G.n:
            raise GenerationError("instance is not biconnected")
    elif kind == "outerplane_bridgeless":
        if embed.bridges(G):
            raise GenerationError("instance has a bridge")


def generate(spec):
    """Deterministic instance of the requested class; same spec, same bytes."""
    rng = _rng(spec)
    if spec.kind == "tree":
        G = _gen_tree(spec, rng)
    elif spec.kind == "cycle":
        G = _gen_cycle(spec)
    elif spec.kind == "cactus_even":
        G = _gen_cactus_even(spec, rng)
    elif spec.kind == "outerplane":
        G = _gen_outerplane(spec, rng)
    elif spec.kind == "outerplane_biconnected":
        G = _gen_outerplane_biconnected(spec, rng)
    elif spec.kind == "outerplane_bridgeless":
        G = _gen_outerplane_bridgeless(spec, rng)
    elif spec.kind == "plane":
        G = _gen_plane(spec, rng)
    else:  # pragma: no cover
        raise ValueError(spec.kind)
    _check_class(spec, G)
    return G


ENUM_GUARD = 9


def _noncrossing_chord_subsets(n):
    chords = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]

    def crosses(c1, c2):
        (a, b), (c, d) = c1, c2
        return (a < c < b < d) or (c < a < d < b)

    out = []

    def grow(idx, chosen):
        if idx == len(chords):
            out.append(tuple(chosen))
            return
        grow(idx + 1, chosen)
        c = chords[idx]
        if all(not crosses(c, o) for o in chosen):
            chosen.append(c)
            grow(idx + 1, chosen)
            chosen.pop()

    grow(0, [])
    return out


def _dihedral_canonical(n, chord_set):
    best = None
    for refl in (False, True):
        for r in range(n):
            mapped = []
            for a, b in chord_set:
                x = (a + r) % n if not refl else (-a + r) % n
                y = (b + r) % n if not refl else (-b + r) % n
                mapped.append((min(x, y), max(x, y)))
            key = tuple(sorted(mapped))
            if best is None or key < best:
                best = key
    return best


def enumerate_small(kind, n):
    """Exhaustive enumeration (deduplicated best-effort up to relabelling)
    of tiny instances.  Supported kinds: tree, cycle,
    outerplane_biconnected."""
    if n > ENUM_GUARD:
        raise ValueError(f"enumeration guarded to n <= {ENUM_GUARD}")
    if kind == "cycle":
        if n >= 3:
            yield _gen_cycle(GenSpec("cycle", n))
        return
    if kind == "tree":
        if n == 1:
            yield embed.EmbeddedGraph(1, [], [[]], ())
            return
        import networkx as nx

        for T in nx.nonisomorphic_trees(n):
            b = _Builder()
            for _ in range(n):
                b.new_vertex()
            for u, v in sorted(tuple(sorted(e)) for e in T.edges()):
                b.add_edge(u, v)
            yield b.finish_outerplane()
        return
    if kind == "outerplane_biconnected":
        if n < 3:
            return
        seen = set()
        for subset in _noncrossing_chord_subsets(n):
            key = _dihedral_canonical(n, subset)
            if key in seen:
                continue
            seen.add(key)
            b = _Builder()
            v0 = b.new_vertex()
            b.add_polygon_block(v0, n, sorted(subset))
            yield b.finish_outerplane()
        return
    raise ValueError(f"exhaustive enumeration not supported for kind {kind!r}")
