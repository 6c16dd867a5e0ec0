"""Simple graphs, their cover/edge ideals and the degree-(n-2) correspondence.

Vertices are labeled 1..n.  Vertex ``i`` corresponds to the variable ``x_i``,
which sits in exponent slot ``i - 1``.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .monomial import Monomial, MonomialIdeal, RingContext


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        canon = set()
        for e in edges:
            i, j = e
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i},{j}}} outside vertex range 1..{n}")
            canon.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def relabel(self, perm: dict[int, int]) -> SimpleGraph:
        return SimpleGraph(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> SimpleGraph:
        return cls(int(data["n"]), data.get("edges", []))

    def __str__(self) -> str:
        es = ", ".join(f"{i}-{j}" for i, j in self.edges)
        return f"Graph(n={self.n}; {es})"


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]


@dataclass(frozen=True)
class GraphStructure:
    is_forest: bool
    is_connected: bool
    cyclomatic_number: int
    components: int
    odd_unicyclic: bool
    girth_parity_of_unique_cycle: str | None  # "odd", "even", or None when not unicyclic


# -- builders ------------------------------------------------------------


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleGraph(n, itertools.combinations(range(1, n + 1), 2))


def cycle(length: int) -> SimpleGraph:
    if length < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(length, [(i, i % length + 1) for i in range(1, length + 1)])


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleGraph(n, [(i, i + 1) for i in range(1, n)])


def star(n: int) -> SimpleGraph:
    """Vertex 1 joined to every other vertex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleGraph(n, [(1, i) for i in range(2, n + 1)])


def edgeless(n: int) -> SimpleGraph:
    return SimpleGraph(n, [])


def complete_multipartite(weights: Iterable[int]) -> SimpleGraph:
    """Parts of the given sizes laid out consecutively: part 1 is 1..w1, etc."""
    weights = list(weights)
    if not weights or any(w < 1 for w in weights):
        raise ValueError("part sizes must be positive")
    parts, start = [], 1
    for w in weights:
        parts.append(range(start, start + w))
        start += w
    edges = [
        (a, b) for p, q in itertools.combinations(parts, 2) for a in p for b in q
    ]
    return SimpleGraph(start - 1, edges)


def complement(G: SimpleGraph) -> SimpleGraph:
    present = set(G.edges)
    return SimpleGraph(
        G.n, [e for e in itertools.combinations(G.vertices, 2) if e not in present]
    )


def from_prufer(seq: Iterable[int]) -> SimpleGraph:
    """Decode a Prufer sequence over labels 1..n (n = len(seq) + 2)."""
    seq = list(seq)
    n = len(seq) + 2
    degree = [1] * (n + 1)
    for v in seq:
        if not 1 <= v <= n:
            raise ValueError(f"Prufer entry {v} outside 1..{n}")
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return SimpleGraph(n, edges)


def random_tree(n: int, rng: random.Random) -> SimpleGraph:
    if n == 1:
        return SimpleGraph(1)
    if n == 2:
        return SimpleGraph(2, [(1, 2)])
    return from_prufer(rng.randint(1, n) for _ in range(n - 2))


# -- tree canonical forms --------------------------------------------------


def _rooted_code(adj: dict[int, set[int]], root: int, parent: int | None) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def tree_centers(T: SimpleGraph) -> list[int]:
    adj = T.adjacency()
    deg = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if deg[v] <= 1]
    remaining = T.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for u in adj[leaf]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def tree_canonical_form(T: SimpleGraph) -> str:
    """AHU string of the tree rooted at its center(s); equal iff isomorphic."""
    adj = T.adjacency()
    return min(_rooted_code(adj, c, None) for c in tree_centers(T))


def nonisomorphic_trees(n: int) -> list[SimpleGraph]:
    """One labeled representative per isomorphism class of trees on n vertices.

    Walks every Prufer sequence and keeps the first tree seen for each
    canonical form, so the result is deterministic.
    """
    if n <= 2:
        return [SimpleGraph(n, [(1, 2)] if n == 2 else [])]
    seen: dict[str, SimpleGraph] = {}
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        T = from_prufer(seq)
        key = tree_canonical_form(T)
        if key not in seen:
            seen[key] = T
    return [seen[k] for k in sorted(seen)]


def labeled_connected_graphs(n: int) -> Iterator[SimpleGraph]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        G = SimpleGraph(n, [p for b, p in enumerate(pairs) if mask >> b & 1])
        if structure(G).is_connected:
            yield G


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.35) -> SimpleGraph:
    """Random spanning tree plus independently sampled extra edges."""
    T = random_tree(n, rng)
    present = set(T.edges)
    extra = [
        e for e in itertools.combinations(range(1, n + 1), 2)
        if e not in present and rng.random() < extra_edge_prob
    ]
    return SimpleGraph(n, list(present) + extra)


def connected_graphs_up_to_isomorphism(max_n: int, min_n: int = 1) -> list[SimpleGraph]:
    """Connected graphs on min_n..max_n vertices (max_n <= 7), one per class."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas only covers graphs on at most 7 vertices")
    out = []
    for H in nx.graph_atlas_g():
        k = H.number_of_nodes()
        if k < max(min_n, 1) or k > max_n or not nx.is_connected(H):
            continue
        out.append(SimpleGraph(k, [(a + 1, b + 1) for a, b in H.edges()]))
    return out


# -- covers and ideals -----------------------------------------------------


def maximal_independent_sets(G: SimpleGraph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting on the complement's clique structure."""
    adj = G.adjacency()
    # independent sets of G are cliques of the complement
    cadj = {v: set(G.vertices) - adj[v] - {v} for v in G.vertices}
    found: list[frozenset[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]):
        if not P and not X:
            found.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: (len(cadj[u] & P), -u))
        for v in sorted(P - cadj[pivot]):
            expand(R | {v}, P & cadj[v], X & cadj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(G.vertices), set())
    return sorted(found, key=lambda s: sorted(s))


def minimal_vertex_covers(G: SimpleGraph) -> list[VertexCover]:
    covers = [frozenset(G.vertices) - s for s in maximal_independent_sets(G)]
    return [VertexCover(c) for c in sorted(covers, key=lambda c: (len(c), sorted(c)))]


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    ctx = RingContext(G.n)
    return MonomialIdeal(
        ctx, (ctx.squarefree(v - 1 for v in C.vertices) for C in minimal_vertex_covers(G))
    )


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    ctx = RingContext(G.n)
    return MonomialIdeal(ctx, (ctx.squarefree((i - 1, j - 1)) for i, j in G.edges))


def missing_pair(u: Monomial) -> tuple[int, int]:
    """The edge {i, j} = [n] minus supp(u) for a squarefree u of degree n - 2."""
    n = u.ctx.n
    if not u.is_squarefree or u.degree != n - 2:
        raise ValueError(f"{u} is not a squarefree monomial of degree n-2={n - 2}")
    i, j = (k + 1 for k in range(n) if u.exponents[k] == 0)
    return (i, j)


def graph_from_ideal(J: MonomialIdeal) -> SimpleGraph:
    """G_J: one edge per generator, joining the two variables it omits."""
    if J.is_zero:
        raise ValueError("the zero ideal has no associated graph")
    return SimpleGraph(J.ctx.n, (missing_pair(u) for u in J.generators))


def ideal_from_graph(G: SimpleGraph) -> MonomialIdeal:
    """Squarefree degree-(n-2) ideal whose associated graph is G."""
    if G.n < 3:
        raise ValueError("need n >= 3 vertices")
    if not G.edges:
        raise ValueError("need at least one edge")
    ctx = RingContext(G.n)
    return MonomialIdeal(
        ctx,
        (ctx.squarefree(k for k in range(G.n) if k + 1 not in e) for e in G.edges),
    )


# -- structure ---------------------------------------------------------------


def components(G: SimpleGraph) -> list[list[int]]:
    adj = G.adjacency()
    seen: set[int] = set()
    comps = []
    for v in G.vertices:
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _unique_cycle_length(G: SimpleGraph, comp: list[int]) -> int:
    """Length of the single cycle in a connected unicyclic component (prune leaves)."""
    adj = {v: set(G.adjacency()[v]) for v in comp}
    leaves = [v for v in comp if len(adj[v]) <= 1]
    alive = set(comp)
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in adj[v]:
            adj[u].discard(v)
            if u in alive and len(adj[u]) == 1:
                leaves.append(u)
        adj[v] = set()
    return len(alive)


def structure(G: SimpleGraph) -> GraphStructure:
    comps = components(G)
    c = len(comps)
    cyclomatic = len(G.edges) - G.n + c
    connected = c == 1
    parity = None
    if connected and cyclomatic == 1:
        parity = "odd" if _unique_cycle_length(G, comps[0]) % 2 else "even"
    return GraphStructure(
        is_forest=cyclomatic == 0,
        is_connected=connected,
        cyclomatic_number=cyclomatic,
        components=c,
        odd_unicyclic=parity == "odd",
        girth_parity_of_unique_cycle=parity,
    )


def component_cycle_profile(G: SimpleGraph) -> list[tuple[int, int | None]]:
    """(cyclomatic number, unique-cycle length or None) per connected component."""
    out = []
    for comp in components(G):
        cs = set(comp)
        m = sum(1 for i, j in G.edges if i in cs)
        cyc = m - len(comp) + 1
        out.append((cyc, _unique_cycle_length(G, comp) if cyc == 1 else None))
    return out


def has_four_cycle(G: SimpleGraph) -> bool:
    """Brute force over vertex quadruples and their three cyclic orders."""
    E = set(G.edges)

    def adj(a, b):
        return (min(a, b), max(a, b)) in E

    for a, b, c, d in itertools.combinations(G.vertices, 4):
        for p, q, r, s in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if adj(p, q) and adj(q, r) and adj(r, s) and adj(s, p):
                return True
    return False


def shelling_edge_order(G: SimpleGraph) -> list[tuple[int, int]]:
    """Spanning-tree edges grown from a leaf edge, then the remaining edges.

    Every edge after the first meets an earlier one, which is what makes the
    associated generator order have linear quotients.
    """
    if not structure(G).is_connected:
        raise ValueError("shelling order needs a connected graph")
    if not G.edges:
        return []
    adj = G.adjacency()

    def bfs(nbrs, root):
        parent, order, queue = {root: None}, [root], deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(nbrs[u]):
                if w not in parent:
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        return [tuple(sorted((parent[v], v))) for v in order[1:]]

    spanning = bfs(adj, 1)
    tadj: dict[int, set[int]] = {v: set() for v in G.vertices}
    for i, j in spanning:
        tadj[i].add(j)
        tadj[j].add(i)
    # regrow the spanning tree from one of its leaves so e_1 is a leaf edge
    leaf = min(v for v in G.vertices if len(tadj[v]) == 1)
    tree_edges = bfs(tadj, leaf)
    used = set(tree_edges)
    return tree_edges + [e for e in G.edges if e not in used]
