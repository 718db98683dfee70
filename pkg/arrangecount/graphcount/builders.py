from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from arrangecount.errors import ArrangeCountError, InvalidParams
from arrangecount.finitefield.dlog import discrete_logs
from arrangecount.graphcount.graph import Graph


class InvalidStep(ArrangeCountError):
    pass


def _check_pairs(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise InvalidParams(f"a and b differ in length: {list(a)} vs {list(b)}")


def _check_size(k: int) -> None:
    if k < 1:
        raise InvalidParams(f"graph parameter k must be at least 1, got {k}")


def build_G(a: Sequence[int], k: int) -> Graph:
    """Vertices 1..k, i ~ j when i = a_r j (mod k + 1)."""
    _check_size(k)
    if any(x < 2 for x in a):
        raise InvalidParams(f"multipliers must be at least 2, got {list(a)}")
    modulus = k + 1
    edges = []
    for j in range(1, k + 1):
        for x in a:
            i = x * j % modulus
            if i != 0:
                edges.append((i - 1, j - 1))
    return Graph.from_edges(k, edges, labels=range(1, k + 1))


def build_F(a: Sequence[int], k: int) -> Graph:
    """Circulant graph on Z/kZ with connection set +-a."""
    _check_size(k)
    for x in a:
        if not 0 < x < k:
            raise InvalidStep(f"step {x} is not in 1..{k - 1}")
    edges = [(v, (v + x) % k) for x in a for v in range(k)]
    return Graph.from_edges(k, edges, labels=range(k))


def build_G_ratio(a: Sequence[int], b: Sequence[int], k: int) -> Graph:
    """Vertices 1..k, i ~ j when a_r i = b_r j (mod k + 1)."""
    _check_size(k)
    _check_pairs(a, b)
    if any(x == y for x, y in zip(a, b)):
        raise InvalidParams(f"ratio graph needs a_r != b_r, got {list(a)}, {list(b)}")
    modulus = k + 1
    edges = []
    for x, y in zip(a, b):
        preimages: Dict[int, List[int]] = defaultdict(list)
        for i in range(1, k + 1):
            preimages[x * i % modulus].append(i)
        for j in range(1, k + 1):
            for i in preimages.get(y * j % modulus, ()):
                edges.append((i - 1, j - 1))
    return Graph.from_edges(k, edges, labels=range(1, k + 1))


def build_F_affine(a: Sequence[int], b: Sequence[int], k: int) -> Graph:
    """Vertices Z/kZ, i ~ j when i - a_r j = b_r (mod k)."""
    _check_size(k)
    _check_pairs(a, b)
    edges = [((x * j + y) % k, j) for x, y in zip(a, b) for j in range(k)]
    return Graph.from_edges(k, edges, labels=range(k))


def empty_graph(k: int) -> Graph:
    return Graph.from_edges(k, ())


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((v, (v + 1) % k) for v in range(k)))


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((v, v + 1) for v in range(k - 1)))


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((u, v) for u in range(k) for v in range(u + 1, k)))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Vertices of ``gs[i]`` follow those of ``gs[i - 1]``; no cross edges."""
    if len(gs) == 1:
        return gs[0]
    edges: List[Tuple[int, int]] = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.vcount
    return Graph.from_edges(offset, edges)


def attach_copies(g: Graph, h: Graph, anchor: int = 0) -> Graph:
    """Join every vertex v of `g` by one edge to the anchor of its own copy of `h`.

    The copy belonging to v occupies vertices ``g.vcount + v * h.vcount`` onward.
    """
    if not 0 <= anchor < max(h.vcount, 1):
        raise ValueError(f"anchor {anchor} outside the attached graph")
    if h.vcount == 0:
        return g
    edges = list(g.edges())
    for v in range(g.vcount):
        start = g.vcount + v * h.vcount
        edges.append((v, start + anchor))
        edges.extend((start + x, start + y) for x, y in h.edges())
    return Graph.from_edges(g.vcount * (1 + h.vcount), edges)


def add_pendants(g: Graph) -> Graph:
    """Vertex ``v + g.vcount`` is a new leaf hanging off v."""
    return attach_copies(g, empty_graph(1))


def attach_cycle(g: Graph) -> Graph:
    """Join vertex v of `g` to vertex v of a new cycle on ``g.vcount`` vertices."""
    k = g.vcount
    edges = list(g.edges())
    edges.extend((k + v, k + (v + 1) % k) for v in range(k))
    edges.extend((v, k + v) for v in range(k))
    return Graph.from_edges(2 * k, edges)


def relabel_by_dlog(graph: Graph, q: int, g: int) -> Graph:
    """Relabel a graph on the units 1..q-1 by their discrete logarithms.

    Applied to G(a, q - 1) the edge set becomes that of the circulant
    F(dlog_steps(a), q - 1).
    """
    if graph.vcount != q - 1:
        raise ValueError(f"graph has {graph.vcount} vertices, expected {q - 1}")
    return graph.relabel(discrete_logs(q, g))
