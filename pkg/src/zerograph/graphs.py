"""Common-zero graph, its class dual, and the common-divisor graph.

* ``gamma-v``: non-linear characters, joined when they vanish on a common class;
* ``delta-v``: vanishing classes, joined when one character vanishes on both;
* ``gamma``: non-linear characters, joined when their degrees are not coprime.

Every edge stores the class, character or prime that certifies it.
"""

from __future__ import annotations

import csv
import io
import math
import time
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .cyclo import is_zero, simplify
from .tableio import CharTable, VerificationReport

GAMMA_V = "gamma-v"
DELTA_V = "delta-v"
GAMMA_DIVISOR = "gamma"
KINDS = (GAMMA_V, DELTA_V, GAMMA_DIVISOR)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    diameter: int


@dataclass(frozen=True)
class ZeroGraph:
    """``vertices`` are indices into the table's characters (or classes for ``delta-v``)."""

    kind: str
    table: CharTable
    vertices: tuple[int, ...]
    adjacency: tuple[tuple[bool, ...], ...]
    witnesses: dict[tuple[int, int], int]

    @property
    def labels(self) -> tuple[str, ...]:
        if self.kind == DELTA_V:
            return tuple(self.table.classes[v].label for v in self.vertices)
        return tuple(self.table.characters[v].label for v in self.vertices)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(j for j, e in enumerate(row) if e) for row in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as pairs of positions ``i < j`` in ``vertices``."""
        return sorted(self.witnesses)

    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.witnesses) == k * (k - 1) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return self.adjacency[i][j]

    def components(self) -> list[Component]:
        return components_and_diameters(self)


def vanishing_set(t: CharTable, chi: int) -> frozenset[int]:
    """Class indices where character ``chi`` is exactly zero."""
    return t.vanishing_sets[chi]


def vanishing_classes(t: CharTable) -> list[int]:
    return [j for j in range(len(t.classes)) if any(row[j] for row in t.zero_mask)]


def _smallest_prime(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def build_graph(t: CharTable, kind: str) -> ZeroGraph:
    if kind not in KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    van = t.vanishing_sets
    if kind == DELTA_V:
        vertices = tuple(vanishing_classes(t))
        killers = [
            [i for i in range(len(t.characters)) if t.zero_mask[i][j]] for j in vertices
        ]
    else:
        vertices = tuple(t.nonlinear())
    k = len(vertices)
    adj = [[False] * k for _ in range(k)]
    witnesses: dict[tuple[int, int], int] = {}
    for a in range(k):
        for b in range(a + 1, k):
            if kind == GAMMA_V:
                common = van[vertices[a]] & van[vertices[b]]
                witness = min(common) if common else None
            elif kind == DELTA_V:
                shared = set(killers[a]).intersection(killers[b])
                witness = min(shared) if shared else None
            else:
                g = math.gcd(t.characters[vertices[a]].degree, t.characters[vertices[b]].degree)
                witness = _smallest_prime(g) if g > 1 else None
            if witness is not None:
                adj[a][b] = adj[b][a] = True
                witnesses[(a, b)] = witness
    return ZeroGraph(kind, t, vertices, tuple(tuple(r) for r in adj), witnesses)


def verify_witnesses(g: ZeroGraph) -> list[dict]:
    """Re-check every stored witness against the table; returns the bad ones."""
    t = g.table
    bad = []
    for (a, b), w in g.witnesses.items():
        u, v = g.vertices[a], g.vertices[b]
        if g.kind == GAMMA_V:
            ok = is_zero(t.characters[u].values[w]) and is_zero(t.characters[v].values[w])
        elif g.kind == DELTA_V:
            ok = is_zero(t.characters[w].values[u]) and is_zero(t.characters[w].values[v])
        else:
            ok = t.characters[u].degree % w == 0 and t.characters[v].degree % w == 0
        if not ok or not g.adjacency[a][b] or a == b:
            bad.append({"edge": [g.labels[a], g.labels[b]], "witness": w})
    for a in range(len(g.vertices)):
        if g.adjacency[a][a]:
            bad.append({"self_loop": g.labels[a]})
        for b in range(len(g.vertices)):
            if g.adjacency[a][b] != g.adjacency[b][a]:
                bad.append({"asymmetric": [g.labels[a], g.labels[b]]})
    return bad


def _bfs(neigh: tuple[tuple[int, ...], ...], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in neigh[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def components_and_diameters(g: ZeroGraph) -> list[Component]:
    """Components (union-find) with exact diameters (BFS from every vertex).

    Components are listed by their smallest vertex position.
    """
    k = len(g.vertices)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.witnesses:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    out = []
    for members in sorted(groups.values()):
        diameter = 0
        for x in members:
            diameter = max(diameter, max(_bfs(g.neighbours, x).values()))
        out.append(Component(tuple(members), diameter))
    return out


def _component_sets(g: ZeroGraph) -> list[frozenset[int]]:
    """Components as sets of table indices."""
    return [frozenset(g.vertices[x] for x in c.vertices) for c in g.components()]


def duality_check(t: CharTable) -> VerificationReport:
    """Components of ``gamma-v`` and ``delta-v`` correspond bijectively.

    ``f`` sends a class component to the characters vanishing somewhere on it,
    ``h`` sends a character component to the classes where one of its members
    vanishes.  Both images must be components, the maps must be mutually
    inverse, and matched components differ in diameter by at most one.
    """
    start = time.perf_counter()
    gv = build_graph(t, GAMMA_V)
    dv = build_graph(t, DELTA_V)
    g_comps, d_comps = gv.components(), dv.components()
    g_sets, d_sets = _component_sets(gv), _component_sets(dv)
    g_diam = {s: c.diameter for s, c in zip(g_sets, g_comps)}
    d_diam = {s: c.diameter for s, c in zip(d_sets, d_comps)}
    witnesses = []

    def f(classes: frozenset[int]) -> frozenset[int]:
        return frozenset(i for i in range(len(t.characters)) if t.vanishing_sets[i] & classes)

    def h(chars: frozenset[int]) -> frozenset[int]:
        return frozenset(j for i in chars for j in t.vanishing_sets[i])

    pairs = []
    for cs in d_sets:
        image = f(cs)
        if image not in g_diam:
            witnesses.append({"map": "f", "component": _class_labels(t, cs), "image": _char_labels(t, image)})
            continue
        if h(image) != cs:
            witnesses.append({"map": "h(f(C)) != C", "component": _class_labels(t, cs)})
        gap = abs(d_diam[cs] - g_diam[image])
        pairs.append(
            {
                "classes": _class_labels(t, cs),
                "characters": _char_labels(t, image),
                "delta_v_diameter": d_diam[cs],
                "gamma_v_diameter": g_diam[image],
            }
        )
        if gap > 1:
            witnesses.append({"map": "diameter gap", "component": _class_labels(t, cs), "gap": gap})
    for chars in g_sets:
        image = h(chars)
        if image not in d_diam:
            witnesses.append({"map": "h", "component": _char_labels(t, chars), "image": _class_labels(t, image)})
        elif f(image) != chars:
            witnesses.append({"map": "f(h(A)) != A", "component": _char_labels(t, chars)})
    if len(g_sets) != len(d_sets):
        witnesses.append({"component_counts": [len(g_sets), len(d_sets)]})
    return VerificationReport(
        check="duality",
        scope={"group": t.name},
        witnesses=witnesses,
        details={"component_counts": [len(g_sets), len(d_sets)], "matched": pairs},
        timings={"seconds": time.perf_counter() - start},
    )


def _char_labels(t: CharTable, idx) -> list[str]:
    return [t.characters[i].label for i in sorted(idx)]


def _class_labels(t: CharTable, idx) -> list[str]:
    return [t.classes[j].label for j in sorted(idx)]


def subgraph_check(t: CharTable) -> VerificationReport:
    """Is every edge of the common-divisor graph an edge of the common-zero graph?"""
    start = time.perf_counter()
    gv = build_graph(t, GAMMA_V)
    gd = build_graph(t, GAMMA_DIVISOR)
    witnesses = []
    for a, b in gd.edges():
        if not gv.has_edge(a, b):
            u, v = gd.vertices[a], gd.vertices[b]
            witnesses.append(
                {
                    "pair": [t.characters[u].label, t.characters[v].label],
                    "degrees": [t.characters[u].degree, t.characters[v].degree],
                    "common_prime": gd.witnesses[(a, b)],
                    "vanishing_sets": [_class_labels(t, t.vanishing_sets[u]), _class_labels(t, t.vanishing_sets[v])],
                }
            )
    return VerificationReport(
        check="subgraph",
        scope={"group": t.name},
        witnesses=witnesses,
        details={"gamma_edges": len(gd.witnesses), "gamma_v_edges": len(gv.witnesses)},
        timings={"seconds": time.perf_counter() - start},
    )


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: ZeroGraph) -> str:
    """Deterministic DOT text with one cluster per component."""
    t = g.table
    name = {GAMMA_V: "gamma_v", DELTA_V: "delta_v", GAMMA_DIVISOR: "gamma"}[g.kind]
    lines = [f"graph {name} {{", f"  label={_dot_id(f'{g.kind} of {t.name}')};"]
    for ci, comp in enumerate(g.components()):
        lines.append(f"  subgraph cluster_{ci} {{")
        lines.append(f"    label={_dot_id(f'component {ci} (diameter {comp.diameter})')};")
        for x in comp.vertices:
            v = g.vertices[x]
            if g.kind == DELTA_V:
                k = t.classes[v]
                text = f"{k.label}\\nsize {k.size}"
            else:
                c = t.characters[v]
                text = f"{c.label}\\ndeg {c.degree}"
            lines.append(f"    v{x} [label=\"{text}\"];")
        lines.append("  }")
    for a, b in g.edges():
        w = g.witnesses[(a, b)]
        if g.kind == GAMMA_V:
            wl = t.classes[w].label
        elif g.kind == DELTA_V:
            wl = t.characters[w].label
        else:
            wl = str(w)
        lines.append(f"  v{a} -- v{b} [label={_dot_id(wl)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_report(g: ZeroGraph) -> dict:
    """JSON-ready summary: components, diameters and edge certificates."""
    t = g.table
    comps = g.components()
    edges = []
    for a, b in g.edges():
        w = g.witnesses[(a, b)]
        if g.kind == GAMMA_V:
            wl = t.classes[w].label
        elif g.kind == DELTA_V:
            wl = t.characters[w].label
        else:
            wl = w
        edges.append({"u": g.labels[a], "v": g.labels[b], "witness": wl})
    return {
        "group": t.name,
        "kind": g.kind,
        "vertices": list(g.labels),
        "components": [
            {"vertices": [g.labels[x] for x in c.vertices], "diameter": c.diameter} for c in comps
        ],
        "edges": edges,
        "complete": g.is_complete(),
    }


def values_csv(t: CharTable) -> str:
    """Character values as CSV: one row per character, one column per class."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["character"] + [k.label for k in t.classes])
    for c in t.characters:
        w.writerow([c.label] + [str(simplify(v)) for v in c.values])
    return buf.getvalue()
