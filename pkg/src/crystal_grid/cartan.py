"""Cartan data, the abstract crystal contract, and crystal graphs.

A crystal here is a set with a weight map into the root lattice, integer
statistics epsilon_i / phi_i, and partial raising / lowering operators,
subject to the usual five axioms.  Checks run on finite enumerated
fragments; applications that leave the fragment's weight bound are
treated as unknown, not as violations.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field


class TruncationError(RuntimeError):
    """An operator application left the representable region of a model."""


@dataclass(frozen=True)
class CartanMatrix:
    """Generalized Cartan matrix over an ordered index set."""

    index_set: tuple
    entries: tuple

    def __post_init__(self):
        n = len(self.index_set)
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("entries must be square over the index set")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if self.entries[i][j] > 0:
                        raise ValueError("off-diagonal entries must be nonpositive")
                    if (self.entries[i][j] != 0) != (self.entries[j][i] != 0):
                        raise ValueError("zero pattern must be symmetric")

    def position(self, i) -> int:
        try:
            return self.index_set.index(i)
        except ValueError:
            raise KeyError(f"unknown vertex {i!r}") from None

    def is_symmetric(self) -> bool:
        return all(row[j] == self.entries[j][i]
                   for i, row in enumerate(self.entries) for j in range(len(row)))


def cartan_from_quiver(quiver, vertex_order=None, labels=None) -> CartanMatrix:
    """Symmetric Cartan matrix of a quiver: 2 on the diagonal, minus the
    number of arrows between two distinct vertices off it."""
    if any(s == t for (s, t) in quiver.arrows):
        raise ValueError("quiver has an edge loop; no Cartan matrix is defined")
    order = tuple(vertex_order) if vertex_order is not None else tuple(quiver.vertices)
    if sorted(order) != sorted(quiver.vertices):
        raise ValueError("vertex_order must enumerate the quiver vertices")
    n = len(order)
    counts = {}
    for (s, t) in quiver.arrows:
        counts[(s, t)] = counts.get((s, t), 0) + 1
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            else:
                u, v = order[i], order[j]
                row.append(-(counts.get((u, v), 0) + counts.get((v, u), 0)))
        entries.append(tuple(row))
    index_set = tuple(labels) if labels is not None else order
    return CartanMatrix(index_set, tuple(entries))


def pairing(cartan: CartanMatrix, i, coeffs) -> int:
    """Evaluate <h_i, w> for w = sum_j coeffs_j alpha_j."""
    row = cartan.entries[cartan.position(i)]
    if len(coeffs) != len(row):
        raise ValueError("coefficient vector length mismatch")
    return sum(a * c for a, c in zip(row, coeffs))


NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class CrystalFragment:
    """A finite enumerated piece of a crystal together with its maps.

    All maps must be total on the fragment; ``apply_f`` may raise
    TruncationError when a model cannot represent the target.
    """

    cartan: CartanMatrix
    elements: tuple
    wt: object
    epsilon: object
    phi: object
    apply_e: object
    apply_f: object

    @property
    def colors(self):
        return self.cartan.index_set


@dataclass(frozen=True)
class CheckReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_rule(self) -> dict:
        out = {}
        for v in self.violations:
            out.setdefault(v[0], []).append(v)
        return out


def _alpha_step(cartan, i, coeffs, sign):
    pos = cartan.position(i)
    return tuple(c + sign * (1 if j == pos else 0) for j, c in enumerate(coeffs))


def check_crystal_axioms(frag: CrystalFragment) -> CheckReport:
    """Exhaustively test the five crystal axioms on a fragment.

    Violations are reported as (axiom number, element, color, message).
    """
    bad = []
    for b in frag.elements:
        for i in frag.colors:
            eps = frag.epsilon(b, i)
            phi = frag.phi(b, i)
            w = frag.wt(b)
            if phi != NEG_INFINITY and phi != eps + pairing(frag.cartan, i, w):
                bad.append((1, b, i, f"phi={phi} but eps+pairing={eps + pairing(frag.cartan, i, w)}"))
            up = frag.apply_e(b, i)
            if up is not None:
                if frag.wt(up) != _alpha_step(frag.cartan, i, w, +1):
                    bad.append((2, b, i, "weight of raised element is not wt+alpha_i"))
                if frag.epsilon(up, i) != eps - 1:
                    bad.append((2, b, i, f"epsilon {frag.epsilon(up, i)} != {eps} - 1 after raising"))
                if frag.phi(up, i) != phi + 1:
                    bad.append((2, b, i, f"phi {frag.phi(up, i)} != {phi} + 1 after raising"))
                if frag.apply_f(up, i) != b:
                    bad.append((4, b, i, "lowering does not invert raising"))
            try:
                down = frag.apply_f(b, i)
            except TruncationError:
                down = None
            if down is not None:
                if frag.wt(down) != _alpha_step(frag.cartan, i, w, -1):
                    bad.append((3, b, i, "weight of lowered element is not wt-alpha_i"))
                if frag.epsilon(down, i) != eps + 1:
                    bad.append((3, b, i, f"epsilon {frag.epsilon(down, i)} != {eps} + 1 after lowering"))
                if frag.phi(down, i) != phi - 1:
                    bad.append((3, b, i, f"phi {frag.phi(down, i)} != {phi} - 1 after lowering"))
                if frag.apply_e(down, i) != b:
                    bad.append((4, b, i, "raising does not invert lowering"))
            if phi == NEG_INFINITY and (up is not None or down is not None):
                bad.append((5, b, i, "operators defined although phi is -infinity"))
    return CheckReport(tuple(bad))


def check_strict_morphism(dom: CrystalFragment, cod: CrystalFragment, rho) -> CheckReport:
    """Test the three morphism clauses for rho: dom -> cod + {0} (rho returns None for 0)."""
    bad = []
    for b in dom.elements:
        image = rho(b)
        if image is None:
            continue
        if dom.wt(b) != cod.wt(image):
            bad.append((1, b, None, "weight not preserved"))
        for i in dom.colors:
            if dom.epsilon(b, i) != cod.epsilon(image, i):
                bad.append((1, b, i, "epsilon not preserved"))
            if dom.phi(b, i) != cod.phi(image, i):
                bad.append((1, b, i, "phi not preserved"))
            up = dom.apply_e(b, i)
            if up is not None and rho(up) is not None:
                if cod.apply_e(image, i) != rho(up):
                    bad.append((2, b, i, "raising does not commute with the map"))
            try:
                down = dom.apply_f(b, i)
            except TruncationError:
                down = None
            if down is not None and rho(down) is not None:
                if cod.apply_f(image, i) != rho(down):
                    bad.append((3, b, i, "lowering does not commute with the map"))
    return CheckReport(tuple(bad))


@dataclass(frozen=True)
class GraphNode:
    node_id: str
    dims: tuple
    ranks: object          # tuple or None
    weight: tuple


@dataclass(frozen=True)
class CrystalGraph:
    nodes: tuple
    edges: tuple           # (source id, color, target id)


def _node_key(dims, ranks):
    return (sum(dims), dims, ranks if ranks is not None else ())


def _node_id(dims, ranks):
    head = ",".join(str(d) for d in dims)
    if ranks is None:
        return head
    return head + ":" + ",".join(str(r) for r in ranks)


def build_crystal_graph(seeds, colors, apply_f, describe, bound) -> CrystalGraph:
    """Breadth-first closure of the seeds under all lowering operators.

    ``describe`` maps an element to (dims, ranks-or-None); elements whose
    total dimension would exceed ``bound`` are not explored.  Node and edge
    order is deterministic: lexicographic on (total, dims, ranks).
    """
    seeds = list(seeds)
    for s in seeds:
        dims, _ = describe(s)
        if sum(dims) > bound:
            raise ValueError(f"bound {bound} is below a seed of total dimension {sum(dims)}")
    seen = {}
    queue = deque(sorted(seeds, key=lambda b: _node_key(*describe(b))))
    for s in queue:
        seen[_node_id(*describe(s))] = s
    while queue:
        b = queue.popleft()
        for i in colors:
            try:
                t = apply_f(b, i)
            except TruncationError:
                continue
            if t is None:
                continue
            dims, ranks = describe(t)
            if sum(dims) > bound:
                continue
            tid = _node_id(dims, ranks)
            if tid not in seen:
                seen[tid] = t
                queue.append(t)
    items = sorted(seen.items(), key=lambda kv: _node_key(*describe(kv[1])))
    nodes = []
    order = {}
    for pos, (nid, elem) in enumerate(items):
        dims, ranks = describe(elem)
        nodes.append(GraphNode(nid, dims, ranks, tuple(-d for d in dims)))
        order[nid] = pos
    edges = []
    for nid, elem in items:
        for i in colors:
            try:
                t = apply_f(elem, i)
            except TruncationError:
                continue
            if t is None:
                continue
            tid = _node_id(*describe(t))
            if tid in seen:
                edges.append((nid, i, tid))
    edges.sort(key=lambda e: (order[e[0]], e[1], order[e[2]]))
    return CrystalGraph(tuple(nodes), tuple(edges))


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    missing: tuple
    witnesses: dict = field(compare=False)


def is_connected_within(graph: CrystalGraph, expected_ids=None) -> ConnectivityReport:
    """Reachability from the base node (total dimension 0) along graph edges.

    Every reached node gets a raising word back to the base: the reversed
    colors of its breadth-first path.  ``expected_ids`` may list node ids
    that must all be present and reachable (e.g. the full enumeration of
    components below the bound).
    """
    if not graph.nodes:
        return ConnectivityReport(True, (), {})
    base = graph.nodes[0]
    if sum(base.dims) != 0:
        raise ValueError("graph has no base node of total dimension 0")
    out = {}
    for (src, color, dst) in graph.edges:
        out.setdefault(src, []).append((color, dst))
    paths = {base.node_id: ()}
    queue = deque([base.node_id])
    while queue:
        nid = queue.popleft()
        for color, dst in out.get(nid, ()):
            if dst not in paths:
                paths[dst] = paths[nid] + (color,)
                queue.append(dst)
    witnesses = {nid: tuple(reversed(p)) for nid, p in paths.items()}
    targets = set(expected_ids) if expected_ids is not None else {n.node_id for n in graph.nodes}
    missing = tuple(sorted(t for t in targets if t not in paths))
    return ConnectivityReport(not missing, missing, witnesses)


def export_json(graph: CrystalGraph) -> str:
    payload = {
        "nodes": [
            {
                "id": n.node_id,
                "dims": list(n.dims),
                "ranks": list(n.ranks) if n.ranks is not None else None,
                "wt": list(n.weight),
            }
            for n in graph.nodes
        ],
        "edges": [{"src": s, "color": c, "dst": d} for (s, c, d) in graph.edges],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> CrystalGraph:
    payload = json.loads(text)
    nodes = tuple(
        GraphNode(
            n["id"],
            tuple(n["dims"]),
            tuple(n["ranks"]) if n["ranks"] is not None else None,
            tuple(n["wt"]),
        )
        for n in payload["nodes"]
    )
    edges = tuple((e["src"], e["color"], e["dst"]) for e in payload["edges"])
    return CrystalGraph(nodes, edges)


def export_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal_graph {"]
    for n in graph.nodes:
        lines.append(f'  "{n.node_id}";')
    for (src, color, dst) in graph.edges:
        lines.append(f'  "{src}" -> "{dst}" [label="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
