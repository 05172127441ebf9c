"""Kurihara graphs and quotients of finite group actions on trees.

A Kurihara graph stores directed edges with an involution bar; fixed
points of bar are half-edges (not self-loops: a half-edge is its own
opposite and starts and ends at the same vertex).  Genus of a connected
graph is 1 + e_r - v; half-edges contribute nothing.

Group actions are given by permutation generators on the vertices of a
finite graph; stabilizers and orbits are computed by full enumeration.
Masses are exact rationals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class KuriharaGraph:
    """Finite graph with edge involution admitting fixed points."""

    def __init__(self):
        self.vertices = []
        self.edge_bar = {}     # directed edge id -> opposite edge id
        self.edge_origin = {}  # directed edge id -> origin vertex
        self.vertex_mass = {}
        self.edge_mass = {}

    def add_vertex(self, v, mass=None):
        if v in self.vertex_mass or v in set(self.vertices):
            raise ValueError(f"duplicate vertex {v!r}")
        self.vertices.append(v)
        if mass is not None:
            self.vertex_mass[v] = Fraction(mass)

    def add_edge_pair(self, e, ebar, origin, terminus, mass=None):
        """A regular edge: e from origin to terminus, ebar its opposite."""
        if e == ebar:
            raise ValueError("use add_half_edge for bar-fixed edges")
        self.edge_bar[e] = ebar
        self.edge_bar[ebar] = e
        self.edge_origin[e] = origin
        self.edge_origin[ebar] = terminus
        if mass is not None:
            self.edge_mass[e] = Fraction(mass)
            self.edge_mass[ebar] = Fraction(mass)

    def add_half_edge(self, e, vertex, mass=None):
        self.edge_bar[e] = e
        self.edge_origin[e] = vertex
        if mass is not None:
            self.edge_mass[e] = Fraction(mass)

    # -- structure ---------------------------------------------------------

    def terminus(self, e):
        return self.edge_origin[self.edge_bar[e]]

    def regular_edges(self):
        return [e for e in self.edge_bar if self.edge_bar[e] != e]

    def half_edges(self):
        return [e for e in self.edge_bar if self.edge_bar[e] == e]

    @property
    def e_r(self) -> Fraction:
        return Fraction(len(self.regular_edges()), 2)

    @property
    def e_h(self) -> Fraction:
        # each half-edge is one bar-fixed directed edge; the convention
        # counts Ed_h with multiplicity two in the disjoint union
        return Fraction(len(self.half_edges()), 2)

    @property
    def v(self) -> int:
        return len(self.vertices)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            x = frontier.pop()
            for e, o in self.edge_origin.items():
                if o == x:
                    t = self.terminus(e)
                    if t not in seen:
                        seen.add(t)
                        frontier.append(t)
        return len(seen) == len(self.vertices)

    def genus(self) -> int:
        if not self.is_connected():
            raise ValueError("genus requires a connected graph")
        g = 1 + self.e_r - self.v
        assert g.denominator == 1
        return int(g)

    def mass_totals(self):
        """(VM, EM): vertex mass total and half the directed-edge masses."""
        if len(self.vertex_mass) != len(self.vertices) or \
                len(self.edge_mass) != len(self.edge_bar):
            raise ValueError("mass labels missing")
        vm = sum(self.vertex_mass.values(), Fraction(0))
        em = sum(self.edge_mass.values(), Fraction(0)) / 2
        return vm, em

    # -- serialization -------------------------------------------------------

    def serialize(self) -> str:
        lines = [f"V {v}" for v in self.vertices]
        done = set()
        for e in sorted(self.edge_bar, key=str):
            if e in done:
                continue
            b = self.edge_bar[e]
            done.add(e)
            done.add(b)
            lines.append(f"E {e} {b} {self.edge_origin[e]}")
            if b != e:
                lines.append(f"E {b} {e} {self.edge_origin[b]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str) -> KuriharaGraph:
        gr = cls()
        edges = []
        for line in text.strip().splitlines():
            parts = line.split()
            if parts[0] == "V":
                gr.add_vertex(parts[1])
            elif parts[0] == "E":
                edges.append((parts[1], parts[2], parts[3]))
            else:
                raise ValueError(f"bad line {line!r}")
        for e, b, o in edges:
            gr.edge_bar[e] = b
            gr.edge_origin[e] = o
        for e, b in gr.edge_bar.items():
            if gr.edge_bar.get(b) != e:
                raise ValueError("bar is not an involution")
        return gr


# ----------------------------------------------------------------------
# Group actions on finite graphs

def _perm_mul(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def close_group(generators, cap=200000):
    """All elements generated by the permutation tuples (BFS closure)."""
    n = len(generators[0]) if generators else 0
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    gens = [tuple(g) for g in generators]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _perm_mul(g, x)
            if y not in seen:
                if len(seen) >= cap:
                    raise ValueError("group closure exceeded cap")
                seen.add(y)
                frontier.append(y)
    return sorted(seen)


@dataclass
class GraphAction:
    """A finite group acting on a finite graph given by undirected edges.

    Generators are permutations of n >= n_vertices points; indices below
    n_vertices are the graph vertices (which every generator must preserve
    as a block), the rest are free carrier points so that non-faithful
    actions (a group acting trivially) are representable.
    """

    n_vertices: int
    edges: list            # list of (u, v) undirected, u != v
    generators: list       # list of permutation tuples
    require_tree: bool = field(default=False)

    def __post_init__(self):
        self.edges = [tuple(e) for e in self.edges]
        edge_set = {frozenset(e) for e in self.edges}
        if len(edge_set) != len(self.edges):
            raise ValueError("duplicate undirected edges")
        if not self.generators:
            self.generators = [tuple(range(self.n_vertices))]
        size = len(self.generators[0])
        if size < self.n_vertices:
            raise ValueError("generators shorter than the vertex block")
        for g in self.generators:
            if len(g) != size or sorted(g) != list(range(size)):
                raise ValueError("generator is not a permutation")
            if any(g[u] >= self.n_vertices for u in range(self.n_vertices)):
                raise ValueError("generator does not preserve the vertex block")
            for u, v in self.edges:
                if frozenset((g[u], g[v])) not in edge_set:
                    raise ValueError("action does not preserve incidence")
        if self.require_tree:
            if len(self.edges) != self.n_vertices - 1 or not self._connected():
                raise ValueError("underlying graph is not a tree")
        self.group = close_group(self.generators)

    def _connected(self):
        adj = {i: [] for i in range(self.n_vertices)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n_vertices

    # directed edges are (u, v); bar is the swap
    def directed_edges(self):
        out = []
        for u, v in self.edges:
            out.append((u, v))
            out.append((v, u))
        return out

    def vertex_orbits(self):
        return _orbits(range(self.n_vertices),
                       lambda g, x: g[x], self.group)

    def edge_orbits(self):
        return _orbits(self.directed_edges(),
                       lambda g, e: (g[e[0]], g[e[1]]), self.group)

    def vertex_stabilizer_order(self, x) -> int:
        return sum(1 for g in self.group if g[x] == x)

    def edge_stabilizer_order(self, e) -> int:
        return sum(1 for g in self.group if (g[e[0]], g[e[1]]) == e)

    def inverted_edges(self):
        """Undirected edges (u, v) with some g swapping u and v."""
        out = []
        for u, v in self.edges:
            if any(g[u] == v and g[v] == u for g in self.group):
                out.append((u, v))
        return out


def tree_action(n_vertices, edges, generators) -> GraphAction:
    return GraphAction(n_vertices, edges, generators, require_tree=True)


def _orbits(items, act, group):
    items = list(items)
    remaining = set(items)
    orbits = []
    for x in items:
        if x not in remaining:
            continue
        orb = {act(g, x) for g in group}
        orbits.append(sorted(orb))
        remaining -= orb
    return orbits


# ----------------------------------------------------------------------
# Quotients

def quotient(action: GraphAction) -> KuriharaGraph:
    """Quotient Kurihara graph with mass labels 1/#stabilizer.

    A directed-edge orbit containing its own opposite collapses to a
    half-edge.  Masses follow the orbit-mass definition; the half-edge
    mass uses the directed-edge stabilizer (not the pair stabilizer).
    """
    gr = KuriharaGraph()
    vorbs = action.vertex_orbits()
    vname = {}
    for orb in vorbs:
        name = f"v{orb[0]}"
        for x in orb:
            vname[x] = name
        gr.add_vertex(name, mass=Fraction(1, action.vertex_stabilizer_order(orb[0])))

    eorbs = action.edge_orbits()
    orbit_of = {}
    for idx, orb in enumerate(eorbs):
        for e in orb:
            orbit_of[e] = idx
    done = set()
    for idx, orb in enumerate(eorbs):
        if idx in done:
            continue
        rep = orb[0]
        bar_rep = (rep[1], rep[0])
        bar_idx = orbit_of[bar_rep]
        mass = Fraction(1, action.edge_stabilizer_order(rep))
        if bar_idx == idx:
            gr.add_half_edge(f"e{idx}", vname[rep[0]], mass=mass)
            done.add(idx)
        else:
            gr.add_edge_pair(f"e{idx}", f"e{bar_idx}",
                             vname[rep[0]], vname[rep[1]], mass=mass)
            done.add(idx)
            done.add(bar_idx)
    return gr


def subdivide_inverted(action: GraphAction) -> GraphAction:
    """Barycentric subdivision of precisely the inverted edges.

    The returned action has no inversions; each new midpoint vertex sits
    under the old half-edge with half its pair-stabilizer mass.  Midpoints
    are inserted directly after the old vertex block, shifting any carrier
    points up.
    """
    inverted = action.inverted_edges()
    if not inverted:
        return action
    k = len(inverted)
    nv = action.n_vertices
    inv_index = {frozenset(e): nv + i for i, e in enumerate(inverted)}

    def shift(x):
        return x if x < nv else x + k

    new_edges = []
    for u, v in action.edges:
        key = frozenset((u, v))
        if key in inv_index:
            m = inv_index[key]
            new_edges.append((u, m))
            new_edges.append((m, v))
        else:
            new_edges.append((u, v))
    size = len(action.generators[0])
    new_gens = []
    for g in action.generators:
        img = [0] * (size + k)
        for x in range(size):
            img[shift(x)] = shift(g[x])
        for key, m in inv_index.items():
            u, v = tuple(key)
            img[m] = inv_index[frozenset((g[u], g[v]))]
        new_gens.append(tuple(img))
    return GraphAction(nv + k, new_edges, new_gens,
                       require_tree=action.require_tree)


def equivariant_euler(action: GraphAction) -> Fraction:
    """VM - EM of the quotient; invariant under inverted-edge subdivision."""
    vm, em = quotient(action).mass_totals()
    return vm - em


def corank_from_quotient(gr: KuriharaGraph) -> int:
    """Genus of the quotient = corank of the acting group (Bass-Serre)."""
    return gr.genus()


# ----------------------------------------------------------------------
# Set actions and mass multiplicativity

def set_orbit_mass(group, n_points) -> Fraction:
    """Total orbit mass of a permutation group acting on {0..n-1}."""
    total = Fraction(0)
    seen = set()
    for x in range(n_points):
        if x in seen:
            continue
        orb = {g[x] for g in group}
        seen |= orb
        stab = sum(1 for g in group if g[x] == x)
        total += Fraction(1, stab)
    return total


def verify_mass_multiplicativity(generators, sub_generators, n_points) -> bool:
    """m(Orb) = d * m(Orb_0) for a subgroup of index d, by enumeration."""
    big = close_group(generators)
    small = close_group(sub_generators)
    if len(big) % len(small) != 0:
        raise ValueError("subgroup order does not divide group order")
    if not set(small) <= set(big):
        raise ValueError("not a subgroup")
    d = len(big) // len(small)
    return set_orbit_mass(small, n_points) == d * set_orbit_mass(big, n_points)
