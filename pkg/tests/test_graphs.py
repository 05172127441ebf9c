import random
from fractions import Fraction

import pytest

from cycloclass.graphs import (
    GraphAction,
    KuriharaGraph,
    close_group,
    corank_from_quotient,
    equivariant_euler,
    quotient,
    set_orbit_mass,
    subdivide_inverted,
    tree_action,
    verify_mass_multiplicativity,
)


def single_edge_swap():
    return tree_action(2, [(0, 1)], [(1, 0)])


def star_rotation():
    # center 0, leaves 1..3, Z/3 rotating the leaves
    return tree_action(4, [(0, 1), (0, 2), (0, 3)], [(0, 2, 3, 1)])


class TestGenus:
    def test_self_loop(self):
        gr = KuriharaGraph()
        gr.add_vertex("a")
        gr.add_edge_pair("e", "f", "a", "a")
        assert gr.genus() == 1

    def test_half_edge_contributes_nothing(self):
        gr = KuriharaGraph()
        gr.add_vertex("a")
        gr.add_half_edge("h", "a")
        assert gr.genus() == 0
        assert gr.e_h == Fraction(1, 2)

    def test_path(self):
        gr = KuriharaGraph()
        gr.add_vertex("a")
        gr.add_vertex("b")
        gr.add_edge_pair("e", "f", "a", "b")
        assert gr.genus() == 0

    def test_disconnected_rejected(self):
        gr = KuriharaGraph()
        gr.add_vertex("a")
        gr.add_vertex("b")
        with pytest.raises(ValueError):
            gr.genus()


class TestQuotient:
    def test_single_edge_swap(self):
        gr = quotient(single_edge_swap())
        assert gr.v == 1
        assert len(gr.half_edges()) == 1 and not gr.regular_edges()
        assert list(gr.vertex_mass.values()) == [1]
        assert list(gr.edge_mass.values()) == [1]
        vm, em = gr.mass_totals()
        assert (vm, em) == (1, Fraction(1, 2))

    def test_trivial_group(self):
        act = tree_action(4, [(0, 1), (1, 2), (1, 3)], [(0, 1, 2, 3)])
        gr = quotient(act)
        assert gr.v == 4
        assert len(gr.regular_edges()) == 6 and not gr.half_edges()
        assert all(m == 1 for m in gr.vertex_mass.values())

    def test_star_rotation(self):
        gr = quotient(star_rotation())
        assert gr.v == 2
        assert gr.e_r == 1 and gr.e_h == 0
        vm, em = gr.mass_totals()
        assert vm == Fraction(1, 3) + 1
        assert em == 1

    def test_trivial_action_of_z2(self):
        # one vertex, no edges, Z/2 acting trivially via a carrier point
        act = GraphAction(1, [], [(0, 2, 1)])
        gr = quotient(act)
        vm, em = gr.mass_totals()
        assert vm == Fraction(1, 2) and em == 0

    def test_incidence_violation_rejected(self):
        with pytest.raises(ValueError):
            GraphAction(3, [(0, 1)], [(0, 2, 1)])


class TestSubdivision:
    def test_single_edge_swap_subdivided(self):
        act = single_edge_swap()
        sub = subdivide_inverted(act)
        assert sub.n_vertices == 3
        assert not sub.inverted_edges()
        gr = quotient(sub)
        assert gr.v == 2 and gr.e_r == 1 and gr.e_h == 0
        vm, em = gr.mass_totals()
        assert (vm, em) == (Fraction(3, 2), 1)
        # midpoint mass is half the half-edge mass
        assert Fraction(1, 2) in gr.vertex_mass.values()

    def test_no_inversions_unchanged(self):
        act = star_rotation()
        assert subdivide_inverted(act) is act

    def test_euler_invariance_spec_example(self):
        act = single_edge_swap()
        assert equivariant_euler(act) == Fraction(1, 2)
        assert equivariant_euler(subdivide_inverted(act)) == Fraction(1, 2)

    def test_free_action_euler_is_tree_euler(self):
        act = tree_action(5, [(0, 1), (1, 2), (2, 3), (2, 4)], [tuple(range(5))])
        assert equivariant_euler(act) == 1

    def test_star_euler(self):
        assert equivariant_euler(star_rotation()) == Fraction(1, 3)


# ----------------------------------------------------------------------
# random tree actions

def random_rooted_tree(rng, max_nodes=12):
    """children[i] lists the children of node i; node 0 is the root."""
    children = [[]]
    while len(children) < max_nodes:
        parent = rng.randrange(len(children))
        if rng.random() < 0.35 and len(children) > 2:
            break
        children.append([])
        children[parent] = children[parent] + [len(children) - 1]
    return children


def canonical(children, x):
    return tuple(sorted(canonical(children, c) for c in children[x]))


def subtree_nodes(children, x):
    out = [x]
    for c in children[x]:
        out.extend(subtree_nodes(children, c))
    return out


def aut_generators(children):
    """Swaps of isomorphic sibling subtrees generate Aut of the rooted tree."""
    n = len(children)
    gens = []
    for x in range(n):
        kids = children[x]
        for i in range(len(kids)):
            for j in range(i + 1, len(kids)):
                a, b = kids[i], kids[j]
                if canonical(children, a) != canonical(children, b):
                    continue
                na = sorted(subtree_nodes(children, a))
                nb = sorted(subtree_nodes(children, b))
                perm = list(range(n))
                # the canonical DFS orders of isomorphic subtrees match up
                for u, v in zip(_canon_order(children, a), _canon_order(children, b)):
                    perm[u], perm[v] = v, u
                gens.append(tuple(perm))
                break  # one swap per node keeps the closure small
    if not gens:
        gens = [tuple(range(n))]
    return gens


def _canon_order(children, x):
    out = [x]
    for c in sorted(children[x], key=lambda c: canonical(children, c)):
        out.extend(_canon_order(children, c))
    return out


def mirrored_action(rng, max_nodes=8):
    """Two copies of a random rooted tree joined at the roots; the swap
    inverts the bridge, and sibling swaps act inside each copy."""
    children = random_rooted_tree(rng, max_nodes)
    n = len(children)
    edges = [(p, c) for p in range(n) for c in children[p]]
    edges = edges + [(u + n, v + n) for u, v in edges] + [(0, n)]
    swap = tuple(list(range(n, 2 * n)) + list(range(n)))
    gens = [swap]
    for g in aut_generators(children):
        gens.append(tuple(list(g) + list(range(n, 2 * n))))
        gens.append(tuple(list(range(n)) + [x + n for x in g]))
    return tree_action(2 * n, edges, gens)


def plain_action(rng, max_nodes=12):
    children = random_rooted_tree(rng, max_nodes)
    n = len(children)
    edges = [(p, c) for p in range(n) for c in children[p]]
    return tree_action(n, edges, aut_generators(children))


class TestRandomActions:
    def test_invariance_under_subdivision(self):
        rng = random.Random(20240613)
        for trial in range(100):
            act = mirrored_action(rng) if trial % 2 else plain_action(rng)
            sub = subdivide_inverted(act)
            gr, grs = quotient(act), quotient(sub)
            assert gr.genus() == grs.genus() == 0  # finite groups have corank 0
            vma, ema = gr.mass_totals()
            vmb, emb = grs.mass_totals()
            assert vma - ema == vmb - emb
            assert not sub.inverted_edges()

    def test_edge_lower_bound(self):
        rng = random.Random(99)
        for _ in range(40):
            gr = quotient(mirrored_action(rng))
            _, em = gr.mass_totals()
            assert gr.e_r >= em - gr.e_h

    def test_half_edge_pair_stabilizer_index(self):
        # the set stabilizer of {e, bar e} above a half-edge has index 2
        # over the directed stabilizer
        rng = random.Random(7)
        found = 0
        for _ in range(30):
            act = mirrored_action(rng)
            group = act.group
            for u, v in act.inverted_edges():
                directed = sum(1 for g in group if (g[u], g[v]) == (u, v))
                setwise = sum(1 for g in group
                              if {g[u], g[v]} == {u, v})
                assert setwise == 2 * directed
                found += 1
        assert found >= 10


class TestMassMultiplicativity:
    def test_s3_a3(self):
        s3 = [(1, 0, 2), (1, 2, 0)]
        a3 = [(1, 2, 0)]
        assert verify_mass_multiplicativity(s3, a3, 3)
        assert set_orbit_mass(close_group(a3), 3) == 1
        assert set_orbit_mass(close_group(s3), 3) == Fraction(1, 2)

    def test_whole_group(self):
        g = [(1, 2, 3, 0)]
        assert verify_mass_multiplicativity(g, g, 4)

    def test_z4_translation(self):
        z4 = [(1, 2, 3, 0)]
        sub = [(2, 3, 0, 1)]
        assert verify_mass_multiplicativity(z4, sub, 4)
        assert set_orbit_mass(close_group(sub), 4) == 2

    def test_random_group_subgroup_pairs(self):
        rng = random.Random(515151)
        checked = 0
        while checked < 200:
            n = rng.randint(3, 7)
            gens = []
            for _ in range(rng.randint(1, 2)):
                p = list(range(n))
                rng.shuffle(p)
                gens.append(tuple(p))
            try:
                big = close_group(gens, cap=5040)
            except ValueError:
                continue
            # subgroup generated by squares of the generators
            sub_gens = [tuple(g[g[i]] for i in range(n)) for g in gens]
            assert verify_mass_multiplicativity(gens, sub_gens, n)
            checked += 1

    def test_graph_mass_multiplicativity(self):
        # VM and EM of the finer quotient are d times the coarser
        rng = random.Random(31415)
        for _ in range(25):
            act = mirrored_action(rng, max_nodes=6)
            sub_gens = [act.generators[0]]  # the mirror swap alone
            sub = GraphAction(act.n_vertices, act.edges, sub_gens)
            d = len(act.group) // len(sub.group)
            vma, ema = quotient(act).mass_totals()
            vmb, emb = quotient(sub).mass_totals()
            assert vmb == d * vma and emb == d * ema


class TestRegularity:
    def make_ball(self):
        # depth-2 ball of the 3-regular tree: 0 center, 1-3 middle, 4-9 leaves
        edges = [(0, 1), (0, 2), (0, 3),
                 (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]
        rot = (0, 2, 3, 1, 6, 7, 8, 9, 4, 5)
        swap45 = (0, 1, 2, 3, 5, 4, 6, 7, 8, 9)
        return tree_action(10, edges, [rot, swap45])

    def test_star_identity_interior(self):
        act = self.make_ball()
        gr = quotient(act)
        interior_orbits = {f"v{min(orb)}" for orb in act.vertex_orbits()
                           if min(orb) <= 3}
        for v in interior_orbits:
            star = [e for e, o in gr.edge_origin.items() if o == v]
            lhs = 3 * gr.vertex_mass[v]
            rhs = sum(gr.edge_mass[e] for e in star)
            assert lhs == rhs

    def test_three_regular_graph_vm_em(self):
        # K_(3,3) is 3-regular; k VM = 2 EM holds for its quotients
        edges = [(u, v) for u in range(3) for v in range(3, 6)]
        rot = (1, 2, 0, 4, 5, 3)
        flip = (3, 4, 5, 0, 1, 2)
        for gens in ([rot], [flip], [rot, flip]):
            act = GraphAction(6, edges, gens)
            vm, em = quotient(act).mass_totals()
            assert 3 * vm == 2 * em


class TestCorank:
    def test_delegates_to_genus(self):
        gr = quotient(single_edge_swap())
        assert corank_from_quotient(gr) == 0

    def test_loop(self):
        gr = KuriharaGraph()
        gr.add_vertex("a")
        gr.add_edge_pair("e", "f", "a", "a")
        assert corank_from_quotient(gr) == 1


class TestSerialization:
    def test_round_trip(self):
        gr = quotient(single_edge_swap())
        text = gr.serialize()
        back = KuriharaGraph.deserialize(text)
        assert set(back.vertices) == set(gr.vertices)
        assert back.edge_bar == gr.edge_bar
        assert back.edge_origin == gr.edge_origin
        assert len(back.half_edges()) == 1

    def test_half_edge_iff_self_bar(self):
        gr = KuriharaGraph()
        gr.add_vertex("x")
        gr.add_half_edge("h", "x")
        text = gr.serialize()
        assert "E h h x" in text
