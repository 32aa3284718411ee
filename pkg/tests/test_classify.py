from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import gadgets
from twodist import (
    classify_all,
    classify_vertex,
    gen_planar,
    is_bad4,
    is_bad5,
    is_special_vertex,
    neighbor_profile,
    articulation_points,
    surgery,
    trace_faces,
)
from twodist.classify import charge_after_r1_r2, count_incidences

seeds = st.integers(min_value=0, max_value=10**6)


def prof(g, v):
    return classify_vertex(g, trace_faces(g), v)


class TestClassifyVertex:
    def test_octahedron_all_44(self):
        g = gadgets.octahedron()
        for v in g.vertices():
            vc = prof(g, v)
            assert (vc.k, vc.t3, vc.t4) == (4, 4, 0)

    def test_wheel6_hub_is_66(self):
        vc = prof(gadgets.wheel(6), 1)
        assert vc.is_kd(6, 6)

    def test_c6_vertices(self):
        vc = prof(gadgets.cycle(6), 1)
        assert (vc.k, vc.t3, vc.t4, vc.t5p) == (2, 0, 0, 2)
        assert vc.special

    def test_icosahedron_not_special(self):
        # every neighborhood edge lies in two triangles
        g = gadgets.icosahedron()
        for v in g.vertices():
            vc = prof(g, v)
            assert vc.is_kd(5, 5)
            assert not vc.special

    def test_counts_sum_to_degree_without_cut_vertices(self):
        for g in (gadgets.octahedron(), gadgets.wheel(6), gadgets.cube()):
            assert not articulation_points(g)
            faces = trace_faces(g)
            for v in g.vertices():
                vc = classify_vertex(g, faces, v)
                assert vc.t3 + vc.t4 + vc.t5p == vc.k


class TestBadFlags:
    def test_44_vertex_is_bad(self):
        g = gadgets.octahedron()
        assert is_bad4(g, trace_faces(g), 1)
        assert charge_after_r1_r2(4, 4, 0, delta=4) == Fraction(-4, 3)

    def test_40_vertex_is_not_bad(self):
        g = gadgets.grid_plus()
        vc = prof(g, 1)
        assert (vc.k, vc.t3, vc.t4) == (4, 0, 4)
        assert not vc.bad4

    def test_53_vertex_is_not_bad(self):
        # wheel with two non-adjacent rim edges removed: hub is a (5,3)
        g = gadgets.wheel(5)
        res = surgery(g, delete_edges=[(2, 3), (4, 5)])
        h = res.graph
        vc = prof(h, 1)
        assert vc.is_kd(5, 3)
        assert not is_bad5(h, trace_faces(h), 1)

    def test_54_vertex_is_bad(self):
        g = gadgets.g_L2_9_or_10(True)
        assert is_bad5(g, trace_faces(g), 1)

    def test_bad_flags_only_for_matching_degree(self):
        g = gadgets.wheel(6)
        faces = trace_faces(g)
        assert not is_bad4(g, faces, 1)  # hub has degree 6
        assert not is_bad5(g, faces, 1)


class TestNeighborProfile:
    def test_wheel6_hub_sees_six_32(self):
        g = gadgets.wheel(6)
        profiles = neighbor_profile(g, trace_faces(g), 1)
        assert len(profiles) == 6
        assert all(vc.is_kd(3, 2) for vc in profiles)

    def test_octahedron_sees_four_44(self):
        g = gadgets.octahedron()
        profiles = neighbor_profile(g, trace_faces(g), 1)
        assert [vc.signature for vc in profiles] == [(4, 4, 0)] * 4

    def test_k4_sees_three_33(self):
        g = gadgets.complete4()
        profiles = neighbor_profile(g, trace_faces(g), 1)
        assert all(vc.is_kd(3, 3) for vc in profiles)


class TestInvariants:
    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_triangle_incidence_sum(self, seed):
        g = gen_planar(8 + seed % 30, seed=seed)
        if articulation_points(g):
            return
        faces = trace_faces(g)
        t3_total, triangles = count_incidences(g, faces)
        assert t3_total == 3 * triangles
        t4_total = sum(classify_vertex(g, faces, v).t4 for v in g.vertices())
        assert t4_total == 4 * sum(1 for f in faces if f.degree == 4)

    def test_special_monotone_under_triangle_edge_removal(self):
        # deleting an edge only merges faces, so a special vertex stays special
        g = gadgets.icosahedron()
        before = {v: prof(g, v).special for v in g.vertices()}
        res = surgery(g, delete_edges=[(2, 3)])
        h = res.graph
        faces_h = trace_faces(h)
        for v in h.vertices():
            if before[v]:
                assert is_special_vertex(h, faces_h, v)

    def test_classification_ignores_colorings(self):
        # classify depends only on the (graph, faces) pair: recomputing from
        # an equal graph gives identical profiles
        g1 = gadgets.g_L2_10_3()
        g2 = gadgets.g_L2_10_3()
        f1, f2 = trace_faces(g1), trace_faces(g2)
        assert classify_all(g1, f1) == classify_all(g2, f2)
