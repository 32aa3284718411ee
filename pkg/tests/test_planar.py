import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
import gadgets
from twodist import (
    DegreeBudgetExceeded,
    EmbeddingInvalid,
    NotACutVertex,
    NotConnected,
    PlanarGraph,
    SurgeryDisconnects,
    SurgeryNotPlanar,
    UnknownVertex,
    articulation_points,
    distance_profile,
    gen_planar,
    is_cut_vertex,
    split_at,
    square,
    surgery,
    trace_faces,
)

seeds = st.integers(min_value=0, max_value=10**6)


class TestConstruction:
    def test_triangle(self):
        g = PlanarGraph([(2, 3), (3, 1), (1, 2)])
        assert g.n == 3 and g.m == 3
        assert len(trace_faces(g)) == 2

    def test_rejects_asymmetric_rotation(self):
        with pytest.raises(EmbeddingInvalid):
            PlanarGraph([(2,), ()])

    def test_rejects_self_loop(self):
        with pytest.raises(EmbeddingInvalid):
            PlanarGraph([(1, 2), (1,)])

    def test_rejects_repeated_neighbor(self):
        with pytest.raises(EmbeddingInvalid):
            PlanarGraph([(2, 2), (1, 1)])

    def test_rejects_disconnected(self):
        with pytest.raises(NotConnected):
            PlanarGraph([(2,), (1,), (4,), (3,)])

    def test_rejects_nonplanar_rotation(self):
        # K5 admits no rotation system with Euler count 2
        rot = [tuple(u for u in range(1, 6) if u != v) for v in range(1, 6)]
        with pytest.raises(EmbeddingInvalid):
            PlanarGraph(rot)

    def test_single_vertex_and_empty(self):
        assert PlanarGraph([()]).n == 1
        assert PlanarGraph([]).n == 0


class TestTraceFaces:
    def test_k4_four_triangles(self):
        faces = trace_faces(gadgets.complete4())
        assert len(faces) == 4
        assert all(f.degree == 3 for f in faces)

    def test_hexagon_two_faces(self):
        faces = trace_faces(gadgets.cycle(6))
        assert sorted(f.degree for f in faces) == [6, 6]

    def test_octahedron(self):
        g = gadgets.octahedron()
        faces = trace_faces(g)
        assert len(faces) == 8
        assert all(f.degree == 3 for f in faces)
        assert g.n - g.m + len(faces) == 2

    @pytest.mark.parametrize(
        "build", [gadgets.cube, gadgets.icosahedron, gadgets.two_triangles]
    )
    def test_face_degree_sum_is_2m(self, build):
        g = build()
        assert sum(f.degree for f in trace_faces(g)) == 2 * g.m

    def test_every_dart_used_once(self):
        g = gadgets.wheel(6)
        darts = []
        faces = trace_faces(g)
        dart_face = g.dart_face_map()
        for f in faces:
            b = f.boundary
            darts += [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]
        assert len(darts) == 2 * g.m
        assert len(set(darts)) == 2 * g.m
        assert set(dart_face) == set(darts)


class TestDistanceProfile:
    def test_c5_all_within_two(self):
        g = gadgets.cycle(5)
        assert distance_profile(g, 1).d2 == 4

    def test_star_center_and_leaf(self):
        g = gadgets.star(6)
        assert distance_profile(g, 1).d2 == 6
        assert distance_profile(g, 2).d2 == 6

    def test_octahedron_diameter_two(self):
        # brute-force BFS: every other vertex is within distance 2
        g = gadgets.octahedron()
        for v in g.vertices():
            dist = bruteforce.bfs_distances(g, v)
            expect = {u for u, d in dist.items() if 1 <= d <= 2}
            prof = distance_profile(g, v)
            assert prof.n2 == expect
            assert prof.d2 == 5

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            distance_profile(gadgets.cycle(4), 9)

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_matches_pairwise_bfs(self, seed):
        g = gen_planar(6 + seed % 24, seed=seed)
        want = bruteforce.pairs_within_two(g)
        got = {
            (v, u)
            for v in g.vertices()
            for u in distance_profile(g, v).n2
            if v < u
        }
        assert got == want
        delta = g.max_degree()
        for v in g.vertices():
            prof = distance_profile(g, v)
            assert v not in prof.n2
            assert g.degree(v) <= prof.d2 <= delta * delta


class TestSquare:
    def test_square_c5_is_k5(self):
        sq = square(gadgets.cycle(5))
        assert all(len(sq[v]) == 4 for v in sq)

    def test_square_star_is_k7(self):
        sq = square(gadgets.star(6))
        assert all(len(sq[v]) == 6 for v in sq)

    def test_square_c6_four_regular(self):
        sq = square(gadgets.cycle(6))
        assert all(len(sq[v]) == 4 for v in sq)

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_square_degree_equals_d2(self, seed):
        g = gen_planar(6 + seed % 30, seed=seed)
        sq = square(g)
        for v in g.vertices():
            assert len(sq[v]) == distance_profile(g, v).d2


class TestSurgery:
    def test_delete_degree2_and_close(self):
        # a-v-b inside C4: delete v=2, add edge 1-3
        g = gadgets.cycle(4)
        res = surgery(g, delete_vertices=[2], add_edges=[(1, 3)])
        assert res.graph.n == 3 and res.graph.m == 3
        assert len(trace_faces(res.graph)) == 2
        assert res.old_to_new == {1: 1, 3: 2, 4: 3}

    def test_chord_across_c4(self):
        g = gadgets.cycle(4)
        res = surgery(g, add_edges=[(1, 3)])
        faces = trace_faces(res.graph)
        assert res.graph.n - res.graph.m + len(faces) == 2
        assert sorted(f.degree for f in faces) == [3, 3, 4]

    def test_delete_wheel_hub(self):
        g = gadgets.wheel(6)
        res = surgery(g, delete_vertices=[1])
        assert res.graph == gadgets.cycle(6)
        assert sorted(f.degree for f in trace_faces(res.graph)) == [6, 6]

    def test_existing_edge_skipped_silently(self):
        g = gadgets.complete4()
        res = surgery(g, add_edges=[(1, 2)])
        assert res.graph == g

    def test_no_shared_face_rejected(self):
        g = gadgets.cube()
        with pytest.raises(SurgeryNotPlanar):
            surgery(g, add_edges=[(1, 7)])

    def test_disconnecting_deletion_rejected(self):
        g = gadgets.path(3)
        with pytest.raises(SurgeryDisconnects):
            surgery(g, delete_vertices=[2])

    def test_degree_cap(self):
        g = gadgets.cycle(4)
        with pytest.raises(DegreeBudgetExceeded):
            surgery(g, add_edges=[(1, 3)], max_degree=2)
        surgery(g, add_edges=[(1, 3)], max_degree=3)

    def test_deleting_unknown_edge(self):
        with pytest.raises(UnknownVertex):
            surgery(gadgets.cycle(4), delete_edges=[(1, 3)])

    def test_edge_deletion_only(self):
        g = gadgets.complete4()
        res = surgery(g, delete_edges=[(1, 2)])
        assert res.graph.m == 5
        assert res.old_to_new == {v: v for v in range(1, 5)}

    @settings(max_examples=20, deadline=None)
    @given(seeds)
    def test_euler_holds_after_random_edge_deletion(self, seed):
        g = gen_planar(8 + seed % 20, seed=seed)
        edges = sorted(g.edges())
        u, v = edges[seed % len(edges)]
        try:
            res = surgery(g, delete_edges=[(u, v)])
        except SurgeryDisconnects:
            return
        faces = trace_faces(res.graph)
        assert res.graph.n - res.graph.m + len(faces) == 2


class TestCutVertices:
    def test_path_middle(self):
        g = gadgets.path(3)
        assert is_cut_vertex(g, 2)
        assert not is_cut_vertex(g, 1)
        parts = split_at(g, 2)
        assert parts.g1.n == 2 and parts.g2.n == 2

    def test_cycle_has_none(self):
        g = gadgets.cycle(5)
        assert articulation_points(g) == set()
        assert not any(is_cut_vertex(g, v) for v in g.vertices())

    def test_two_triangles(self):
        g = gadgets.two_triangles()
        assert articulation_points(g) == {1}
        parts = split_at(g, 1)
        for part in (parts.g1, parts.g2):
            assert part.n == 3 and part.m == 3
        # both parts contain the cut vertex and are strictly smaller
        assert 1 in parts.map1 and 1 in parts.map2
        assert parts.g1.size() < g.size() and parts.g2.size() < g.size()
        assert (parts.g1.n - 1) + (parts.g2.n - 1) == g.n - 1

    def test_not_a_cut_vertex(self):
        with pytest.raises(NotACutVertex):
            split_at(gadgets.cycle(5), 1)

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_articulation_matches_per_vertex_check(self, seed):
        g = gen_planar(6 + seed % 25, seed=seed)
        cuts = articulation_points(g)
        for v in g.vertices():
            assert (v in cuts) == is_cut_vertex(g, v)
