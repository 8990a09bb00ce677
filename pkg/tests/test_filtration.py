import pytest
from hypothesis import given
from hypothesis import strategies as st

from percyc import (
    Cell,
    Chain,
    Filtration,
    boundary,
    chain_boundary,
    one_skeleton_at,
    validate_filtration,
)

from conftest import make_triangle


class TestValidate:
    def test_triangle_is_valid(self, triangle):
        assert validate_filtration(triangle) == []

    def test_face_after_coface(self):
        f = Filtration((
            Cell(1, 0),
            Cell(2, 1, (1, 3)),  # references the vertex added after it
            Cell(3, 0),
        ))
        violations = validate_filtration(f)
        assert len(violations) == 1
        assert violations[0].cell_id == 2
        assert "face after coface" in violations[0].message

    def test_open_boundary(self):
        f = Filtration((
            Cell(1, 0), Cell(2, 0), Cell(3, 0),
            Cell(4, 1, (1, 2)), Cell(5, 1, (2, 3)),
            Cell(6, 2, (4, 5)),
        ))
        violations = validate_filtration(f)
        assert any(v.cell_id == 6 for v in violations)
        msgs = " ".join(v.message for v in violations if v.cell_id == 6)
        assert "2-cell with 2 boundary edges" in msgs or "open boundary" in msgs

    def test_open_boundary_parity(self):
        # three edges that form a path, not a loop
        f = Filtration((
            Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0),
            Cell(5, 1, (1, 2)), Cell(6, 1, (2, 3)), Cell(7, 1, (3, 4)),
            Cell(8, 2, (5, 6, 7)),
        ))
        violations = validate_filtration(f)
        assert [v.cell_id for v in violations] == [8]
        assert "open boundary" in violations[0].message

    def test_loop_edge_rejected(self):
        f = Filtration((Cell(1, 0), Cell(2, 1, (1, 1))))
        violations = validate_filtration(f)
        assert violations and violations[0].cell_id == 2

    def test_dimension_cap(self):
        f = Filtration((Cell(1, 3),))
        assert any("dimension" in v.message for v in validate_filtration(f))

    def test_negative_weight_rejected(self):
        f = Filtration((Cell(1, 0), Cell(2, 0), Cell(3, 1, (1, 2), -1.0)))
        assert any(v.cell_id == 3 for v in validate_filtration(f))

    def test_square_two_cell_accepted(self):
        f = Filtration((
            Cell(1, 0), Cell(2, 0), Cell(3, 0), Cell(4, 0),
            Cell(5, 1, (1, 2)), Cell(6, 1, (2, 3)), Cell(7, 1, (3, 4)), Cell(8, 1, (1, 4)),
            Cell(9, 2, (5, 6, 7, 8)),
        ))
        assert validate_filtration(f) == []


class TestBoundary:
    def test_edge(self, triangle):
        assert boundary(triangle, 4) == Chain(0, frozenset({1, 2}))

    def test_triangle(self, triangle):
        assert boundary(triangle, 7) == Chain(1, frozenset({4, 5, 6}))

    def test_vertex(self, triangle):
        assert boundary(triangle, 1) == Chain(-1, frozenset())

    def test_boundary_squared_is_zero(self, triangle):
        dd = chain_boundary(triangle, boundary(triangle, 7))
        assert not dd

    def test_unknown_id(self, triangle):
        with pytest.raises(KeyError):
            boundary(triangle, 99)

    def test_every_two_cell_dd_zero(self):
        for f in (make_triangle(),):
            for c in f.cells:
                if c.dim == 2:
                    assert not chain_boundary(f, boundary(f, c.id))


class TestChainAlgebra:
    ids = st.frozensets(st.integers(min_value=1, max_value=40), max_size=12)

    @given(ids, ids)
    def test_commutative(self, a, b):
        assert Chain(1, a) + Chain(1, b) == Chain(1, b) + Chain(1, a)

    @given(ids, ids, ids)
    def test_associative(self, a, b, c):
        x, y, z = Chain(1, a), Chain(1, b), Chain(1, c)
        assert (x + y) + z == x + (y + z)

    @given(ids)
    def test_self_inverse_and_identity(self, a):
        x = Chain(1, a)
        assert x + x == Chain(1)
        assert x + Chain(1) == x

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            Chain(1, frozenset({1})) + Chain(0, frozenset({1}))


class TestSkeleton:
    def test_empty_prefix(self, triangle):
        g = one_skeleton_at(triangle, 0)
        assert g.vertices() == []
        assert g.edges() == []

    def test_two_edges_make_a_path(self, triangle):
        g = one_skeleton_at(triangle, 5)
        assert g.edges() == [4, 5]
        assert g.degree(2) == 2
        assert g.degree(1) == 1

    def test_full_triangle_cycle(self, triangle):
        g = one_skeleton_at(triangle, 6)
        assert g.edges() == [4, 5, 6]
        assert all(g.degree(v) == 2 for v in (1, 2, 3))

    def test_edge_weights_attached(self, theta):
        g = one_skeleton_at(theta, 9)
        weights = {eid: w for _, eid, w in g.neighbors(1)}
        assert weights == {5: 1.0, 6: 1.0, 8: 1.5}

    def test_prefix_closed_under_boundary(self, triangle):
        for i in range(len(triangle) + 1):
            present = {c.id for c in triangle.cells[:i]}
            for cid in present:
                assert set(triangle.cell(cid).boundary) <= present

    def test_out_of_range(self, triangle):
        with pytest.raises(ValueError):
            one_skeleton_at(triangle, 8)
