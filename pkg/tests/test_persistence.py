import numpy as np
import pytest

from percyc import (
    Cell,
    Chain,
    Filtration,
    InvalidFiltrationError,
    barcode_h1,
    compute_pairs,
    homology_coordinates,
)
from percyc.persistence import NEGATIVE, NEITHER, POSITIVE

from conftest import random_rips, random_small_rips
from oracles import bounds_by_enumeration, h1_rank_at, naive_h1_pairing


class TestComputePairs:
    def test_triangle(self, triangle):
        p = compute_pairs(triangle)
        assert p.pairs == {6: 7}
        assert p.essential == frozenset()

    def test_square_boundary(self, square_boundary):
        p = compute_pairs(square_boundary)
        assert p.pairs == {}
        assert p.essential == frozenset({8})

    def test_empty(self):
        p = compute_pairs(Filtration(()))
        assert p.pairs == {} and p.essential == frozenset()

    def test_invalid_rejected(self):
        f = Filtration((Cell(1, 0), Cell(2, 1, (1, 3)), Cell(3, 0)))
        with pytest.raises(InvalidFiltrationError):
            compute_pairs(f)

    def test_positivity_trichotomy(self, triangle):
        p = compute_pairs(triangle)
        assert p.positivity(6) == POSITIVE
        assert p.positivity(7) == NEGATIVE
        assert p.positivity(1) == NEITHER   # vertex
        assert p.positivity(4) == NEITHER   # component-merging edge

    def test_pairing_is_partial_injection(self):
        for seed in range(5):
            f = random_rips(seed)
            p = compute_pairs(f)
            assert len(set(p.pairs.values())) == len(p.pairs)
            for b, d in p.pairs.items():
                assert b < d
                assert f.cell(b).dim == 1 and f.cell(d).dim == 2


class TestBarcode:
    def test_triangle(self, triangle):
        bc = barcode_h1(triangle)
        assert [(iv.birth, iv.death) for iv in bc] == [(6, 7)]

    def test_square(self, square_boundary):
        bc = barcode_h1(square_boundary)
        assert [(iv.birth, iv.death) for iv in bc] == [(8, None)]

    def test_sorted_by_birth(self):
        for seed in range(5):
            bc = barcode_h1(random_rips(seed))
            births = [iv.birth for iv in bc]
            assert births == sorted(births)


class TestAgainstNaiveReduction:
    """The pairing is unique: any correct reduction must agree."""

    @pytest.mark.parametrize("seed", range(20))
    def test_random_rips(self, seed):
        f = random_rips(seed, max_cells=300)
        p = compute_pairs(f)
        pairs, essential = naive_h1_pairing(f)
        assert dict(p.pairs) == pairs
        assert set(p.essential) == essential

    def test_bar_count_equals_rank(self):
        # rank H1(K_i) == number of bars alive at i, checked by brute force
        for seed in (0, 1):
            f = random_small_rips(seed)
            bc = barcode_h1(f)
            for i in range(0, len(f) + 1, max(1, len(f) // 7)):
                alive = sum(1 for iv in bc if iv.contains_index(i))
                assert alive == h1_rank_at(f, i), f"seed {seed}, prefix {i}"


class TestHomologyCoordinates:
    def test_triangle_bounds_at_7(self, triangle):
        z = Chain(1, frozenset({4, 5, 6}))
        assert homology_coordinates(triangle, 7, z).is_zero

    def test_triangle_alive_at_6(self, triangle):
        z = Chain(1, frozenset({4, 5, 6}))
        vec = homology_coordinates(triangle, 6, z)
        assert not vec.is_zero
        assert vec.support == (6,)

    def test_empty_chain(self, triangle):
        assert homology_coordinates(triangle, 3, Chain(1)).is_zero

    def test_rejects_non_cycle(self, triangle):
        with pytest.raises(ValueError):
            homology_coordinates(triangle, 6, Chain(1, frozenset({4, 5})))

    def test_rejects_support_beyond_prefix(self, triangle):
        with pytest.raises(ValueError):
            homology_coordinates(triangle, 5, Chain(1, frozenset({4, 5, 6})))

    def test_linearity(self):
        f = random_small_rips(11)
        from percyc.persistence import get_reduction

        red = get_reduction(f)
        positive = [e for e in red.positive_edges]
        if len(positive) < 2:
            pytest.skip("instance has too little homology")
        d = len(f)
        z1 = Chain(1, frozenset(red.ids_of_mask(red.fundamental_cycle(positive[0]))))
        z2 = Chain(1, frozenset(red.ids_of_mask(red.fundamental_cycle(positive[1]))))
        lhs = homology_coordinates(f, d, z1 + z2)
        rhs = homology_coordinates(f, d, z1) + homology_coordinates(f, d, z2)
        assert lhs == rhs
        assert lhs.support == rhs.support

    # seeds chosen to stay within the enumeration oracle's 15 two-cell cap
    @pytest.mark.parametrize("seed", [0, 1, 6, 8, 9, 10, 14, 16])
    def test_bounds_iff_zero_against_enumeration(self, seed):
        f = random_small_rips(seed)
        assert sum(1 for c in f.cells if c.dim == 2) <= 15
        from percyc.persistence import get_reduction

        red = get_reduction(f)
        rng = np.random.default_rng(seed)
        positives = list(red.positive_edges)
        if not positives:
            pytest.skip("no cycles at all")
        for _ in range(8):
            # random cycle: random combination of fundamental cycles
            mask = 0
            for g in positives:
                if rng.integers(2):
                    mask ^= red.fundamental_cycle(g)
            z = Chain(1, frozenset(red.ids_of_mask(mask)))
            for d in (max(positives), len(f)):
                expected = bounds_by_enumeration(f, d, z.cells)
                assert homology_coordinates(f, d, z).is_zero == expected
