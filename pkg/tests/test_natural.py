import itertools

import pytest

import pmkit as pk
from pmkit import errors
from pmkit.natural import (
    MultisetRankGrid,
    clone_check,
    counts_of_subset,
    expanded_ranks,
    minor_multiset_rank,
    multiset_rank,
    multiset_rank_oracle,
    natural_rank,
    partition_map,
)

# the 16 published grid values for rho(e)=3, rho(f)=2, rho(ef)=4, k=3
EXAMPLE_GRID = {
    (0, 0): 0, (0, 1): 1, (0, 2): 2, (0, 3): 2,
    (1, 0): 1, (1, 1): 2, (1, 2): 3, (1, 3): 3,
    (2, 0): 2, (2, 1): 3, (2, 2): 4, (2, 3): 4,
    (3, 0): 3, (3, 1): 4, (3, 2): 4, (3, 3): 4,
}


class TestPartitionMap:
    def test_worked_first_set(self, example_rho):
        clones = [("e", 2), ("f", 1), ("f", 2), ("f", 3)]
        assert partition_map(example_rho, clones) == (1, 3)

    def test_empty(self, example_rho):
        assert partition_map(example_rho, []) == (0, 0)

    def test_worked_second_set(self, example_rho):
        clones = [("e", 1), ("e", 3), ("f", 2)]
        assert partition_map(example_rho, clones) == (2, 1)

    def test_rejections(self, example_rho):
        with pytest.raises(errors.UnknownElement):
            partition_map(example_rho, [("z", 1)])
        with pytest.raises(errors.OutOfGrid):
            partition_map(example_rho, [("e", 4)])
        with pytest.raises(errors.OutOfGrid):
            partition_map(example_rho, [("e", 1), ("e", 1)])


class TestMultisetRank:
    def test_worked_values(self, example_rho):
        assert multiset_rank(example_rho, (1, 3)) == 3
        assert multiset_rank(example_rho, (2, 1)) == 3

    def test_zero(self, example_rho):
        assert multiset_rank(example_rho, (0, 0)) == 0

    def test_grid_figure_value(self, example_rho):
        assert multiset_rank(example_rho, (3, 1)) == 4

    def test_full_grid(self, example_rho):
        for counts, value in EXAMPLE_GRID.items():
            assert multiset_rank(example_rho, counts) == value

    def test_out_of_grid(self, example_rho):
        with pytest.raises(errors.OutOfGrid):
            multiset_rank(example_rho, (4, 0))


class TestOracle:
    def test_worked_value(self, example_rho):
        assert multiset_rank_oracle(example_rho, (2, 1)) == 3

    def test_single_coordinate(self, example_rho):
        for q in range(4):
            assert multiset_rank_oracle(example_rho, (0, q)) == min(q, 2)

    def test_full_grid_matches(self, example_rho):
        for counts, value in EXAMPLE_GRID.items():
            assert multiset_rank_oracle(example_rho, counts) == value

    def test_agrees_on_random_tables(self, random_tables):
        for rho in random_tables(25, n=2, k=4):
            for counts in itertools.product(range(5), repeat=2):
                assert (multiset_rank(rho, counts)
                        == multiset_rank_oracle(rho, counts))


class TestNaturalRank:
    def test_full_clone_sets_recover_ranks(self, random_tables):
        for rho in random_tables(15, n=2, k=3):
            for mask in range(4):
                clones = [(rho.labels[i], j + 1)
                          for i in range(2) if mask >> i & 1
                          for j in range(rho.k)]
                assert natural_rank(rho, clones) == rho.rank(mask)

    def test_empty(self, example_rho):
        assert natural_rank(example_rho, []) == 0

    def test_singleton_clone_subset(self):
        rho = pk.singleton(2, 4)
        clones = [("e", i) for i in range(1, 5)]
        assert natural_rank(rho, clones) == 2


class TestGrid:
    def test_lazy_and_eager_agree(self, example_rho):
        lazy = MultisetRankGrid(example_rho)
        eager = MultisetRankGrid(example_rho, eager=True)
        for counts in EXAMPLE_GRID:
            assert lazy.value_at(counts) == eager.value_at(counts)

    def test_rows_lexicographic(self, example_rho):
        rows = list(MultisetRankGrid(example_rho).rows())
        assert [c for c, _ in rows] == sorted(c for c in EXAMPLE_GRID)
        assert dict(rows) == EXAMPLE_GRID

    def test_zero_k_pattern_recovers_table(self, random_tables):
        for rho in random_tables(20):
            grid = MultisetRankGrid(rho)
            for mask in range(8):
                assert grid.value_at(counts_of_subset(rho, mask)) == rho.rank(mask)

    def test_unit_steps(self, random_tables):
        for rho in random_tables(10, n=2, k=4):
            grid = MultisetRankGrid(rho)
            for counts in itertools.product(range(4), repeat=2):
                here = grid.value_at(counts)
                for i in range(2):
                    bumped = list(counts)
                    bumped[i] += 1
                    assert grid.value_at(tuple(bumped)) - here in (0, 1)

    def test_monotone_and_submodular_on_grid(self, random_tables):
        for rho in random_tables(6, n=2, k=3):
            grid = MultisetRankGrid(rho)
            pts = list(itertools.product(range(4), repeat=2))
            for a in pts:
                for b in pts:
                    join = tuple(max(x, y) for x, y in zip(a, b))
                    meet = tuple(min(x, y) for x, y in zip(a, b))
                    assert (grid.value_at(a) + grid.value_at(b)
                            >= grid.value_at(join) + grid.value_at(meet))

    def test_deletion_slice(self, random_tables):
        for rho in random_tables(10, n=2, k=3):
            deleted = rho.delete(["e"])
            grid = MultisetRankGrid(rho)
            dgrid = MultisetRankGrid(deleted)
            for q in range(4):
                assert dgrid.value_at((q,)) == grid.value_at((0, q))

    def test_contraction_slice(self, random_tables):
        for rho in random_tables(10, n=2, k=3):
            contracted = rho.contract(["e"])
            grid = MultisetRankGrid(rho)
            cgrid = MultisetRankGrid(contracted)
            base = grid.value_at((3, 0))
            for q in range(4):
                assert cgrid.value_at((q,)) == grid.value_at((3, q)) - base

    def test_dual_grid_identity(self, random_tables):
        for rho in random_tables(10, n=2, k=4):
            k = rho.k
            grid = MultisetRankGrid(rho)
            dual_grid = MultisetRankGrid(rho.dual())
            top = grid.value_at((k, k))
            for counts in itertools.product(range(k + 1), repeat=2):
                flipped = tuple(k - c for c in counts)
                assert (dual_grid.value_at(counts)
                        == sum(counts) - top + grid.value_at(flipped))


class TestMinorMultisetRank:
    def test_no_contraction(self, example_rho):
        grid = MultisetRankGrid(example_rho)
        for counts in EXAMPLE_GRID:
            assert minor_multiset_rank(grid, (0, 0), counts) == EXAMPLE_GRID[counts]

    def test_worked_slice(self, example_rho):
        grid = MultisetRankGrid(example_rho)
        values = [minor_multiset_rank(grid, (2, 0), (0, q)) for q in (1, 2, 3)]
        assert values == [1, 2, 2]

    def test_grid_lookup(self, example_rho):
        grid = MultisetRankGrid(example_rho)
        assert minor_multiset_rank(grid, (3, 0), (0, 3)) == 1

    def test_out_of_grid(self, example_rho):
        grid = MultisetRankGrid(example_rho)
        with pytest.raises(errors.OutOfGrid):
            minor_multiset_rank(grid, (2, 0), (2, 0))


class TestCloneCheck:
    def test_worked_example(self, example_rho):
        assert clone_check(example_rho)

    def test_single_coloop(self):
        assert clone_check(pk.uniform(1, 1))

    def test_random_small_tables(self, random_tables):
        for rho in random_tables(10, n=2, k=3) + random_tables(10, n=2, k=4):
            assert clone_check(rho)

    def test_too_large(self):
        with pytest.raises(errors.TooLarge):
            clone_check(pk.singleton(3, 8) + pk.singleton(3, 9))
        with pytest.raises(errors.TooLarge):
            expanded_ranks(pk.RankTable(("e", "f", "g"), 6, tuple(
                min(2 * bin(m).count("1"), 6) for m in range(8))))

    def test_expansion_matches_defining_formula(self, example_rho):
        # spot-check a few subsets straight from the min-over-subsets form
        ranks = expanded_ranks(example_rho)
        k = example_rho.k
        # clones e1,e2,e3 then f1,f2,f3; subset {e2, f1, f2, f3}
        subset = (1 << 1) | (0b111 << k)
        assert ranks[subset] == 3
        subset = (1 << 0) | (1 << 2) | (1 << (k + 1))  # {e1, e3, f2}
        assert ranks[subset] == 3
