import pytest

import pmkit as pk
from pmkit import errors
from pmkit.decomposition import corner_regions_disjoint

from conftest import LABELS


def _sep(labels, *coloops):
    return pk.MaxSepMatroid(tuple(labels), frozenset(coloops))


# The published two-element class catalog at k=8, n=2: fourteen residual
# tables crossed with three separator patterns.
CLASS_TABLE_TAUS = {
    1: (0, 0, 0, 0), 2: (0, 0, 1, 1), 3: (0, 0, 2, 2),
    4: (0, 1, 0, 1), 5: (0, 1, 1, 2), 6: (0, 1, 2, 3),
    7: (0, 2, 0, 2), 8: (0, 2, 1, 3), 9: (0, 2, 2, 4),
    10: (0, 1, 1, 1), 11: (0, 1, 2, 2), 12: (0, 2, 1, 2),
    13: (0, 2, 2, 3), 14: (0, 2, 2, 2),
}
CLASS_TABLE_SEPS = {1: (), 2: ("f",), 3: ("e", "f")}


def class_table_members():
    for tau_ranks in CLASS_TABLE_TAUS.values():
        for coloops in CLASS_TABLE_SEPS.values():
            tau = pk.RankTable(("e", "f"), 2, tau_ranks)
            sep = _sep(("e", "f"), *coloops)
            yield tau + 6 * sep.to_rank_table(), tau, sep


class TestCornerDecompose:
    def test_singleton_near_top(self):
        for k in (3, 5, 8):
            d = pk.corner_decompose(pk.singleton(k - 1, k), 1)
            assert d.tau.ranks == (0, 0) and d.sep.coloops == {"e"}

    def test_doubleton_shared_point(self):
        for k in (4, 8):
            d = pk.corner_decompose(pk.doubleton(k, k, 2 * k - 1, k), 1)
            assert d.tau.ranks == (0, 1, 1, 1)
            assert d.sep.coloops == {"e", "f"}

    def test_midrank_singleton_not_decomposable(self):
        with pytest.raises(errors.NotDecomposable):
            pk.corner_decompose(pk.singleton(4, 8), 1)

    def test_uniqueness_regime_guard(self, example_rho):
        with pytest.raises(errors.UniquenessRegimeViolated):
            pk.corner_decompose(example_rho, 2)  # needs 2n+1 <= k = 3

    def test_reconstruction(self):
        for rho, tau, sep in class_table_members():
            d = pk.corner_decompose(rho, 2)
            assert d.reconstruct(rho.k) == rho
            assert d.tau == tau and d.sep == sep


class TestExhaustive:
    def test_trivial_at_n_equals_k(self, example_rho):
        found = pk.corner_decompose_exhaustive(example_rho, example_rho.k)
        assert any(not d.sep.coloops and d.tau.ranks == example_rho.ranks
                   for d in found)

    def test_agrees_with_forced_rule_in_regime(self, small_tables):
        for (n, k), tables in small_tables.items():
            for rho in tables:
                for level in range((k - 1) // 2 + 1):
                    found = pk.corner_decompose_exhaustive(rho, level)
                    assert len(found) <= 1
                    try:
                        direct = pk.corner_decompose(rho, level)
                        assert found == [direct]
                    except errors.NotDecomposable:
                        assert found == []

    def test_worked_example_has_none_at_one(self, example_rho):
        assert pk.corner_decompose_exhaustive(example_rho, 1) == []


class TestEssentialBound:
    def test_full_rank_singleton_is_zero(self):
        for k in (1, 3, 8):
            level, d = pk.essential_bound(pk.singleton(k, k))
            assert level == 0 and d.sep.coloops == {"e"}

    def test_rank_one_singleton_at_k3(self):
        level, d = pk.essential_bound(pk.singleton(1, 3))
        assert level == 1 and not d.sep.coloops

    def test_published_doubleton_rows_bounded_by_one(self):
        k = 4
        rows = [(k - 1, k - 1, 2 * k - 2), (k, k, 2 * k - 1), (k, k, 2 * k),
                (1, k - 1, k), (1, k, k), (1, k, k + 1), (k - 1, k, 2 * k - 1)]
        for triple in rows:
            level, _ = pk.essential_bound(pk.doubleton(*triple, k))
            assert level <= 1

    def test_worked_example_bound(self, example_rho):
        level, d = pk.essential_bound(example_rho)
        assert level == 2
        # two decompositions exist at n=2; the least coloop set wins
        assert d.sep.coloops == {"e"}
        assert d.reconstruct(3) == example_rho

    def test_inconsistent_published_confinement_example(self):
        # singletons 3, doubletons 5: with total rank 5 nothing below n=3
        # works; with total rank 6 the bound is 2 with all coloops
        flat = pk.RankTable(LABELS, 3, (0, 3, 3, 5, 3, 5, 5, 5))
        assert pk.essential_bound(flat)[0] == 3
        permu = pk.RankTable(LABELS, 3, (0, 3, 3, 5, 3, 5, 5, 6))
        level, d = pk.essential_bound(permu)
        assert level == 2 and d.sep.coloops == {"e", "f", "g"}
        assert d.tau.ranks == (0, 2, 2, 3, 2, 3, 3, 3)


class TestGlue:
    def test_reproduces_direct_on_class_table(self):
        for rho, _, _ in class_table_members():
            direct = pk.corner_decompose(rho, 2)
            glued = pk.glue_decomposition(
                rho, "e",
                pk.corner_decompose(rho.delete(["e"]), 2),
                pk.corner_decompose(rho.contract(["e"]), 2),
                pk.corner_decompose(rho.restrict(["e"]), 2))
            assert glued.tau == direct.tau and glued.sep == direct.sep

    def test_direct_sum_splits(self):
        left = 7 * pk.uniform(1, 1, ("e",))
        right = 2 * pk.uniform(1, 1, ("f",))
        rho = pk.direct_sum(left + 1 * pk.uniform(0, 1, ("e",)),
                            right + 6 * pk.uniform(0, 1, ("f",)))
        assert rho.k == 8
        d = pk.corner_decompose(rho, 2)
        glued = pk.glue_decomposition(
            rho, "e",
            pk.corner_decompose(rho.delete(["e"]), 2),
            pk.corner_decompose(rho.contract(["e"]), 2),
            pk.corner_decompose(rho.restrict(["e"]), 2))
        assert glued.tau == d.tau and glued.sep == d.sep
        assert d.sep.coloops == {"e"}

    def test_three_element_random(self, random_tables):
        hits = 0
        for rho in random_tables(80, n=3, k=4):
            try:
                direct = pk.corner_decompose(rho, 1)
            except errors.PmkitError:
                continue
            glued = pk.glue_decomposition(
                rho, "e",
                pk.corner_decompose(rho.delete(["e"]), 1),
                pk.corner_decompose(rho.contract(["e"]), 1),
                pk.corner_decompose(rho.restrict(["e"]), 1))
            assert glued.tau == direct.tau and glued.sep == direct.sep
            hits += 1
        assert hits > 0

    def test_level_mismatch(self, example_rho):
        rho = pk.doubleton(8, 8, 16, 8)
        with pytest.raises(errors.LevelMismatch):
            pk.glue_decomposition(
                rho, "e",
                pk.corner_decompose(rho.delete(["e"]), 0),
                pk.corner_decompose(rho.contract(["e"]), 1),
                pk.corner_decompose(rho.restrict(["e"]), 0))

    def test_regime_guard(self):
        rho = pk.doubleton(3, 3, 6, 3)
        with pytest.raises(errors.RegimeViolated):
            pk.glue_decomposition(
                rho, "e",
                pk.corner_decompose(rho.delete(["e"]), 1),
                pk.corner_decompose(rho.contract(["e"]), 1),
                pk.corner_decompose(rho.restrict(["e"]), 1))


class TestDecomposeViaMinors:
    def test_class_table_members_succeed(self):
        for rho, tau, sep in class_table_members():
            d = pk.decompose_via_minors(rho, 2)
            assert d.tau == tau and d.sep == sep

    def test_midband_restriction_named_in_failure(self):
        rho = pk.doubleton(4, 7, 8, 8)  # rank 4 sits in the excluded band
        with pytest.raises(errors.MinorNotDecomposable) as exc:
            pk.decompose_via_minors(rho, 2)
        assert "e" in exc.value.details["minor"]

    def test_empty_table(self):
        d = pk.decompose_via_minors(pk.RankTable((), 8, (0,)), 2)
        assert d.tau.labels == ()

    def test_three_elements(self, random_tables):
        for rho in random_tables(40, n=3, k=7):
            try:
                direct = pk.corner_decompose(rho, 2)
            except errors.PmkitError:
                continue
            d = pk.decompose_via_minors(rho, 2)
            assert d.tau == direct.tau and d.sep == direct.sep


class TestCompressionCollapse:
    def test_saturated_level_is_contraction(self):
        rho = pk.doubleton(6, 2, 8, 8)  # essentially 2-bounded
        level, _ = pk.essential_bound(rho)
        assert level == 2
        assert pk.compression_collapse(rho, "f", 6) == "contraction"

    def test_low_level_is_deletion(self):
        rho = pk.doubleton(6, 2, 8, 8)
        assert pk.compression_collapse(rho, "e", 2) == "deletion"

    def test_full_rank_singleton_trivial(self):
        rho = pk.singleton(8, 8)
        tag = pk.compression_collapse(rho, "e", 0)
        assert tag in ("deletion", "contraction")

    def test_hypothesis_guard(self):
        rho = pk.doubleton(6, 2, 8, 8)
        with pytest.raises(errors.HypothesisViolated):
            pk.compression_collapse(rho, "e", 7)

    def test_sweep_matches_minor(self, small_tables):
        for (n, k), tables in small_tables.items():
            if k != 4 or n == 0:
                continue
            for rho in tables:
                level, _ = pk.essential_bound(rho)
                for name in rho.labels:
                    for lvl in range(level, k - level + 1):
                        tag = pk.compression_collapse(rho, name, lvl)
                        target = (rho.contract([name]) if tag == "contraction"
                                  else rho.delete([name]))
                        assert pk.compress(rho, name, lvl) == target


class TestConfinement:
    def test_class_table_members_confined(self):
        for rho, _, _ in class_table_members():
            d = pk.corner_decompose(rho, 2)
            assert pk.corner_confinement(rho, d)
            # base lattice points stay in [0,2] or [6,8] per coordinate
            for point in pk.lattice_points(rho, restrict_to_base=True):
                for x, name in zip(point, rho.labels):
                    anchor = 6 if name in d.sep.coloops else 0
                    assert anchor <= x <= anchor + 2

    def test_whole_cube_at_n_equals_k(self, example_rho):
        found = pk.corner_decompose_exhaustive(example_rho, example_rho.k)
        assert pk.corner_confinement(example_rho, found[0])

    def test_random_decomposable(self, random_tables):
        for rho in random_tables(40, n=3, k=4):
            for level in (0, 1):
                try:
                    d = pk.corner_decompose(rho, level)
                except errors.PmkitError:
                    continue
                assert pk.corner_confinement(rho, d)


class TestRegions:
    def test_disjoint_iff_small_edge(self):
        for k in range(1, 9):
            for n in range(0, k + 1):
                assert corner_regions_disjoint(k, n, 2) == (2 * n < k)


class TestDoubletonCanonicalTau:
    def test_low_low_row_keeps_ranks(self):
        d = pk.doubleton_canonical_tau(1, 2, 2, 3, 8)
        assert not d.sep.coloops
        assert d.tau.ranks == (0, 1, 2, 2)

    def test_shared_overlap_two(self):
        d = pk.doubleton_canonical_tau(8, 8, 14, 3, 8)
        assert d.sep.coloops == {"e", "f"}
        assert d.tau.ranks == (0, 2, 2, 2)  # twice the shared point

    def test_zero_overlap_splits(self):
        d = pk.doubleton_canonical_tau(1, 8, 9, 3, 8)
        assert d.tau.ranks == (0, 1, 2, 3)
        assert d.sep.coloops == {"f"}

    def test_beta_invariant_bounds(self):
        spec = pk.ClassSpec(3, 7, 8)
        for triple in pk.minors.doubleton_row_triples(spec, (1, 2, 4)):
            d = pk.doubleton_canonical_tau(*triple, 3, 8)
            beta = d.tau.ranks[1] + d.tau.ranks[2] - d.tau.ranks[3]
            assert 0 <= beta <= min(d.tau.ranks[1], d.tau.ranks[2])

    def test_not_in_table(self):
        with pytest.raises(errors.NotInTable):
            pk.doubleton_canonical_tau(4, 7, 8, 3, 8)  # rank 4 in mid band
        with pytest.raises(errors.NotInTable):
            pk.doubleton_canonical_tau(6, 6, 9, 3, 8)  # total in excluded rows
        with pytest.raises(errors.NotInTable):
            pk.doubleton_canonical_tau(2, 8, 6, 3, 8)  # not monotone
