import itertools

import pytest

from crystal_grid import g22, linalg, modules22 as ma
from crystal_grid.linalg import QQ
from crystal_grid.reps import direct_sum, g22_blocks, g22_dims


def test_catalog_has_eleven_interval_classes():
    assert sorted(ma.INTERVAL_DIMS) == list(range(1, 12))
    assert ma.PROJECTIVES == (4, 7, 8, 11)


def test_translation_quiver_arrows_carry_maps():
    assert len(ma.AR_QUIVER_ARROWS) == 14
    for src, dst in ma.AR_QUIVER_ARROWS:
        assert ma.hom_dim(src, dst) >= 1, (src, dst)


def test_full_interval_is_all_identities():
    rep = ma.indecomposable(11)
    assert g22_dims(rep) == (1, 1, 1, 1)
    for block in g22_blocks(rep):
        assert block == linalg.identity(QQ, 1)


def test_simple_at_source_corner():
    rep = ma.indecomposable(1)
    assert g22_dims(rep) == (1, 0, 0, 0)
    assert all(linalg.is_zero(b) for b in g22_blocks(rep))


def test_hook_through_sink():
    rep = ma.indecomposable(7)
    assert g22_dims(rep) == (0, 1, 0, 1)
    f12, f13, f24, f34 = g22_blocks(rep)
    assert f24 == linalg.identity(QQ, 1)


def test_hom_dims():
    assert ma.hom_dim(11, 11) == 1
    assert ma.hom_dim(11, 4) == 0
    assert ma.hom_dim(4, 11) == 1


def test_hom_accepts_multisets_and_reps():
    assert ma.hom_dim({4: 1, 11: 1}, {4: 1, 11: 1}) == 3
    rep = ma.multiset_rep({4: 1, 11: 1})
    assert ma.hom_dim(rep, rep) == 3


def test_hom_is_biadditive():
    for i, j in itertools.product((1, 4, 5, 10), repeat=2):
        ms = {i: 1}
        ms[j] = ms.get(j, 0) + 1
        split = ma.hom_dim(ms, {i: 1})
        merged = ma.hom_dim(direct_sum(ma.indecomposable(i), ma.indecomposable(j)),
                            ma.indecomposable(i))
        assert split == merged


def test_all_resolutions_are_exact():
    for k in range(1, 12):
        assert ma.verify_resolution_exact(k)


def test_ext_examples():
    assert ma.ext1_dim(1, 4) == 0
    assert ma.ext1_dim(5, 8) == 1
    assert ma.ext1_dim(2, 3) == 0
    assert all(ma.ext1_dim(7, j) == 0 for j in range(1, 12))


def test_ext_first_argument_projective_vanishes():
    for k in ma.PROJECTIVES:
        for j in range(1, 12):
            assert ma.ext1_dim(k, j) == 0


def test_ext_second_degree_only_from_longest_resolution():
    for i in range(1, 12):
        for j in range(1, 12):
            e2 = ma.ext2_dim(i, j)
            if i != 1:
                assert e2 == 0
    assert ma.ext2_dim(1, 4) == 1


def test_euler_characteristic_of_resolutions():
    for k in range(1, 12):
        res = ma.resolution(k)
        for j in range(1, 12):
            alternating = sum(ma.hom_dim(p, j) for p in res.p0)
            alternating -= sum(ma.hom_dim(p, j) for p in res.p1)
            alternating += sum(ma.hom_dim(p, j) for p in res.p2)
            assert alternating == ma.hom_dim(k, j) - ma.ext1_dim(k, j) + ma.ext2_dim(k, j)


def test_ext_is_additive_in_second_argument():
    assert ma.ext1_dim(5, {8: 2, 11: 1}) == 2 * ma.ext1_dim(5, 8) + ma.ext1_dim(5, 11)


def test_cbs_examples():
    assert ma.cbs_check({4: 1, 11: 1})
    assert not ma.cbs_check({5: 1, 8: 1})
    assert ma.cbs_check({11: 3})


def test_generic_decomposition_examples():
    assert ma.generic_decomposition(g22.Component((1, 1, 1, 2), (1, 1))) == {4: 1, 11: 1}
    assert ma.generic_decomposition(g22.Component((2, 1, 1, 2), (1, 1))) == {1: 1, 4: 1, 11: 1}
    assert ma.generic_decomposition(g22.Component((1, 2, 2, 1), (1, 1))) == {2: 1, 3: 1, 11: 1}
    assert ma.generic_decomposition(g22.ZERO_COMPONENT) == {}


def test_generic_decomposition_consistency_small_box():
    for dims in itertools.product(range(4), repeat=4):
        for c in g22.enumerate_components(dims):
            ms = ma.generic_decomposition(c)
            assert ma.multiset_dims(ms) == c.dims
            profile = ma.profile_of_multiset(ms)
            assert (profile.source_rank, profile.sink_rank) == c.ranks
            assert ma.cbs_check(ms)


def test_profile_matrix_is_invertible():
    cols = [ma.rank_profile(ma.indecomposable(k)).as_vector() for k in range(1, 12)]
    matrix = linalg.from_int_rows(QQ, [[cols[j][i] for j in range(11)] for i in range(11)])
    assert linalg.rank(QQ, matrix) == 11


def test_multiplicities_of_catalog_modules():
    for k in range(1, 12):
        profile = ma.rank_profile(ma.indecomposable(k))
        assert ma.multiplicities_from_profile(profile) == {k: 1}


def test_multiplicities_of_direct_sum():
    rep = ma.multiset_rep({4: 1, 11: 1})
    assert ma.multiplicities_from_profile(ma.rank_profile(rep)) == {4: 1, 11: 1}


def test_multiplicities_of_zero_representation():
    rep = ma.multiset_rep({1: 1, 2: 1, 3: 1, 4: 1})
    profile = ma.rank_profile(rep)
    assert profile.source_rank == profile.sink_rank == 0
    assert ma.multiplicities_from_profile(profile) == {1: 1, 2: 1, 3: 1, 4: 1}


def test_multiset_round_trip():
    kinds = (1, 2, 5, 7, 9, 10, 11)
    for ms in ({2: 1, 5: 2}, {9: 1, 10: 1}, {7: 2, 11: 1}, {k: 1 for k in kinds}):
        assert ma.multiplicities_from_profile(ma.profile_of_multiset(ms)) == ms
        built = ma.rank_profile(ma.multiset_rep(ms))
        assert built == ma.profile_of_multiset(ms)


def test_inconsistent_profile_rejected():
    profile = ma.RankProfile((1, 0, 0, 0), 1, 0, 0, 0, 1, 0, 0)
    with pytest.raises(ma.InconsistentProfileError):
        ma.multiplicities_from_profile(profile)


def test_distinguishing_profile_needs_diagonal_rank():
    # these two sums differ only in the rank of the composite map
    a = ma.profile_of_multiset({9: 1, 10: 1})
    b = ma.profile_of_multiset({11: 1, 2: 1, 3: 1})
    assert a.as_vector()[:10] == b.as_vector()[:10]
    assert a.diag_rank != b.diag_rank
