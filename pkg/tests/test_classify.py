import pytest

from rbcm.cayley import map_stats, maps_isomorphic
from rbcm.classify import (
    abelian_p_groups,
    classify_2group,
    classify_coprime,
    classify_cyclic,
    classify_elementary,
    classify_rank2,
    cross_check,
    family_elementary_narrow_count,
    rank2_shift_family_outcome,
    solve_unit_roots,
    standard_form_maps,
    theta_set,
)
from rbcm.structure import AbelianGroupTable


def test_solve_unit_roots_examples():
    assert solve_unit_roots(5, 1, 2) == (2, 3)
    assert solve_unit_roots(5, 2, 2) == (7, 18)
    assert solve_unit_roots(3, 1, 2) == ()
    assert solve_unit_roots(3, 2, 3) == (2, 5, 8)


def test_theta_set_examples():
    assert theta_set(3, 2) == (4,)
    assert theta_set(3, 3) == (2,)
    # 5 = 1 mod 4, so no divisor of 4 qualifies
    assert theta_set(5, 2) == ()
    assert theta_set(5, 3) == (2, 6)


def test_classify_cyclic_examples():
    assert [m.params.as_dict()["mu"] for m in classify_cyclic(5, 1, 2)] == [2, 3]
    assert [m.params.as_dict()["mu"] for m in classify_cyclic(5, 2, 2)] == [7, 18]
    assert classify_cyclic(3, 1, 2) == []
    # mu = -1 is a cube root of -1 but collapses at valence 6
    assert [m.params.as_dict()["mu"] for m in classify_cyclic(3, 2, 3)] == [2, 5]


def test_classify_elementary_examples():
    ms = classify_elementary(3, 2, 2, "I")
    assert len(ms) == 1 and ms[0].invariants == (3, 3)
    ms = classify_elementary(5, 2, 2, "I")
    assert len(ms) == 1
    # the surviving ideal is the product of both linear factors
    K = dict(ms[0].params.as_dict()["K"])
    assert K == {(4, 1): 1, (4, 3): 1}
    ms = classify_elementary(2, 2, 2, "II")
    assert len(ms) == 1 and ms[0].record.map_type == "II"


def test_elementary_narrow_reading_diverges():
    # the narrow exponent range misses the double-root map at valence 6
    implemented = classify_elementary(3, 2, 3, "I")
    assert len(implemented) == 1
    assert family_elementary_narrow_count(3, 2, 3) == 0


def test_classify_2group_examples():
    ms = classify_2group(2, 2)
    types = sorted(m.invariants for m in ms)
    assert types == [(2, 4), (4, 4)]
    ms1 = classify_2group(1, 2)
    assert [m.invariants for m in ms1] == []  # exponent-2 groups carry no type I


def test_classify_coprime_examples():
    ms = classify_coprime(3, 1, 2)
    assert len(ms) == 1 and ms[0].invariants == (3, 3)
    ms = classify_coprime(3, 2, 2)
    assert len(ms) == 1 and ms[0].invariants == (9, 9)
    # over Z_25 both labels are linear, so the family spans cyclic and rank-2
    # groups of exponent 25
    ms = classify_coprime(5, 2, 2, max_order=625)
    assert {m.invariants for m in ms} == {(25,), (5, 25), (25, 25)}
    assert len([m for m in ms if m.invariants == (25,)]) == len(classify_cyclic(5, 2, 2))


def test_classify_rank2_examples():
    ms = classify_rank2(3, 1, 1, 2)
    assert len(ms) == 1 and ms[0].params.as_dict()["case"] == "b"
    ms = classify_rank2(5, 1, 1, 2)
    assert len(ms) == 1 and ms[0].params.as_dict()["case"] == "a"
    # depth case (d): three alpha values at mu = 2
    ms = classify_rank2(3, 2, 1, 3)
    assert len(ms) == 3 and all(m.params.as_dict()["case"] == "d" for m in ms)
    # empty U kills the family
    assert classify_rank2(3, 2, 1, 6) == []


def test_rank2_scan_finds_inert_beyond_theta():
    # d = 8 does not divide p + 1 = 6, yet the two inert quadratics are maps
    ms = classify_rank2(5, 1, 1, 4)
    bs = [m for m in ms if m.params.as_dict()["case"] == "b"]
    assert len(bs) == 2
    assert all(not m.params.as_dict()["theta_condition"] for m in bs)


def test_rank2_equal_precision_double_root():
    # k = k' = 2, r > 0: configuration missing from the narrow case split
    ms = classify_rank2(3, 2, 2, 3)
    cases = sorted(m.params.as_dict()["case"] for m in ms)
    assert cases == ["c+", "c+", "c+"]
    out = rank2_shift_family_outcome(ms)
    assert out["total"] == 0


def test_rank2_shift_family_z9sq():
    ms = classify_rank2(3, 2, 2, 6)
    out = rank2_shift_family_outcome(ms)
    assert out == {
        "total": 8,
        "unshifted_reading": 0,
        "scalar_shift_reading": 2,
        "beyond_scalar": 6,
    }


@pytest.mark.parametrize(
    "spec,valence,expected",
    [((5,), 4, 2), ((8,), 4, 0), ((3, 3), 4, 1), ((2, 4), 4, 1)],
)
def test_cross_check_spot_values(spec, valence, expected):
    r = cross_check(spec, valence)
    assert r.ok
    assert r.oracle_count == r.standard_count == expected
    for name, count in r.family_counts.items():
        assert count == expected, name


def test_cross_check_oracle_only_group():
    # rank-3 mixed 3-group: no family applies at 3 | n
    r = cross_check((3, 3, 9), 6)
    assert r.family_counts == {}
    assert r.ok
    assert r.oracle_count == r.standard_count


def test_standard_form_maps_match_families():
    g = AbelianGroupTable((9, 9))
    std = standard_form_maps(g, 12)
    fam = [m for m in classify_rank2(3, 2, 2, 6, max_order=81) if m.invariants == (9, 9)]
    assert len(std) == len(fam) == 8
    for m in fam:
        assert sum(1 for s in std if maps_isomorphic(m.record, s.record)) == 1


def test_abelian_p_groups():
    assert abelian_p_groups(2, 8) == [(2,), (4,), (8,), (2, 2), (2, 4), (2, 2, 2)]
    assert abelian_p_groups(5, 81) == [(5,), (25,), (5, 5)]


def test_genus_reported():
    ms = classify_cyclic(5, 1, 2)
    st = map_stats(ms[0].record)
    assert (st.vertices, st.edges, st.faces, st.genus) == (5, 10, 5, 1)
