import itertools
from fractions import Fraction

import pytest

from abelcorr import (
    Cyclotomic,
    GenerationError,
    LiftError,
    SearchCapError,
    Signal,
    autocorr_profile,
    brute_force_search,
    classify_z6_pair,
    equal_through_order,
    fourier,
    generate_z6_pairs,
    is_translate,
    lift_to_z30,
    make_group,
    norm_form_count,
    norm_form_solutions,
    root_of_unity,
    sqrt_minus_three,
    translation_canonical,
)
from abelcorr.homometry import NormFormSolution
from conftest import Z6_F, Z6_G, Z30_F, Z30_G


# -- norm form -----------------------------------------------------------------


def test_norm_form_small_cases():
    assert len(norm_form_solutions(1)) == 6
    assert NormFormSolution(1, 0) in norm_form_solutions(1)
    assert len(norm_form_solutions(7)) == 12
    assert len(norm_form_solutions(49)) == 18
    assert norm_form_solutions(2) == []
    assert norm_form_solutions(5) == []
    assert norm_form_solutions(0) == [NormFormSolution(0, 0)]


def test_norm_form_count_matches_enumeration():
    for L in range(0, 300):
        assert norm_form_count(L) == len(norm_form_solutions(L)), L


def test_norm_form_negative_rejected():
    with pytest.raises(ValueError):
        norm_form_solutions(-1)
    with pytest.raises(ValueError):
        norm_form_count(-3)


def test_norm_form_solution_value():
    s = NormFormSolution(8, -3)
    assert s.norm == 49
    z = s.to_cyclotomic()
    assert z * z.conjugate() == Cyclotomic.rational(49, 6)


# -- classification -------------------------------------------------------------


def test_classify_fixture_pair(z6_pair):
    f, g = z6_pair
    verdict = classify_z6_pair(f, g)
    assert verdict.is_homometric_pair
    assert verdict.mean_match
    assert verdict.mid_characters_vanish
    assert verdict.modulus_match
    assert verdict.sixth_powers_differ
    assert verdict.f_primary == Cyclotomic.rational(39, 6) - sqrt_minus_three() * 9
    assert verdict.g_primary == Cyclotomic.rational(42, 6)
    assert verdict.f_mean == verdict.g_mean == 0


def test_classify_pair_with_itself(z6_pair):
    f, _ = z6_pair
    verdict = classify_z6_pair(f, f)
    assert not verdict.is_homometric_pair
    assert not verdict.sixth_powers_differ
    assert verdict.mean_match and verdict.modulus_match


def test_classify_perturbed_partner(z6_pair):
    """Adding c * [1,-1,1,-1,1,-1] pushes the transform value at the order-2
    character off zero, so the vanishing condition fails; the order-by-order
    oracle agrees that the pair no longer survives through order 5."""
    f, g = z6_pair
    c = 3
    bump = [c * (-1) ** i for i in range(6)]
    g2 = Signal(g.group, [v + b for v, b in zip(g.values, bump)])
    assert not fourier(g2).value((3,)).is_zero
    verdict = classify_z6_pair(f, g2)
    assert not verdict.mid_characters_vanish
    assert not verdict.is_homometric_pair
    report = equal_through_order(f, g2, 6)
    assert report.equal_through() < 5


def test_classify_requires_order_six_group():
    f = Signal(make_group([2, 3]), Z6_F)
    with pytest.raises(ValueError):
        classify_z6_pair(f, f)


def test_verdict_json(z6_pair):
    f, g = z6_pair
    data = classify_z6_pair(f, g).to_json()
    assert data["is_homometric_pair"] is True
    assert set(data["conditions"]) == {
        "mean_match",
        "mid_characters_vanish",
        "modulus_match",
        "sixth_powers_differ",
    }
    assert data["witnesses"]["f_mean"] == "0"


# -- generation ------------------------------------------------------------------


def test_generate_r7_reproduces_fixture(z6_pair):
    f, g = z6_pair
    pairs = generate_z6_pairs(7)
    assert len(pairs) == 3
    hit = pairs[1]
    assert hit.f == f
    assert hit.g == g
    assert hit.f_solution == (8, -3)
    assert hit.g_solution == (7, 0)
    assert hit.multiplier == 6
    assert hit.solution_norm == 49
    assert hit.source_r == 7
    assert hit.coverage == "classification"
    assert not hit.is_reflection_pair
    assert not hit.is_translate_pair


def test_generate_r7_all_valid():
    for pair in generate_z6_pairs(7):
        assert classify_z6_pair(pair.f, pair.g).is_homometric_pair
        report = equal_through_order(pair.f, pair.g, 6)
        assert report.equal_through() == 5
        assert report.first_difference_order == 6
        # emitted signals are already translation-canonical
        assert translation_canonical(pair.f) == pair.f
        assert translation_canonical(pair.g) == pair.g


def test_generate_r7_reflection_flag():
    pairs = generate_z6_pairs(7)
    assert [p.is_reflection_pair for p in pairs] == [True, False, False]
    refl = pairs[0]
    assert refl.f.reflect() == refl.g.shift(
        is_translate(refl.f.reflect(), refl.g)
    ) or is_translate(refl.f.reflect(), refl.g) is not None


def test_generate_other_radii():
    for r in (13, 19):
        pairs = generate_z6_pairs(r)
        assert pairs, r
        for pair in pairs:
            assert classify_z6_pair(pair.f, pair.g).is_homometric_pair
            assert is_translate(pair.f, pair.g) is None


def test_generate_r49_and_r91_scale():
    assert len(norm_form_solutions(91 * 91)) >= 24
    pairs91 = generate_z6_pairs(91)
    # nine unit orbits of solutions give C(9,2) pairs
    assert len(pairs91) == 36
    sample = pairs91[0]
    report = equal_through_order(sample.f, sample.g, 6)
    assert report.first_difference_order == 6
    # 49**2 = 7**4 has 6*d(7**4) = 30 solutions in 5 orbits
    assert len(generate_z6_pairs(49)) == 10


def test_generate_with_mean():
    pairs = generate_z6_pairs(7, mean=6)
    assert pairs
    for pair in pairs:
        assert pair.f.total() == pair.g.total() != 0
        assert classify_z6_pair(pair.f, pair.g).is_homometric_pair


def test_generate_rejects_bad_r():
    with pytest.raises(ValueError):
        generate_z6_pairs(1)
    with pytest.raises(ValueError):
        generate_z6_pairs(0)
    for r, reason in ((2, "no-solutions"), (6, "no-solutions"), (3, "trivial-orbit"), (9, "trivial-orbit")):
        with pytest.raises(GenerationError) as info:
            generate_z6_pairs(r)
        assert info.value.reason == reason


def test_generate_r4_empty_without_error():
    # 16 = 4**2 has a single solution orbit, so there is nothing to pair
    assert generate_z6_pairs(4) == []


def test_generated_pair_json():
    pair = generate_z6_pairs(7)[1]
    data = pair.to_json()
    assert data["group"] == [6]
    assert data["f"] == [str(v) for v in Z6_F]
    assert data["g"] == [str(v) for v in Z6_G]
    assert data["f_solution"] == [8, -3]
    assert data["multiplier"] == 6
    assert data["coverage"] == "classification"


# -- translation canonical form ---------------------------------------------------


def test_translation_canonical_properties(rng, random_int_signal):
    group = make_group([2, 6])
    for _ in range(20):
        f = random_int_signal(rng, group)
        c = translation_canonical(f)
        assert is_translate(c, f) is not None
        assert translation_canonical(c) == c
        assert max(f.shift(a).values for a in group.elements()) == c.values


# -- lift ---------------------------------------------------------------------------


def test_lift_reproduces_order30_fixtures():
    zf = Cyclotomic.rational(39, 6) - sqrt_minus_three() * 9
    lift = lift_to_z30(zf, 42)
    # the spectral f slot carries the irrational value, which lands on the
    # second fixture list; the rational 42 slot lands on the first
    assert [int(v) for v in lift.f.values] == Z30_G
    assert [int(v) for v in lift.g.values] == Z30_F
    assert lift.multiplier == 5
    assert lift.coverage == "family"
    assert lift.source_r is None
    assert not lift.is_reflection_pair
    assert not lift.is_translate_pair


def test_lift_pair_separates_at_six():
    zf = Cyclotomic.rational(39, 6) - sqrt_minus_three() * 9
    lift = lift_to_z30(zf, 42, verify=False)
    report = equal_through_order(lift.f, lift.g, 6)
    assert report.orders_equal == (True, True, True, True, True, False)
    assert is_translate(lift.f, lift.g) is None


def test_lift_accepts_generated_solutions():
    pair = generate_z6_pairs(13)[0]
    lifted = lift_to_z30(pair.f_primary, pair.g_primary)
    report = equal_through_order(lifted.f, lifted.g, 6)
    assert report.equal_through() == 5


def test_lift_degenerate_equal_inputs():
    lift = lift_to_z30(42, 42)
    assert lift.is_translate_pair
    assert lift.f == lift.g


def test_lift_rejects_modulus_mismatch():
    with pytest.raises(LiftError):
        lift_to_z30(42, 41)


def test_lift_rejects_equal_sixth_powers():
    z = Cyclotomic.rational(39, 6) - sqrt_minus_three() * 9
    with pytest.raises(LiftError):
        lift_to_z30(z, z * root_of_unity(6))


def test_lift_rejects_foreign_conductor():
    with pytest.raises(LiftError):
        lift_to_z30(root_of_unity(5) * 42, 42)


# -- exhaustive search -----------------------------------------------------------


def test_search_small_boxes_empty():
    g6 = make_group([6])
    assert brute_force_search(g6, 1, 6) == []
    g4 = make_group([4])
    assert brute_force_search(g4, 2, 6) == []


def test_search_matches_independent_enumeration():
    """On Z_3 with values in [-1, 1], group signals by profile directly and
    compare the collision pairs with the search output."""
    group = make_group([3])
    found = brute_force_search(group, 1, 3)
    buckets = {}
    for vals in itertools.product((-1, 0, 1), repeat=3):
        f = translation_canonical(Signal(group, vals))
        key = tuple(v for v in f.values)
        prof = autocorr_profile(f, 3)
        buckets.setdefault(prof, set()).add(key)
    expected = set()
    for members in buckets.values():
        for a, b in itertools.combinations(sorted(members, reverse=True), 2):
            expected.add((a, b))
    got = {(tuple(f.values), tuple(g.values)) for f, g in found}
    normalized = {(max(a, b), min(a, b)) for a, b in got}
    assert normalized == {(max(a, b), min(a, b)) for a, b in expected}


def test_search_thread_determinism():
    group = make_group([6])
    single = brute_force_search(group, 1, 4, threads=1)
    multi = brute_force_search(group, 1, 4, threads=3)
    assert [(f.values, g.values) for f, g in single] == [
        (f.values, g.values) for f, g in multi
    ]


def test_search_cap():
    with pytest.raises(SearchCapError):
        brute_force_search(make_group([12]), 3, 4)


def test_search_argument_validation():
    group = make_group([4])
    with pytest.raises(ValueError):
        brute_force_search(group, -1, 3)
    with pytest.raises(ValueError):
        brute_force_search(group, 1, 0)


def test_search_zero_bound():
    assert brute_force_search(make_group([4]), 0, 3) == []
