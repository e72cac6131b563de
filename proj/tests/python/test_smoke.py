import math

import pytest

import mpchoice


def test_spec_roundtrip():
    g = mpchoice.make_spec([4, 2])
    assert g.sizes_exact == [2, 4]
    assert g.sizes_log2 == [1.0, 2.0]
    assert g.s == 1
    assert mpchoice.make_spec_log2([20, 10]).sizes_exact is None
    assert mpchoice.exponents(mpchoice.make_spec_log2([16, 32, 64])) == [4.0, 2.0]


def test_errors_are_value_errors():
    with pytest.raises(mpchoice.MpchoiceError):
        mpchoice.make_spec([1, 4])
    with pytest.raises(ValueError):
        mpchoice.make_spec([4])


def test_roots():
    r = mpchoice.solve_x0([2.0])
    assert abs(r.x0 - (3 + math.sqrt(5)) / 2) < 1e-9
    assert abs(mpchoice.char_value(r.x0, [2.0])) <= 1e-12
    assert mpchoice.char_value(2.0, [1.0]) == 0.0


def test_bounds():
    g = mpchoice.make_spec_log2([1000, 1000])
    assert mpchoice.estimate_choice(g) == 1000.0
    rep = mpchoice.bound_report(g)
    assert rep.upper.r == 1001
    assert rep.lower.valid and rep.lower.r == 980
    assert rep.ratio <= 1.12
    pr = mpchoice.lower_prescription(mpchoice.make_spec_log2([64, 64]))
    assert (pr.r, pr.t, pr.l) == (40, 1600, [800, 800])
    up = mpchoice.upper_bound(mpchoice.make_spec([2, 4]))
    assert up.r == 3 and up.valid
    assert abs(sum(up.p) - 1) < 1e-12


def test_certify_and_mc():
    g = mpchoice.make_spec([100, 100])
    st = mpchoice.star_lhs_log(g, 2, 4, [2, 2])
    assert abs(st.lhs_log + 13.201) < 1e-3
    assert mpchoice.falling_factorial_log_ratio(1, 10, 2) == -math.inf
    rep = mpchoice.mc_split_bad_events(mpchoice.make_spec([2, 2]), 2, [0.5, 0.5], 4, 20000, 1)
    assert rep.theoretical_expectation == 1.0
    assert abs(rep.mean_bad_events - 1.0) <= 4 * rep.std_error
    cover = mpchoice.mc_cover_failure(g, 2, 4, [2, 2], 100, 3)
    assert cover.mean_bad_events == 0.0


def test_exact():
    witness = [[[0, 1], [2, 3]], [[0, 2], [0, 3], [1, 2], [1, 3]]]
    assert mpchoice.decide_list_colorable(4, witness)["colorable"] is False
    res = mpchoice.decide_list_colorable(2, [[[0, 1]], [[0, 1]]])
    assert res["colorable"] is True
    assert mpchoice.min_cover(3, [[0, 1], [1, 2], [0, 2]])[0] == 2
    assert mpchoice.verify_lower_witness(1, [[[0], [0]], [[0]]], [1, 0]) is True
    lists = mpchoice.sample_adversarial(mpchoice.make_spec([2, 2]), 2, 4, 42)
    assert lists == mpchoice.sample_adversarial(mpchoice.make_spec([2, 2]), 2, 4, 42)
    assert all(len(l) == 2 for part in lists for l in part)
    assert mpchoice.choice_number_exact(mpchoice.make_spec([2, 4])) == 3
    assert mpchoice.choice_number_exact([1, 1]) == 2
    assert mpchoice.is_r_choosable([2, 2], 2) is True
