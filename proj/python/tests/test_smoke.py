from fractions import Fraction as F

import pytest

import postdom

PRIOR = [F(1, 3)] * 3
KERNEL = [[F(5, 8), F(3, 8)], [F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)]]


def test_posterior_table():
    assert postdom.signal_marginal(PRIOR, KERNEL) == [F(11, 24), F(13, 24)]
    assert postdom.signal_conditional(PRIOR, KERNEL, [1, 2]) == [F(3, 8), F(5, 8)]
    assert postdom.posterior_curve(PRIOR, KERNEL, [1, 2]) == [F(6, 11), F(10, 13)]


def test_inputs_accept_strings_and_ints():
    assert postdom.signal_marginal(["1/2", "1/2"], [[1, 0], ["1/2", "1/2"]]) == [F(3, 4), F(1, 4)]


def test_undefined_posterior_is_none():
    assert postdom.posterior_curve([F(1, 2)] * 2, [[F(1, 2), 0, F(1, 2)], [F(1, 4), 0, F(3, 4)]], [1])[1] is None


def test_dominance():
    q = [F(6, 11), F(10, 13)]
    informed = postdom.lr_dominates(q, [F(3, 8), F(5, 8)], q, [F(11, 24), F(13, 24)])
    assert informed["lr_holds"] and informed["lr_strict"] and informed["fosd_holds"]
    reversed_ = postdom.lr_dominates(q, [F(1, 2), F(1, 2)], q, [F(11, 24), F(13, 24)])
    assert not reversed_["lr_holds"]
    assert reversed_["violating_pair"] == (F(6, 11), F(10, 13))
    assert postdom.lr_dominates_oracle(q, [F(3, 8), F(5, 8)], q, [F(11, 24), F(13, 24)])


def test_prop1_report():
    report = postdom.check_prop1(PRIOR, KERNEL, [1, 2])
    assert report["submartingale_gap"] == "8/429"


def test_optimism():
    pi = [F(1, 3)] * 3
    assert postdom.segment_coefficient([F(1, 6), F(5, 12), F(5, 12)], pi, [1, 2]) == F(1, 2)
    target = [F(1, 2), F(1, 4), F(1, 4)]
    assert postdom.segment_coefficient(target, pi, [1, 2]) is None
    x = postdom.optimism_witness(target, pi, [1, 2])
    assert sum(p * v for p, v in zip(pi, x)) == 0
    assert sum(p * v for p, v in zip(target, x)) < 0
    assert max(abs(v) for v in x) == F(1, 2)
    assert postdom.is_gamma_pessimistic(target, pi, [1, 2])


def test_monotone():
    target, pi = [F(1, 6), F(1, 3), F(1, 2)], [F(1, 3)] * 3
    assert postdom.upper_set_decomposition(target, pi) == [(0, F(1, 2)), (1, F(1, 3)), (2, F(1, 6))]
    steps = postdom.strengthening_sequence(target, pi)
    assert postdom.apply_sequence(pi, steps) == target
    assert postdom.upper_set_decomposition([F(3, 4), F(1, 4)], [F(1, 2)] * 2) is None
    assert postdom.is_mlrp([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]])
    assert not postdom.is_mlrp([[F(1, 2), F(1, 2)], [F(3, 4), F(1, 4)]])


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        postdom.signal_marginal([F(1, 2), F(1, 3)], [[1], [1]])
    with pytest.raises(ValueError):
        postdom.segment_coefficient(PRIOR, PRIOR, [0, 1, 2])


def test_suites_and_example():
    assert postdom.worked_example()["passed"]
    for name in postdom.suite_names():
        report = postdom.run_suite(name, seed=7, trials=20)
        assert report["trials"] == 20
        failed = [c for c in report["checks"] if not c["passed"] and not c["name"].startswith("coverage:")]
        assert not failed, failed
    a = postdom.run_suite("prop3", seed=5, trials=30, threads=1)
    b = postdom.run_suite("prop3", seed=5, trials=30, threads=3)
    assert a == b
