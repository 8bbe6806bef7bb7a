"""Verification harness: individual checks and suite plumbing."""

from stlog import verify
from stlog.arrangement import Multiplicity, parse
from stlog.fixtures import load


def test_chi_specialization_fixtures():
    for name in ("ex1", "bool3", "generic_3_4"):
        arr, _ = load(name)
        report = verify.check_chi_specialization(arr, subject=name)
        assert report.verdict == "pass", name


def test_chi_specialization_not_applicable_when_inessential():
    arr, _ = parse("ell 3\nH 1 0 0\nH 0 1 0\n")
    assert verify.check_chi_specialization(arr).verdict == "not-applicable"


def test_monic_degree_tame_and_beyond():
    arr, mult = load("ex1")
    for d in (1, 2, 3):
        report = verify.check_monic_degree(arr, mult, d)
        assert report.verdict == "pass", d
    arr, mult = load("ex2_B")
    report = verify.check_monic_degree(arr, mult, 1)
    assert report.verdict == "beyond-theorem"       # monic despite non-tame


def test_second_coefficient_known_values():
    arr, mult = load("ex1")
    report = verify.check_second_coefficient(arr, mult)
    assert report.verdict == "pass"
    assert report.witness["degree_n_relations"] == 1    # 4 = 3 + 1
    arr, mult = load("ex2_Aprime")
    report = verify.check_second_coefficient(arr, mult)
    assert report.verdict == "pass"
    assert report.witness["degree_n_relations"] == 0    # 4 = 4 + 0
    arr, mult = load("ex2_B")
    report = verify.check_second_coefficient(arr, mult)
    assert report.verdict == "not-applicable"           # 3 < l = 4, non-tame
    assert report.computed == "3"


def test_regularity_bounds_all_fixtures():
    for name in ("ex1", "ex2_B", "bool2", "generic_3_4"):
        arr, mult = load(name)
        report = verify.check_regularity_bounds(arr, mult, subject=name)
        assert report.verdict == "pass", name


def test_free_formulas():
    arr, mult = load("ex2_A")
    report = verify.check_free_formulas(arr, mult)
    assert report.verdict == "pass"
    arr, mult = load("ex1")
    assert verify.check_free_formulas(arr, mult).verdict == "not-applicable"


def test_low_degree_coefficients():
    arr, mult = load("ex1")
    report = verify.check_low_degree_coefficients(arr, mult, 1)
    assert report.verdict == "pass"
    # 1, 3, then 5 = 6 - 1 (Euler derivation in degree 1)
    assert report.claimed == [1, 3, 5]
    arr, mult = load("ex2_Aprime")
    report = verify.check_low_degree_coefficients(arr, mult, 1)
    assert report.verdict == "pass"
    assert report.claimed == [1, 4, 9]      # 9 = 10 - 1


def test_st_algebra_equality():
    arr, mult = load("ex1")
    for d in (1, 2):
        report = verify.check_st_algebra_equality(arr, mult, d, seed=0)
        assert report.verdict == "pass", d
    arr, mult = load("ex2_B")
    report = verify.check_st_algebra_equality(arr, mult, 1, seed=0)
    assert report.verdict == "not-applicable"
    assert report.witness["equal"] is False     # both sides computed, differ


def test_product_rule():
    b1, m1 = load("bool1")
    b2, m2 = load("bool2")
    assert verify.check_product_rule(b1, m1, b2, m2).verdict == "pass"
    ex1, em = load("ex1")
    assert verify.check_product_rule(ex1, em, b1, m1).verdict == "pass"


def test_random_corpus_is_deterministic():
    a = verify.random_corpus(7, count=5)
    b = verify.random_corpus(7, count=5)
    assert [(arr, mult.values) for _, arr, mult in a] == \
        [(arr, mult.values) for _, arr, mult in b]
    c = verify.random_corpus(8, count=5)
    assert [arr for _, arr, _ in a] != [arr for _, arr, _ in c]


def test_run_suite_paper_passes():
    report = verify.run_suite("paper", seed=0)
    assert report["passed"]
    assert report["failures"] == 0
    assert report["items"] == len(verify.PAPER_CORPUS)
    text = verify.render_report(report)
    assert text.endswith("PASS")


def test_run_suite_file(tmp_path):
    path = tmp_path / "a.arr"
    path.write_text("ell 2\nH 1 0\nH 0 1\nH 1 1\n")
    report = verify.run_suite("file", seed=0, paths=[str(path)])
    assert report["passed"]
    assert report["items"] == 1


def test_run_suite_empty_file_corpus():
    report = verify.run_suite("file", seed=0, paths=())
    assert report["passed"]
    assert report["items"] == 0
    assert report["checks"] == []
