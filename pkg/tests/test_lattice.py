"""Intersection lattice, Moebius function, characteristic polynomial."""

from stlog.arrangement import Multiplicity, parse
from stlog.fixtures import load
from stlog.lattice import (characteristic_polynomial, intersection_lattice,
                           lattice_report, moebius, poincare_polynomial)
from stlog.ratpoly import LaurentPolynomial


def test_ex1_lattice_structure():
    arr, _ = load("ex1")
    flats = intersection_lattice(arr)
    by_codim = {}
    for f in flats:
        by_codim[f.codim] = by_codim.get(f.codim, 0) + 1
    # V, 4 hyperplanes, 6 lines (all pairs meet in distinct lines), origin
    assert by_codim == {0: 1, 1: 4, 2: 6, 3: 1}
    assert len(flats) == 12


def test_ex1_moebius_values():
    arr, _ = load("ex1")
    flats = intersection_lattice(arr)
    mu = moebius(flats)
    values = sorted(mu[f.members] for f in flats if f.codim == 3)
    assert values == [-3]       # mu at the origin
    assert all(mu[f.members] == -1 for f in flats if f.codim == 1)
    assert all(mu[f.members] == 1 for f in flats if f.codim == 2)


def test_ex1_characteristic_polynomial():
    arr, _ = load("ex1")
    chi = characteristic_polynomial(arr)
    assert chi == LaurentPolynomial({3: 1, 2: -4, 1: 6, 0: -3})


def test_boolean_characteristic_polynomial():
    arr, _ = load("bool3")
    chi = characteristic_polynomial(arr)
    # (t-1)^3
    assert chi == LaurentPolynomial({3: 1, 2: -3, 1: 3, 0: -1})


def test_poincare_relates_to_characteristic():
    # pi(A;t) = (-t)^l chi(A;-1/t), checked by coefficient transport
    arr, _ = load("ex1")
    chi = characteristic_polynomial(arr)
    pi = poincare_polynomial(arr)
    ell = arr.ell
    transported = LaurentPolynomial(
        {ell - e: c * (-1) ** (ell - e) for e, c in chi.terms.items()})
    assert pi == transported


def test_ex1_poincare_factors():
    arr, _ = load("ex1")
    pi = poincare_polynomial(arr)
    expected = (LaurentPolynomial({0: 1, 1: 1})
                * LaurentPolynomial({0: 1, 1: 3, 2: 3}))
    assert pi == expected


def test_deletion_restriction_recursion():
    # chi(A) = chi(A') - chi(A'') for a triple point in rank 2
    arr, _ = parse("ell 2\nH 1 0\nH 0 1\nH 1 1\n")
    smaller, _ = parse("ell 2\nH 1 0\nH 0 1\n")
    chi = characteristic_polynomial(arr)
    chi_del = characteristic_polynomial(smaller)
    # restriction to x=0 is the single point: chi = t - 1 in rank 1
    chi_res = LaurentPolynomial({1: 1, 0: -1})
    assert chi == chi_del - chi_res


def test_lattice_report_shape():
    arr, _ = load("bool2")
    report = lattice_report(arr)
    assert [entry["codim"] for entry in report] == [0, 1, 1, 2]
    assert sum(entry["mu"] for entry in report) == 0  # chi(1) = 0 for n >= 1


def test_moebius_alternating_sums_to_zero():
    # sum over the lattice of mu is chi(A;1) = 0 whenever A is nonempty
    for name in ("ex1", "bool2", "bool3", "generic_3_4"):
        arr, _ = load(name)
        flats = intersection_lattice(arr)
        mu = moebius(flats)
        assert sum(mu.values()) == 0, name
