"""Intersection lattice, Moebius function, characteristic and Poincare
polynomials of a simple central arrangement.

Flats are canonicalized by the reduced row echelon form of the span of
the forms vanishing on them, so set semantics are exact.  Everything is
central, so every subset of hyperplanes has a nonempty intersection.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .arrangement import Arrangement
from .ratpoly import LaurentPolynomial


@dataclass(frozen=True)
class Flat:
    echelon: tuple          # rref rows spanning the forms through the flat
    codim: int
    members: frozenset      # indices of hyperplanes containing the flat

    def __le__(self, other):
        # reverse-inclusion order on subspaces: self <= other means
        # self contains other as a subspace of V
        return self.members <= other.members


def intersection_lattice(arr: Arrangement):
    """All intersections of subsets of hyperplanes, graded by codimension.

    Returns the list of flats sorted by (codim, members); includes the
    ambient space V as the empty intersection.
    """
    forms = [h.coeffs for h in arr.hyperplanes]

    def close(rows):
        ech, _ = linalg.rref(rows)
        members = frozenset(i for i, f in enumerate(forms)
                            if linalg.in_row_span(f, ech))
        return Flat(tuple(ech), len(ech), members)

    top = close([])
    flats = {top.members: top}
    frontier = [top]
    while frontier:
        new = []
        for flat in frontier:
            for i in range(arr.n):
                if i in flat.members:
                    continue
                cand = close(list(flat.echelon) + [forms[i]])
                if cand.members not in flats:
                    flats[cand.members] = cand
                    new.append(cand)
        frontier = new
    return sorted(flats.values(), key=lambda f: (f.codim, sorted(f.members)))


def moebius(flats):
    """Moebius table mu(X) from the defining top-down recursion."""
    table = {}
    for flat in sorted(flats, key=lambda f: f.codim):
        if flat.codim == 0:
            table[flat.members] = 1
        else:
            table[flat.members] = -sum(
                table[g.members] for g in flats
                if g.members < flat.members)
    return table


def characteristic_polynomial(arr: Arrangement) -> LaurentPolynomial:
    """chi(A;t) = sum mu(X) t^dim(X), as a polynomial in t."""
    flats = intersection_lattice(arr)
    mu = moebius(flats)
    terms = {}
    for flat in flats:
        d = arr.ell - flat.codim
        terms[d] = terms.get(d, 0) + mu[flat.members]
    return LaurentPolynomial(terms)


def poincare_polynomial(arr: Arrangement) -> LaurentPolynomial:
    """pi(A;t) = sum mu(X) (-t)^codim(X)."""
    flats = intersection_lattice(arr)
    mu = moebius(flats)
    terms = {}
    for flat in flats:
        c = flat.codim
        sign = 1 if c % 2 == 0 else -1
        terms[c] = terms.get(c, 0) + sign * mu[flat.members]
    return LaurentPolynomial(terms)


def lattice_report(arr: Arrangement):
    """Flats grouped by codimension with Moebius values (JSON-friendly)."""
    flats = intersection_lattice(arr)
    mu = moebius(flats)
    return [{"codim": f.codim,
             "members": sorted(f.members),
             "mu": mu[f.members]} for f in flats]
