"""Logarithmic modules of a multiarrangement: D^p(A,m) and Omega^p(A,m),
with minimal generators, minimal free resolutions, Hilbert series,
regularity and projective dimension, plus freeness (Saito) and tameness.

D^p(A,m) is realized as the kernel of the graded map

    S^C(l,p)  ->  (+)_{H, J}  S / (alpha_H^{m(H)})

with one row per hyperplane H and (p-1)-subset J of coordinates; the
entry of column I = J u {i} is the signed coefficient of alpha_H at x_i.
Evaluation of an alternating p-derivation is S-multilinear in the
differentials of its arguments, so coordinate test slots suffice.

Omega^p(A,m) is never computed independently: it is D^{l-p}(A,m) with
all internal degrees shifted down by |m| (D^p = Q(A,m) * Omega^{l-p}).
The grading follows deg d/dx_i = deg dx_i = 0, so Omega degrees can be
negative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arrangement import (Arrangement, Multiplicity, defining_polynomial,
                          is_essential, render)
from .exceptions import CertificateError, StructuralError
from .groebner import (DEFAULT_MAX_PAIRS, BettiTable, FreeModule,
                       ModuleElement, Resolution, free_module_hilbert,
                       hilbert_series, kernel_of_map, minimal_free_resolution,
                       minimalize_generators)
from .linalg import det as linalg_det
from .ratpoly import Polynomial, RationalSeries


@dataclass
class LogModule:
    kind: str               # "D" or "Omega"
    p: int
    arrangement: Arrangement
    mult: Multiplicity
    generators: list        # minimal homogeneous generators in the basis d_I
    resolution: Resolution
    betti: BettiTable
    hilb: RationalSeries
    reg: int
    pd: int

    def generator_degrees(self):
        shift = 0 if self.kind == "D" else -self.mult.total
        return sorted(g.degree() + shift for g in self.generators)

    def to_json(self):
        return {
            "kind": self.kind,
            "p": self.p,
            "generators": [[poly.to_json() for poly in g.components()]
                           for g in self.generators],
            "betti": self.betti.to_json(),
            "hilbert_series": self.hilb.to_json(),
            "reg": self.reg,
            "pd": self.pd,
        }


@dataclass(frozen=True)
class SaitoCertificate:
    exponents: tuple        # sorted generator degrees d_1..d_l
    scalar: Fraction        # det(theta_i(x_j)) = scalar * Q(A,m)


_CACHE: dict = {}


def _cache_key(arr: Arrangement, mult: Multiplicity, p: int):
    return (render(arr, mult), p)


def clear_cache():
    _CACHE.clear()


def _subset_index(ell: int, p: int):
    return [tuple(c) for c in itertools.combinations(range(ell), p)]


def _constraint_rows(arr: Arrangement, p: int):
    """Row labels (hyperplane index, (p-1)-subset J) in deterministic order."""
    js = _subset_index(arr.ell, p - 1)
    return [(hi, J) for hi in range(arr.n) for J in js]


def _column_entries(arr: Arrangement, p: int, cols, rows):
    """Constant matrix of the evaluation map, as {(row, col): Fraction}."""
    row_pos = {label: r for r, label in enumerate(rows)}
    entries = {}
    for ci, I in enumerate(cols):
        for k, i in enumerate(I):
            J = tuple(x for x in I if x != i)
            sign = -1 if k % 2 else 1
            for hi, h in enumerate(arr.hyperplanes):
                c = h.coeffs[i]
                if c:
                    r = row_pos[(hi, J)]
                    entries[(r, ci)] = entries.get((r, ci), 0) + sign * c
    return entries


def derivation_module(arr: Arrangement, mult: Multiplicity, p: int,
                      max_pairs: int = DEFAULT_MAX_PAIRS) -> LogModule:
    """D^p(A,m) with minimal generators, resolution, Hilbert series."""
    ell = arr.ell
    if not 0 <= p <= ell:
        raise StructuralError(f"order p={p} out of range 0..{ell}")
    key = _cache_key(arr, mult, p)
    if key in _CACHE:
        return _CACHE[key]

    nvars = ell
    if p == 0:
        source = FreeModule(nvars, [0])
        gens = [source.basis_element(0)]
        res = Resolution(nvars, [FreeModule(nvars, [0])], [], gens)
        mod = LogModule("D", 0, arr, mult, gens, res, res.betti(),
                        free_module_hilbert(nvars, [0]), 0, 0)
        _CACHE[key] = mod
        return mod

    cols = _subset_index(ell, p)
    rows = _constraint_rows(arr, p)
    source = FreeModule(nvars, [0] * len(cols))
    target = FreeModule(nvars, [0] * len(rows))
    entries = _column_entries(arr, p, cols, rows)
    columns = []
    for ci in range(len(cols)):
        vec = {}
        for (r, cj), v in entries.items():
            if cj == ci:
                vec[(r, (0,) * nvars)] = Fraction(v)
        columns.append(ModuleElement(target, vec))
    relations = []
    for r, (hi, _) in enumerate(rows):
        q = arr.hyperplanes[hi].form() ** mult.values[hi]
        relations.append((r, q))

    raw = kernel_of_map(columns, source, target, relations, max_pairs=max_pairs)
    gens = minimalize_generators(raw, source, max_pairs=max_pairs)
    res = minimal_free_resolution(gens, source, max_pairs=max_pairs)
    res.audit()
    betti = res.betti()
    hilb = hilbert_series(res)
    reg = res.reg
    pd = res.pd

    _audit_membership(arr, mult, p, gens)
    if 1 <= p <= ell - 1 and pd > ell - 2:
        raise CertificateError(
            f"pd D^{p} = {pd} exceeds reflexivity bound {ell - 2}")
    if is_essential(arr):
        n = mult.total
        if reg is not None and reg > n - ell + p:
            raise CertificateError(
                f"regularity bound violated: reg D^{p} = {reg} > {n - ell + p}")

    mod = LogModule("D", p, arr, mult, gens, res, betti, hilb, reg, pd)
    _CACHE[key] = mod
    return mod


def _audit_membership(arr: Arrangement, mult: Multiplicity, p: int, gens):
    """Direct divisibility check of the defining condition for each generator."""
    ell = arr.ell
    cols = _subset_index(ell, p)
    for g in gens:
        comps = {I: g.component(ci) for ci, I in enumerate(cols)}
        for hi, h in enumerate(arr.hyperplanes):
            alpha_pow = h.form() ** mult.values[hi]
            for J in itertools.combinations(range(ell), p - 1):
                s = Polynomial.zero(ell)
                for i in range(ell):
                    if i in J:
                        continue
                    I = tuple(sorted(J + (i,)))
                    k = I.index(i)
                    c = h.coeffs[i]
                    if c:
                        sign = -1 if k % 2 else 1
                        s = s + comps[I].scale(sign * c)
                if not s.is_zero() and not s.is_divisible_by(alpha_pow):
                    raise CertificateError(
                        f"membership audit failed for D^{p} generator at "
                        f"hyperplane {list(h.coeffs)}")


def omega_module(arr: Arrangement, mult: Multiplicity, p: int,
                 max_pairs: int = DEFAULT_MAX_PAIRS) -> LogModule:
    """Omega^p(A,m) as the |m|-shift of D^{l-p}(A,m)."""
    ell = arr.ell
    if not 0 <= p <= ell:
        raise StructuralError(f"order p={p} out of range 0..{ell}")
    dual = derivation_module(arr, mult, ell - p, max_pairs=max_pairs)
    n = mult.total
    reg = None if dual.reg is None else dual.reg - n
    mod = LogModule("Omega", p, arr, mult, dual.generators, dual.resolution,
                    dual.betti.shifted(-n), dual.hilb.shift(-n), reg, dual.pd)
    if is_essential(arr) and reg is not None and reg > -p:
        raise CertificateError(
            f"regularity bound violated: reg Omega^{p} = {reg} > {-p}")
    return mod


def euler_derivation(arr: Arrangement) -> ModuleElement:
    """theta_E = sum x_i d/dx_i, an element of S^l of degree 1."""
    ell = arr.ell
    F = FreeModule(ell, [0] * ell)
    return F.element([Polynomial.variable(i, ell) for i in range(ell)])


def poly_det(rows) -> Polynomial:
    """Determinant of a square matrix of polynomials (Laplace expansion)."""
    n = len(rows)
    if n == 0:
        raise StructuralError("empty matrix")
    nvars = rows[0][0].nvars
    if n == 1:
        return rows[0][0]
    result = Polynomial.zero(nvars)
    for i in range(n):
        entry = rows[i][0]
        if entry.is_zero():
            continue
        minor = [[rows[r][c] for c in range(1, n)] for r in range(n) if r != i]
        term = entry * poly_det(minor)
        result = result + (term if i % 2 == 0 else -term)
    return result


def is_free(arr: Arrangement, mult: Multiplicity,
            max_pairs: int = DEFAULT_MAX_PAIRS) -> Optional[SaitoCertificate]:
    """Freeness via pd D^1 = 0, cross-validated by Saito's determinant.

    Returns the exponents (with the determinant scalar) when free, None
    otherwise.  A failing certificate on a pd-0 module is an internal
    inconsistency and raises.
    """
    d1 = derivation_module(arr, mult, 1, max_pairs=max_pairs)
    if d1.pd != 0:
        return None
    gens = d1.generators
    ell = arr.ell
    if len(gens) != ell:
        raise CertificateError(
            f"free module with {len(gens)} generators in rank {ell}")
    exps = tuple(sorted(g.degree() for g in gens))
    if sum(exps) != mult.total:
        raise CertificateError(
            f"exponent sum {sum(exps)} differs from |m| = {mult.total}")
    matrix = [[g.component(j) for j in range(ell)] for g in gens]
    d = poly_det(matrix)
    q = defining_polynomial(arr, mult)
    quo, rem = d.divide(q)
    if not rem.is_zero() or not quo.is_constant() or quo.is_zero():
        raise CertificateError("Saito determinant is not a scalar multiple of Q(A,m)")
    scalar = quo.coefficient((0,) * ell)
    return SaitoCertificate(exponents=exps, scalar=scalar)


def is_tame(arr: Arrangement, mult: Multiplicity,
            max_pairs: int = DEFAULT_MAX_PAIRS):
    """Tameness: pd Omega^p <= p for all p.  Returns (bool, pd table)."""
    ell = arr.ell
    table = {}
    for p in range(ell + 1):
        table[p] = derivation_module(arr, mult, ell - p, max_pairs=max_pairs).pd
    return all(table[p] <= p for p in table), table


def wedge_power_free(arr: Arrangement, mult: Multiplicity, p: int,
                     max_pairs: int = DEFAULT_MAX_PAIRS) -> LogModule:
    """D^p of a certified free (A,m), built as p-fold wedges of the basis."""
    cert = is_free(arr, mult, max_pairs=max_pairs)
    if cert is None:
        raise StructuralError("wedge_power_free requires a free multiarrangement")
    ell = arr.ell
    if not 0 <= p <= ell:
        raise StructuralError(f"order p={p} out of range 0..{ell}")
    basis = derivation_module(arr, mult, 1, max_pairs=max_pairs).generators
    cols = _subset_index(ell, p)
    source = FreeModule(ell, [0] * len(cols))
    gens = []
    for K in itertools.combinations(range(ell), p):
        comps = []
        for I in cols:
            minor = [[basis[k].component(i) for i in I] for k in K]
            comps.append(poly_det(minor) if minor else Polynomial.one(ell))
        gens.append(source.element(comps))
    degrees = sorted(g.degree() for g in gens)
    res = Resolution(ell, [FreeModule(ell, degrees)], [], gens)
    return LogModule("D", p, arr, mult, gens, res, res.betti(),
                     free_module_hilbert(ell, degrees),
                     max(degrees) if degrees else None, 0)
