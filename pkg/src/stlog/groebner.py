"""Groebner bases, syzygies and minimal free resolutions for graded
submodules of free S-modules, S = Q[x1..xl].

The engine works on homogeneous elements of a graded free module with
generator shifts (the generator of S[-d] sits in degree d).  Monomial
order: graded reverse lex on monomials, extended position-over-term with
degree-first comparison using the shifts.  Buchberger with module
S-pairs; syzygies come from recording the representation of every basis
element in terms of the original generators and collecting the
relations produced by S-pairs that reduce to zero (Schreyer).

Internally module elements are flat dicts {(component, monomial): Fraction};
the public ModuleElement type wraps one per-component Polynomial view.
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from math import comb

from .exceptions import ResourceBudgetError, StructuralError
from .ratpoly import (LaurentPolynomial, Polynomial, RationalSeries,
                      grevlex_key, mono_deg, mono_div, mono_divides,
                      mono_lcm, mono_mul, mono_zero)

DEFAULT_MAX_PAIRS = 500_000


# ---------------------------------------------------------------------------
# public domain types

class FreeModule:
    """Graded free module  ⊕_j S[-shifts[j]]  over S in `nvars` variables."""

    __slots__ = ("nvars", "shifts")

    def __init__(self, nvars: int, shifts):
        self.nvars = nvars
        self.shifts = tuple(int(s) for s in shifts)

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and self.nvars == other.nvars
                and self.shifts == other.shifts)

    def __hash__(self):
        return hash((self.nvars, self.shifts))

    def __repr__(self):
        return f"FreeModule(nvars={self.nvars}, shifts={list(self.shifts)})"

    def zero_element(self) -> "ModuleElement":
        return ModuleElement(self, {})

    def basis_element(self, j: int) -> "ModuleElement":
        return ModuleElement(self, {(j, mono_zero(self.nvars)): Fraction(1)})

    def element(self, components) -> "ModuleElement":
        """Build from a sequence of Polynomial, one per generator."""
        components = list(components)
        if len(components) != self.rank:
            raise StructuralError(
                f"expected {self.rank} components, got {len(components)}")
        vec = {}
        for j, p in enumerate(components):
            if p.nvars != self.nvars:
                raise StructuralError("component variable count mismatch")
            for m, c in p.terms.items():
                vec[(j, m)] = c
        return ModuleElement(self, vec)


class ModuleElement:
    """Homogeneous (in all uses here) element of a graded free module."""

    __slots__ = ("module", "vec")

    def __init__(self, module: FreeModule, vec):
        self.module = module
        self.vec = {t: c for t, c in vec.items() if c}

    def is_zero(self) -> bool:
        return not self.vec

    def component(self, j: int) -> Polynomial:
        return Polynomial(self.module.nvars,
                          {m: c for (i, m), c in self.vec.items() if i == j})

    def components(self):
        return [self.component(j) for j in range(self.module.rank)]

    def degree(self):
        """Degree of a homogeneous element; None for zero."""
        if not self.vec:
            return None
        degs = {mono_deg(m) + self.module.shifts[i] for (i, m) in self.vec}
        if len(degs) != 1:
            raise StructuralError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) + self.module.shifts[i] for (i, m) in self.vec}
        return len(degs) <= 1

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        vec = dict(self.vec)
        _iadd_scaled(vec, other.vec, Fraction(1), mono_zero(self.module.nvars))
        return ModuleElement(self.module, vec)

    def __sub__(self, other):
        vec = dict(self.vec)
        _iadd_scaled(vec, other.vec, Fraction(-1), mono_zero(self.module.nvars))
        return ModuleElement(self.module, vec)

    def __neg__(self):
        return ModuleElement(self.module, {t: -c for t, c in self.vec.items()})

    def scale_poly(self, p: Polynomial) -> "ModuleElement":
        vec = {}
        for m, c in p.terms.items():
            _iadd_scaled(vec, self.vec, c, m)
        return ModuleElement(self.module, vec)

    def __eq__(self, other):
        return (isinstance(other, ModuleElement)
                and self.module == other.module and self.vec == other.vec)

    def __hash__(self):
        return hash((self.module, frozenset(self.vec.items())))

    def canonical_key(self):
        return tuple(sorted(self.vec.items()))

    def __repr__(self):
        comps = ", ".join(str(p) for p in self.components())
        return f"({comps})"


class ModuleOrder:
    """Degree-first, then position-over-term, then grevlex."""

    __slots__ = ("shifts",)

    def __init__(self, module: FreeModule):
        self.shifts = module.shifts

    def key(self, term):
        comp, m = term
        return (mono_deg(m) + self.shifts[comp], -comp,
                tuple(-e for e in reversed(m)))


# ---------------------------------------------------------------------------
# flat-vector helpers

def _iadd_scaled(dst, src, c, mono):
    """dst += c * x^mono * src, in place."""
    for (comp, m), v in src.items():
        t = (comp, mono_mul(m, mono))
        s = dst.get(t, 0) + c * v
        if s:
            dst[t] = s
        else:
            dst.pop(t, None)


def _scaled(vec, c):
    return {t: c * v for t, v in vec.items()}


# ---------------------------------------------------------------------------
# the Buchberger engine

class _Row:
    __slots__ = ("vec", "lead", "rep")

    def __init__(self, vec, lead, rep):
        self.vec = vec      # monic: coefficient of lead is 1
        self.lead = lead    # (comp, mono)
        self.rep = rep      # combination of original generators, or None


class GroebnerEngine:
    """Incremental Buchberger over a graded free module.

    With track=True every basis row carries its representation in terms
    of the original generators and S-pairs that reduce to zero are
    collected as syzygies of the generators.
    """

    def __init__(self, module: FreeModule, track: bool = False,
                 max_pairs: int = DEFAULT_MAX_PAIRS):
        self.module = module
        self.order = ModuleOrder(module)
        self.key = self.order.key
        self.track = track
        self.max_pairs = max_pairs
        self.rows: list[_Row] = []
        self._lead_index: dict[int, list] = {}  # comp -> [(mono, row_idx)]
        self._pairs: list = []                  # heap of (deg, i, j)
        self._pairs_done = 0
        self.gen_degrees: list[int] = []
        self.syzygies: list[dict] = []          # raw rep vecs over gen indices

    # -- reduction -----------------------------------------------------
    def _find_reducer(self, term):
        comp, m = term
        for lm, idx in self._lead_index.get(comp, ()):
            if mono_divides(lm, m):
                return idx
        return None

    def _reduce(self, vec, quotients=None):
        """Full normal form of vec against the current basis.

        quotients, if given, is filled as {row_idx: {mono: coeff}} with
        vec = remainder + sum quotients[k] * rows[k].vec.
        """
        rem = dict(vec)
        out = {}
        key = self.key
        while rem:
            t = max(rem, key=key)
            c = rem[t]
            idx = self._find_reducer(t)
            if idx is None:
                del rem[t]
                out[t] = c
                continue
            row = self.rows[idx]
            shift = mono_div(t[1], row.lead[1])
            del rem[t]
            for (comp2, m2), c2 in row.vec.items():
                if (comp2, m2) == row.lead:
                    continue
                tt = (comp2, mono_mul(m2, shift))
                s = rem.get(tt, 0) - c * c2
                if s:
                    rem[tt] = s
                else:
                    rem.pop(tt, None)
            if quotients is not None:
                q = quotients.setdefault(idx, {})
                q[shift] = q.get(shift, 0) + c
        return out

    def _rep_of_quotients(self, quotients):
        rep = {}
        for idx, q in quotients.items():
            row_rep = self.rows[idx].rep
            for mono, c in q.items():
                _iadd_scaled(rep, row_rep, c, mono)
        return rep

    # -- basis growth --------------------------------------------------
    def _append_row(self, vec, rep):
        lead = max(vec, key=self.key)
        lc = vec[lead]
        if lc != 1:
            vec = _scaled(vec, 1 / lc)
            if rep is not None:
                rep = _scaled(rep, 1 / lc)
        idx = len(self.rows)
        self.rows.append(_Row(vec, lead, rep))
        self._lead_index.setdefault(lead[0], []).append((lead[1], idx))
        shifts = self.module.shifts
        for j, other in enumerate(self.rows[:-1]):
            if other.lead[0] == lead[0]:
                lcm = mono_lcm(other.lead[1], lead[1])
                deg = mono_deg(lcm) + shifts[lead[0]]
                heapq.heappush(self._pairs, (deg, j, idx))
        return idx

    def add_generator(self, vec, degree=None):
        """Feed one original generator (flat dict); returns its index."""
        gi = len(self.gen_degrees)
        if degree is None:
            degree = 0
            if vec:
                degree = max(mono_deg(m) + self.module.shifts[c] for c, m in vec)
        self.gen_degrees.append(degree)
        rep = {(gi, mono_zero(self.module.nvars)): Fraction(1)} if self.track else None
        quotients = {} if self.track else None
        rem = self._reduce(vec, quotients)
        if self.track:
            rep_used = self._rep_of_quotients(quotients)
            _iadd_scaled(rep, rep_used, Fraction(-1), mono_zero(self.module.nvars))
        if rem:
            self._append_row(rem, rep)
        elif self.track and rep:
            self.syzygies.append(rep)
        return gi

    def complete(self):
        """Process all pending S-pairs (Buchberger)."""
        key = self.key
        zero_mono = mono_zero(self.module.nvars)
        while self._pairs:
            self._pairs_done += 1
            if self._pairs_done > self.max_pairs:
                raise ResourceBudgetError(
                    f"S-pair budget exceeded ({self.max_pairs})")
            _, i, j = heapq.heappop(self._pairs)
            ri, rj = self.rows[i], self.rows[j]
            lcm = mono_lcm(ri.lead[1], rj.lead[1])
            si = mono_div(lcm, ri.lead[1])
            sj = mono_div(lcm, rj.lead[1])
            vec = {}
            _iadd_scaled(vec, ri.vec, Fraction(1), si)
            _iadd_scaled(vec, rj.vec, Fraction(-1), sj)
            if not vec:
                if self.track:
                    rep = {}
                    _iadd_scaled(rep, ri.rep, Fraction(1), si)
                    _iadd_scaled(rep, rj.rep, Fraction(-1), sj)
                    if rep:
                        self.syzygies.append(rep)
                continue
            quotients = {} if self.track else None
            rem = self._reduce(vec, quotients)
            if rem:
                rep = None
                if self.track:
                    rep = {}
                    _iadd_scaled(rep, ri.rep, Fraction(1), si)
                    _iadd_scaled(rep, rj.rep, Fraction(-1), sj)
                    used = self._rep_of_quotients(quotients)
                    _iadd_scaled(rep, used, Fraction(-1), zero_mono)
                self._append_row(rem, rep)
            elif self.track:
                rep = {}
                _iadd_scaled(rep, ri.rep, Fraction(1), si)
                _iadd_scaled(rep, rj.rep, Fraction(-1), sj)
                used = self._rep_of_quotients(quotients)
                _iadd_scaled(rep, used, Fraction(-1), zero_mono)
                if rep:
                    self.syzygies.append(rep)

    # -- extraction ----------------------------------------------------
    def normal_form_vec(self, vec):
        return self._reduce(vec)

    def reduced_basis_vecs(self):
        """Deterministic reduced Groebner basis as flat dicts."""
        key = self.key
        # keep rows whose lead is not divisible by another kept lead
        order = sorted(range(len(self.rows)), key=lambda i: key(self.rows[i].lead))
        kept = []
        for i in order:
            lead = self.rows[i].lead
            divisible = any(k[0] == lead[0] and mono_divides(k[1], lead[1])
                            for k in kept)
            if not divisible:
                kept.append(lead)
        kept_rows = [r for r in self.rows if r.lead in kept]
        # tail-reduce each against the others
        out = []
        for r in kept_rows:
            others = [s for s in kept_rows if s is not r]
            index = {}
            rows = []
            for s in others:
                index.setdefault(s.lead[0], []).append((s.lead[1], len(rows)))
                rows.append(s)
            red = _normal_form_vec(r.vec, rows, index, key)
            if red:
                lead = max(red, key=key)
                red = _scaled(red, 1 / red[lead])
                out.append(red)
        out.sort(key=lambda v: key(max(v, key=key)))
        return out


def _normal_form_vec(vec, rows, lead_index, key):
    rem = dict(vec)
    out = {}
    while rem:
        t = max(rem, key=key)
        c = rem[t]
        idx = None
        for lm, i in lead_index.get(t[0], ()):
            if mono_divides(lm, t[1]):
                idx = i
                break
        if idx is None:
            del rem[t]
            out[t] = c
            continue
        row = rows[idx]
        shift = mono_div(t[1], row.lead[1])
        del rem[t]
        for (comp2, m2), c2 in row.vec.items():
            if (comp2, m2) == row.lead:
                continue
            tt = (comp2, mono_mul(m2, shift))
            s = rem.get(tt, 0) - c * c2
            if s:
                rem[tt] = s
            else:
                rem.pop(tt, None)
    return out


# ---------------------------------------------------------------------------
# public operations

def groebner_basis(gens, module: FreeModule | None = None,
                   max_pairs: int = DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis of the submodule generated by gens."""
    gens = list(gens)
    if module is None:
        if not gens:
            raise StructuralError("empty generator list without explicit module")
        module = gens[0].module
    eng = GroebnerEngine(module, track=False, max_pairs=max_pairs)
    for g in gens:
        if g.module != module:
            raise StructuralError("generators live in different free modules")
        if not g.is_zero():
            eng.add_generator(g.vec, g.degree())
    eng.complete()
    return [ModuleElement(module, v) for v in eng.reduced_basis_vecs()]


def normal_form(v: ModuleElement, gb) -> ModuleElement:
    """Remainder of v modulo a Groebner basis gb."""
    module = v.module
    key = ModuleOrder(module).key
    rows = []
    index = {}
    for g in gb:
        lead = max(g.vec, key=key)
        vec = _scaled(g.vec, 1 / g.vec[lead])
        index.setdefault(lead[0], []).append((lead[1], len(rows)))
        rows.append(_Row(vec, lead, None))
    return ModuleElement(module, _normal_form_vec(v.vec, rows, index, key))


def syzygy_module(gens, module: FreeModule | None = None,
                  max_pairs: int = DEFAULT_MAX_PAIRS):
    """Generators of the first syzygy module of the given generator list.

    Returns (syzygies, F) where F is the free module on the generators
    (shifts = generator degrees) and each syzygy is a ModuleElement of F.
    """
    gens = list(gens)
    if module is None:
        if not gens:
            raise StructuralError("empty generator list without explicit module")
        module = gens[0].module
    eng = GroebnerEngine(module, track=True, max_pairs=max_pairs)
    for g in gens:
        eng.add_generator(g.vec, 0 if g.is_zero() else g.degree())
    eng.complete()
    F = FreeModule(module.nvars, eng.gen_degrees)
    out = []
    seen = set()
    for rep in eng.syzygies:
        el = ModuleElement(F, rep)
        if el.is_zero():
            continue
        k = el.canonical_key()
        lead = max(el.vec, key=ModuleOrder(F).key)
        el = ModuleElement(F, _scaled(el.vec, 1 / el.vec[lead]))
        k = el.canonical_key()
        if k not in seen:
            seen.add(k)
            out.append(el)
    return out, F


def kernel_of_map(columns, source: FreeModule, target: FreeModule,
                  relations=None, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Kernel of the graded map source -> target/(relations).

    columns[j] is the image of the j-th basis vector of source, as a
    ModuleElement of target.  relations is an optional list of
    (row_index, Polynomial q) meaning the target is divided by q*e_row.
    Computed by augmenting with the relation columns and projecting the
    syzygies onto the source coordinates.
    """
    columns = list(columns)
    if len(columns) != source.rank:
        raise StructuralError("column count does not match source rank")
    eng = GroebnerEngine(target, track=True, max_pairs=max_pairs)
    for j, col in enumerate(columns):
        eng.add_generator(col.vec, source.shifts[j])
    n = source.rank
    for (r, q) in (relations or []):
        vec = {(r, m): c for m, c in q.terms.items()}
        deg = (q.degree() or 0) + target.shifts[r]
        eng.add_generator(vec, deg)
    eng.complete()
    okey = ModuleOrder(source).key
    out = []
    seen = set()
    for rep in eng.syzygies:
        vec = {(i, m): c for (i, m), c in rep.items() if i < n}
        if not vec:
            continue
        lead = max(vec, key=okey)
        vec = _scaled(vec, 1 / vec[lead])
        el = ModuleElement(source, vec)
        k = el.canonical_key()
        if k not in seen:
            seen.add(k)
            out.append(el)
    return out


def minimalize_generators(gens, module: FreeModule | None = None,
                          max_pairs: int = DEFAULT_MAX_PAIRS):
    """Minimal homogeneous generating subset (graded Nakayama).

    Processes candidates by increasing degree and keeps those not in the
    submodule generated by the generators kept so far.
    """
    gens = [g for g in gens if not g.is_zero()]
    if module is None:
        if not gens:
            return []
        module = gens[0].module
    ordered = sorted(gens, key=lambda g: (g.degree(), g.canonical_key()))
    eng = GroebnerEngine(module, track=False, max_pairs=max_pairs)
    kept = []
    for g in ordered:
        if eng.normal_form_vec(g.vec):
            kept.append(g)
            eng.add_generator(g.vec, g.degree())
            eng.complete()
    return kept


def lift(v: ModuleElement, gens, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Express v as sum q_i * gens[i]; returns [Polynomial] or None.

    None means v is not in the submodule generated by gens.
    """
    module = v.module
    eng = GroebnerEngine(module, track=True, max_pairs=max_pairs)
    for g in gens:
        eng.add_generator(g.vec, 0 if g.is_zero() else g.degree())
    eng.complete()
    quotients = {}
    rem = eng._reduce(v.vec, quotients)
    if rem:
        return None
    rep = eng._rep_of_quotients(quotients)
    coeffs = [{} for _ in gens]
    for (i, m), c in rep.items():
        coeffs[i][m] = coeffs[i].get(m, 0) + c
    return [Polynomial(module.nvars, t) for t in coeffs]


# ---------------------------------------------------------------------------
# resolutions

class BettiTable:
    """Graded Betti numbers beta_{i,d} read off a minimal resolution."""

    __slots__ = ("counts", "pd", "reg")

    def __init__(self, counts, pd: int, reg):
        self.counts = dict(counts)
        self.pd = pd
        self.reg = reg

    def beta(self, i: int, d: int) -> int:
        return self.counts.get((i, d), 0)

    def shifted(self, k: int) -> "BettiTable":
        return BettiTable({(i, d + k): c for (i, d), c in self.counts.items()},
                          self.pd, None if self.reg is None else self.reg + k)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.counts == other.counts

    def to_json(self):
        rows = [{"i": i, "d": d, "count": c}
                for (i, d), c in sorted(self.counts.items())]
        return {"betti": rows, "pd": self.pd, "reg": self.reg}

    def __repr__(self):
        rows = ", ".join(f"b[{i},{d}]={c}"
                         for (i, d), c in sorted(self.counts.items()))
        return f"BettiTable({rows}; pd={self.pd}, reg={self.reg})"


class Resolution:
    """Minimal graded free resolution of a submodule of a free module.

    modules[0..m] are the free modules F_i; diffs[i-1] holds the columns
    of d_i : F_i -> F_{i-1} as ModuleElements of F_{i-1}.  `generators`
    are the minimal generators of the resolved module (images of the F_0
    basis in the original ambient module).
    """

    __slots__ = ("nvars", "modules", "diffs", "generators")

    def __init__(self, nvars, modules, diffs, generators):
        self.nvars = nvars
        self.modules = list(modules)
        self.diffs = list(diffs)
        self.generators = list(generators)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def pd(self) -> int:
        return self.length

    @property
    def reg(self):
        vals = [s - i for i, F in enumerate(self.modules) for s in F.shifts]
        return max(vals) if vals else None

    def betti(self) -> BettiTable:
        counts = {}
        for i, F in enumerate(self.modules):
            for s in F.shifts:
                counts[(i, s)] = counts.get((i, s), 0) + 1
        return BettiTable(counts, self.pd, self.reg)

    def audit(self):
        """Check d∘d = 0 and minimality (no nonzero constant entries)."""
        from .exceptions import CertificateError
        for cols in self.diffs:
            for col in cols:
                for p in col.components():
                    for m, c in p.terms.items():
                        if mono_deg(m) == 0 and c:
                            raise CertificateError(
                                "non-minimal resolution: constant entry")
        for i in range(1, len(self.diffs)):
            prev = self.diffs[i - 1]
            for col in self.diffs[i]:
                acc = {}
                for j, p in enumerate(col.components()):
                    if p.is_zero():
                        continue
                    for m, c in p.terms.items():
                        _iadd_scaled(acc, prev[j].vec, c, m)
                if acc:
                    raise CertificateError("resolution differentials do not compose to zero")


def minimal_free_resolution(gens, module: FreeModule | None = None,
                            max_pairs: int = DEFAULT_MAX_PAIRS) -> Resolution:
    """Minimal graded free resolution of the submodule generated by gens.

    Minimality is achieved by taking minimal generators of every syzygy
    module; the no-constant-entry invariant is auditable afterwards.
    """
    gens = [g for g in gens if not g.is_zero()]
    if module is None:
        if not gens:
            raise StructuralError("empty generator list without explicit module")
        module = gens[0].module
    gens0 = minimalize_generators(gens, module, max_pairs=max_pairs)
    if not gens0:
        return Resolution(module.nvars, [FreeModule(module.nvars, [])], [], [])
    F0 = FreeModule(module.nvars, [g.degree() for g in gens0])
    modules = [F0]
    diffs = []
    current = gens0
    current_ambient = module
    while True:
        syz, F_prev = syzygy_module(current, current_ambient, max_pairs=max_pairs)
        # F_prev has one generator per element of `current`; its shifts
        # agree with modules[-1] by construction
        syz = minimalize_generators(syz, F_prev, max_pairs=max_pairs)
        if not syz:
            break
        F_next = FreeModule(module.nvars, [s.degree() for s in syz])
        target = modules[-1]
        cols = [ModuleElement(target, s.vec) for s in syz]
        diffs.append(cols)
        modules.append(F_next)
        current = syz
        current_ambient = F_prev
        if len(modules) > module.nvars + 2:
            raise ResourceBudgetError("resolution longer than Hilbert bound")
    return Resolution(module.nvars, modules, diffs, gens0)


def hilbert_series(res: Resolution) -> RationalSeries:
    """Alternating sum of shift generating functions over (1-x)^nvars."""
    num = {}
    for i, F in enumerate(res.modules):
        sign = 1 if i % 2 == 0 else -1
        for s in F.shifts:
            num[s] = num.get(s, 0) + sign
    return RationalSeries(LaurentPolynomial(num), res.nvars)


def free_module_hilbert(nvars: int, shifts) -> RationalSeries:
    num = {}
    for s in shifts:
        num[s] = num.get(s, 0) + 1
    return RationalSeries(LaurentPolynomial(num), nvars)


# ---------------------------------------------------------------------------
# Artinian quotients

def quotient_colength(ideal_gens, nvars: int | None = None,
                      max_pairs: int = DEFAULT_MAX_PAIRS):
    """Colength and Hilbert function of S/I for a homogeneous ideal I.

    Returns (colength, {degree: dimension}) when the quotient is finite
    dimensional over Q, None otherwise.
    """
    ideal_gens = [g for g in ideal_gens if not g.is_zero()]
    if nvars is None:
        if not ideal_gens:
            return None
        nvars = ideal_gens[0].nvars
    S1 = FreeModule(nvars, [0])
    elements = [ModuleElement(S1, {(0, m): c for m, c in g.terms.items()})
                for g in ideal_gens]
    gb = groebner_basis(elements, S1, max_pairs=max_pairs)
    leads = [max(g.vec, key=ModuleOrder(S1).key)[1] for g in gb]
    bounds = [None] * nvars
    for lm in leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        return None
    hf = {}
    total = 0
    for exps in itertools.product(*(range(b) for b in bounds)):
        if any(mono_divides(lm, exps) for lm in leads):
            continue
        d = sum(exps)
        hf[d] = hf.get(d, 0) + 1
        total += 1
    return total, dict(sorted(hf.items()))


def poly_dimension(nvars: int, d: int) -> int:
    """dim_Q of the degree-d part of Q[x1..xl]."""
    if d < 0:
        return 0
    return comb(nvars + d - 1, d)
