"""Hyperplane (multi)arrangements: parsing, canonical form, rank,
essentialization, deletion, restriction, product decomposition.

File format (UTF-8 text): '#' starts a comment, the first directive is
`ell <int>`, then one `H c1 c2 ... cl [m=<int>]` line per hyperplane.
"""

from __future__ import annotations

from math import gcd

from . import linalg
from .exceptions import ParseError, StructuralError
from .ratpoly import Polynomial


class Hyperplane:
    """Primitive integer linear form; first nonzero coefficient positive."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        if not any(coeffs):
            raise StructuralError("zero linear form is not a hyperplane")
        g = 0
        for c in coeffs:
            g = gcd(g, abs(c))
        coeffs = [c // g for c in coeffs]
        first = next(c for c in coeffs if c)
        if first < 0:
            coeffs = [-c for c in coeffs]
        self.coeffs = tuple(coeffs)

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    def form(self) -> Polynomial:
        return Polynomial.from_linear_form(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __repr__(self):
        return f"H{list(self.coeffs)}"


class Arrangement:
    """Central arrangement: ordered list of distinct hyperplanes in Q^ell.

    The hyperplane order is canonical (lexicographic on coefficient
    tuples) so equal arrangements serialize identically.
    """

    __slots__ = ("ell", "hyperplanes")

    def __init__(self, ell: int, hyperplanes):
        self.ell = int(ell)
        hps = list(hyperplanes)
        for h in hps:
            if h.ell != self.ell:
                raise StructuralError("hyperplane dimension mismatch")
        if len(set(hps)) != len(hps):
            raise StructuralError("duplicate hyperplanes")
        self.hyperplanes = tuple(sorted(hps))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def __eq__(self, other):
        return (isinstance(other, Arrangement) and self.ell == other.ell
                and self.hyperplanes == other.hyperplanes)

    def __hash__(self):
        return hash((self.ell, self.hyperplanes))

    def __repr__(self):
        return f"Arrangement(ell={self.ell}, n={self.n})"

    def index_of(self, h: Hyperplane) -> int:
        try:
            return self.hyperplanes.index(h)
        except ValueError:
            raise StructuralError(f"hyperplane {h!r} not in arrangement")


class Multiplicity:
    """Positive integer multiplicities aligned with the hyperplane order."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if any(v < 1 for v in values):
            raise StructuralError("multiplicities must be positive")
        self.values = values

    @classmethod
    def simple(cls, n: int) -> "Multiplicity":
        return cls((1,) * n)

    @property
    def total(self) -> int:
        """|m|, the degree of the defining polynomial."""
        return sum(self.values)

    def is_simple(self) -> bool:
        return all(v == 1 for v in self.values)

    def __eq__(self, other):
        return isinstance(other, Multiplicity) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Multiplicity{self.values}"


# ---------------------------------------------------------------------------
# parsing / rendering

def parse(text: str):
    """Parse the arrangement file format; returns (Arrangement, Multiplicity)."""
    ell = None
    rows = []  # (Hyperplane, multiplicity, line number)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "ell":
            if ell is not None:
                raise ParseError("duplicate ell directive", line=lineno)
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise ParseError("malformed ell directive", line=lineno)
            ell = int(parts[1])
            if ell < 1:
                raise ParseError("ell must be at least 1", line=lineno)
        elif parts[0] == "H":
            if ell is None:
                raise ParseError("H line before ell directive", line=lineno)
            mult = 1
            coeff_parts = parts[1:]
            if coeff_parts and coeff_parts[-1].startswith("m="):
                mtxt = coeff_parts[-1][2:]
                if not mtxt.isdigit() or int(mtxt) < 1:
                    raise ParseError("malformed multiplicity", line=lineno)
                mult = int(mtxt)
                coeff_parts = coeff_parts[:-1]
            if len(coeff_parts) != ell:
                raise ParseError(
                    f"expected {ell} coefficients, got {len(coeff_parts)}",
                    line=lineno)
            try:
                coeffs = [int(c) for c in coeff_parts]
            except ValueError:
                raise ParseError("non-integer coefficient", line=lineno)
            if not any(coeffs):
                raise ParseError("zero row is not a hyperplane", line=lineno)
            rows.append((Hyperplane(coeffs), mult, lineno))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", line=lineno)
    if ell is None:
        raise ParseError("missing ell directive")
    seen = {}
    for h, _, lineno in rows:
        if h in seen:
            raise ParseError(
                f"duplicate hyperplane {list(h.coeffs)} (first at line {seen[h]})",
                line=lineno)
        seen[h] = lineno
    rows.sort(key=lambda r: r[0].coeffs)
    arr = Arrangement(ell, [h for h, _, _ in rows])
    mult = Multiplicity([m for _, m, _ in rows])
    return arr, mult


def render(arr: Arrangement, mult: Multiplicity | None = None) -> str:
    lines = [f"ell {arr.ell}"]
    values = mult.values if mult else (1,) * arr.n
    for h, m in zip(arr.hyperplanes, values):
        suffix = f" m={m}" if m != 1 else ""
        lines.append("H " + " ".join(str(c) for c in h.coeffs) + suffix)
    return "\n".join(lines) + "\n"


def to_json(arr: Arrangement, mult: Multiplicity | None = None):
    values = mult.values if mult else (1,) * arr.n
    return {"ell": arr.ell,
            "hyperplanes": [{"coeffs": list(h.coeffs), "m": m}
                            for h, m in zip(arr.hyperplanes, values)]}


# ---------------------------------------------------------------------------
# combinatorial operations

def rank(arr: Arrangement) -> int:
    return linalg.rank([h.coeffs for h in arr.hyperplanes])


def is_essential(arr: Arrangement) -> bool:
    return rank(arr) == arr.ell


def essentialize(arr: Arrangement, mult: Multiplicity):
    """Equivalent essential arrangement in rank(arr) variables.

    Coordinates are the pivot columns of the echelonized coefficient
    matrix: a coordinate subspace complementary to the common center, so
    restriction is plain column selection.
    """
    _, pivots = linalg.rref([h.coeffs for h in arr.hyperplanes])
    r = len(pivots)
    if r == arr.ell:
        return arr, mult
    pairs = sorted(
        (Hyperplane([h.coeffs[c] for c in pivots]), m)
        for h, m in zip(arr.hyperplanes, mult.values))
    return (Arrangement(r, [h for h, _ in pairs]),
            Multiplicity([m for _, m in pairs]))


def delete(arr: Arrangement, mult: Multiplicity, h: Hyperplane):
    """Remove one hyperplane, carrying the remaining multiplicities."""
    idx = arr.index_of(h)
    pairs = [(hp, m) for i, (hp, m) in
             enumerate(zip(arr.hyperplanes, mult.values)) if i != idx]
    return (Arrangement(arr.ell, [hp for hp, _ in pairs]),
            Multiplicity([m for _, m in pairs]))


def restrict(arr: Arrangement, mult: Multiplicity, h: Hyperplane) -> Arrangement:
    """Restriction A^H for a simple arrangement: deduplicated traces on H."""
    if not mult.is_simple():
        raise StructuralError("restriction is defined only for m == 1")
    arr.index_of(h)
    basis = linalg.kernel_basis([h.coeffs])
    traces = set()
    for other in arr.hyperplanes:
        if other == h:
            continue
        image = [sum(c * b for c, b in zip(other.coeffs, bvec))
                 for bvec in basis]
        if any(image):
            traces.add(Hyperplane(image))
    return Arrangement(arr.ell - 1, sorted(traces))


def decompose_product(arr: Arrangement, mult: Multiplicity):
    """Partition into irreducible factors (matroid connected components).

    The forms are the columns of an l x n matrix of full row rank.  Row
    reduction preserves any block-diagonal structure (a row supported on
    one block never gets mixed into another), and the rref is unique, so
    the connected components of its row/column support graph are exactly
    the matroid components, i.e. the finest product decomposition.
    """
    if not is_essential(arr):
        raise StructuralError("decompose_product expects an essential arrangement")
    mat = [[h.coeffs[i] for h in arr.hyperplanes] for i in range(arr.ell)]
    ech, _ = linalg.rref(mat)
    parent = list(range(arr.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in ech:
        support = [j for j, v in enumerate(row) if v]
        for j in support[1:]:
            parent[find(j)] = find(support[0])
    groups = {}
    for j in range(arr.n):
        groups.setdefault(find(j), []).append(j)
    blocks = list(groups.values())
    blocks.sort(key=lambda blk: min(arr.hyperplanes[i].coeffs for i in blk))
    out = []
    for blk in blocks:
        hps = [arr.hyperplanes[i] for i in sorted(blk)]
        ms = [mult.values[i] for i in sorted(blk)]
        pairs = sorted(zip(hps, ms))
        out.append((Arrangement(arr.ell, [h for h, _ in pairs]),
                    Multiplicity([m for _, m in pairs])))
    return out


def is_irreducible(arr: Arrangement, mult: Multiplicity | None = None) -> bool:
    """Irreducibility of the essentialized arrangement."""
    if mult is None:
        mult = Multiplicity.simple(arr.n)
    ess, essm = essentialize(arr, mult)
    if ess.n == 0:
        return False
    return len(decompose_product(ess, essm)) == 1


def defining_polynomial(arr: Arrangement, mult: Multiplicity | None = None) -> Polynomial:
    """Q(A,m), the product of the forms raised to their multiplicities."""
    values = mult.values if mult else (1,) * arr.n
    q = Polynomial.one(arr.ell)
    for h, m in zip(arr.hyperplanes, values):
        q = q * h.form() ** m
    return q
