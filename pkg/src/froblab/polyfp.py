"""Multivariate polynomials and monomial ideals over F_p.

Monomials are exponent tuples of fixed length.  Ideal membership is
decided one graded piece at a time by exact rank computations; this is
complete for homogeneous data, which is the only case supported.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, ParseError, UnsupportedInputError
from .gfp_linalg import check_prime, reduce_vector

Monomial = tuple[int, ...]


def mono_deg(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_quotient_clamped(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise max(a - b, 0); the generator rule for monomial colons."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_to_text(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class PolynomialFp:
    """Polynomial over F_p with nonzero coefficients only; terms are kept
    sorted lexicographically descending for deterministic output."""

    p: int
    n_vars: int
    terms: tuple[tuple[Monomial, int], ...]

    def __post_init__(self):
        check_prime(self.p)
        for m, c in self.terms:
            if len(m) != self.n_vars or any(e < 0 for e in m):
                raise ValueError("bad monomial")
            if not (0 < c < self.p):
                raise ValueError("coefficients must lie in [1, p)")
        if list(self.terms) != sorted(self.terms, key=lambda t: t[0], reverse=True):
            raise ValueError("terms not in canonical order")

    @classmethod
    def make(cls, p: int, n_vars: int, coeffs: dict[Monomial, int]) -> "PolynomialFp":
        items = []
        for m, c in coeffs.items():
            c %= p
            if c:
                items.append((tuple(m), c))
        items.sort(key=lambda t: t[0], reverse=True)
        return cls(p, n_vars, tuple(items))

    @classmethod
    def zero(cls, p: int, n_vars: int) -> "PolynomialFp":
        return cls(p, n_vars, ())

    @classmethod
    def constant(cls, p: int, n_vars: int, c: int) -> "PolynomialFp":
        return cls.make(p, n_vars, {(0,) * n_vars: c})

    @classmethod
    def variable(cls, p: int, n_vars: int, i: int) -> "PolynomialFp":
        m = tuple(1 if j == i else 0 for j in range(n_vars))
        return cls.make(p, n_vars, {m: 1})

    @classmethod
    def monomial(cls, p: int, m: Monomial, c: int = 1) -> "PolynomialFp":
        return cls.make(p, len(m), {tuple(m): c})

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_deg(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m, _ in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict[int, "PolynomialFp"]:
        buckets: dict[int, dict[Monomial, int]] = {}
        for m, c in self.terms:
            buckets.setdefault(mono_deg(m), {})[m] = c
        return {d: PolynomialFp.make(self.p, self.n_vars, b) for d, b in sorted(buckets.items())}

    def __add__(self, other: "PolynomialFp") -> "PolynomialFp":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms:
            out[m] = (out.get(m, 0) + c) % self.p
        return PolynomialFp.make(self.p, self.n_vars, out)

    def __neg__(self) -> "PolynomialFp":
        return PolynomialFp.make(self.p, self.n_vars, {m: self.p - c for m, c in self.terms})

    def __sub__(self, other: "PolynomialFp") -> "PolynomialFp":
        return self + (-other)

    def __mul__(self, other: "PolynomialFp") -> "PolynomialFp":
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % self.p
        return PolynomialFp.make(self.p, self.n_vars, out)

    def scale(self, c: int) -> "PolynomialFp":
        return PolynomialFp.make(self.p, self.n_vars, {m: (c0 * c) % self.p for m, c0 in self.terms})

    def pow(self, e: int) -> "PolynomialFp":
        if e < 0:
            raise ValueError("negative exponent")
        result = PolynomialFp.constant(self.p, self.n_vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def frobenius(self, q: int) -> "PolynomialFp":
        """q-th power for q a power of p: exponents scale, coefficients fixed."""
        _check_p_power(q, self.p)
        return PolynomialFp.make(
            self.p, self.n_vars, {tuple(e * q for e in m): c for m, c in self.terms}
        )

    def coefficient_vector(self, monos: list[Monomial], index: dict[Monomial, int]) -> np.ndarray:
        v = np.zeros(len(monos), dtype=np.int64)
        for m, c in self.terms:
            v[index[m]] = c
        return v

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.terms:
            mt = mono_to_text(m)
            if mt == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mt)
            else:
                parts.append(f"{c}*{mt}")
        return " + ".join(parts)

    def _check(self, other: "PolynomialFp") -> None:
        if self.p != other.p or self.n_vars != other.n_vars:
            raise ValueError("polynomials from different rings")


_TOKEN = re.compile(r"\s*(x\d+|\d+|\^|\*|\+|-)")


def parse_polynomial(text: str, p: int, n_vars: int | None = None) -> PolynomialFp:
    """Parse `x0^3 + 2*x1*x2 - 1` style input; coefficients reduced mod p."""
    check_prime(p)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial")

    terms: list[tuple[dict[int, int], int]] = []
    sign = 1
    i = 0

    def parse_term(i: int, sign: int):
        coeff = sign
        expo: dict[int, int] = {}
        saw_factor = False
        while i < len(tokens):
            t = tokens[i]
            if t == "*":
                i += 1
                continue
            if t in "+-":
                break
            if t.isdigit():
                coeff *= int(t)
                i += 1
            elif t.startswith("x"):
                v = int(t[1:])
                e = 1
                if i + 1 < len(tokens) and tokens[i + 1] == "^":
                    if i + 2 >= len(tokens) or not tokens[i + 2].isdigit():
                        raise ParseError("exponent expected after '^'")
                    e = int(tokens[i + 2])
                    i += 3
                else:
                    i += 1
                expo[v] = expo.get(v, 0) + e
            else:
                raise ParseError(f"unexpected token {t!r}")
            saw_factor = True
        if not saw_factor:
            raise ParseError("empty term")
        return i, coeff, expo

    expect_term = True
    at_start = True
    while i < len(tokens):
        t = tokens[i]
        if t in "+-":
            if expect_term and not at_start:
                raise ParseError(f"misplaced operator {t!r}")
            sign = -sign if t == "-" else sign
            expect_term = True
            at_start = False
            i += 1
            continue
        i, coeff, expo = parse_term(i, sign)
        sign = 1
        expect_term = False
        at_start = False
        terms.append((expo, coeff))
    if expect_term:
        raise ParseError("dangling operator")

    max_var = max((v for expo, _ in terms for v in expo), default=-1)
    n = max_var + 1 if n_vars is None else n_vars
    if max_var >= n:
        raise ParseError(f"variable x{max_var} out of range for {n} variables")
    coeffs: dict[Monomial, int] = {}
    for expo, c in terms:
        m = tuple(expo.get(j, 0) for j in range(n))
        coeffs[m] = (coeffs.get(m, 0) + c) % p
    return PolynomialFp.make(p, n, coeffs)


def _check_p_power(q: int, p: int) -> None:
    if q < 1:
        raise ValueError(f"{q} is not a power of {p}")
    while q % p == 0:
        q //= p
    if q != 1:
        raise ValueError(f"{q} is not a power of {p}")


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its unique antichain of minimal generators."""

    n_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n_vars or any(e < 0 for e in g):
                raise ValueError("bad generator")
        if self.generators != _antichain(self.n_vars, self.generators):
            raise ValueError("generators not a canonical antichain")

    @classmethod
    def from_generators(cls, n_vars: int, gens) -> "MonomialIdeal":
        return cls(n_vars, _antichain(n_vars, [tuple(g) for g in gens]))

    @classmethod
    def zero(cls, n_vars: int) -> "MonomialIdeal":
        return cls(n_vars, ())

    @classmethod
    def unit(cls, n_vars: int) -> "MonomialIdeal":
        return cls(n_vars, ((0,) * n_vars,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(mono_deg(g) == 0 for g in self.generators)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other.generators)

    def is_squarefree(self) -> bool:
        return all(all(e <= 1 for e in g) for g in self.generators)

    def to_text(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(mono_to_text(g) for g in sorted(self.generators, reverse=True)) + ")"


def _antichain(n_vars: int, gens: list[Monomial]) -> tuple[Monomial, ...]:
    gens = sorted(set(gens))
    kept = [
        g
        for g in gens
        if not any(h != g and mono_divides(h, g) for h in gens)
    ]
    return tuple(sorted(kept))


def monomial_ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_generators(a.n_vars, a.generators + b.generators)


def monomial_ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    gens = [mono_lcm(g, h) for g in a.generators for h in b.generators]
    return MonomialIdeal.from_generators(a.n_vars, gens)


def monomial_colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """(a : b), by the generator-wise exponent rule intersected over b's
    generators; (a : (0)) is the unit ideal."""
    if b.is_zero:
        return MonomialIdeal.unit(a.n_vars)
    parts = []
    for h in b.generators:
        parts.append(
            MonomialIdeal.from_generators(
                a.n_vars, [mono_quotient_clamped(g, h) for g in a.generators]
            )
        )
    out = parts[0]
    for q in parts[1:]:
        out = monomial_ideal_intersection(out, q)
    return out


def frobenius_power(ideal, q: int, p: int):
    """Generator-wise q-th power for q = p^e (e >= 0)."""
    _check_p_power(q, p)
    if isinstance(ideal, MonomialIdeal):
        return MonomialIdeal.from_generators(
            ideal.n_vars, [tuple(e * q for e in g) for g in ideal.generators]
        )
    if isinstance(ideal, GradedIdealBasis):
        return GradedIdealBasis(tuple(g.frobenius(q) for g in ideal.generators), ideal.degree_cap)
    raise TypeError(f"unsupported ideal type {type(ideal)!r}")


def squarefree_minimal_primes(ideal: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Minimal primes of a square-free monomial ideal, each as a sorted
    tuple of variable indices (minimal hitting sets of the generator
    supports).  The unit ideal has none."""
    if not ideal.is_squarefree():
        raise UnsupportedInputError("ideal is not square-free")
    if ideal.is_unit:
        return ()
    if ideal.is_zero:
        return ((),)
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.generators]
    hits: list[tuple[int, ...]] = []
    for size in range(0, ideal.n_vars + 1):
        for cand in itertools.combinations(range(ideal.n_vars), size):
            cs = set(cand)
            if all(cs & s for s in supports) and not any(set(h) <= cs for h in hits):
                hits.append(cand)
    return tuple(sorted(hits))


def standard_monomial_splitting(r: PolynomialFp) -> PolynomialFp:
    """The F_p-linear Frobenius splitting of a polynomial ring: keep the
    terms whose exponents are all divisible by p, dividing them by p.
    Satisfies T(s^p r) = s T(r)."""
    out = {}
    for m, c in r.terms:
        if all(e % r.p == 0 for e in m):
            out[tuple(e // r.p for e in m)] = c
    return PolynomialFp.make(r.p, r.n_vars, out)


def split_monomial(m: Monomial, p: int) -> Monomial | None:
    if all(e % p == 0 for e in m):
        return tuple(e // p for e in m)
    return None


@dataclass(frozen=True)
class GradedIdealBasis:
    """Homogeneous generators plus the degree cap their membership
    questions are decided under."""

    generators: tuple[PolynomialFp, ...]
    degree_cap: int

    def __post_init__(self):
        for g in self.generators:
            if not g.is_zero and not g.is_homogeneous():
                raise UnsupportedInputError("generators must be homogeneous")

    @property
    def n_vars(self) -> int:
        return self.generators[0].n_vars if self.generators else 0

    @property
    def p(self) -> int:
        return self.generators[0].p if self.generators else 2


@lru_cache(maxsize=None)
def monomials_of_degree(n_vars: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n_vars variables, lexicographically descending."""
    if n_vars == 0:
        return ((),) if d == 0 else ()
    if n_vars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


class DegreeSpans:
    """Per-degree rref of the span {m * g : g generator, deg(m g) = d},
    cached for reuse across membership queries on the same ideal."""

    def __init__(self, ideal: GradedIdealBasis):
        self.ideal = ideal
        self._cache: dict[int, tuple[np.ndarray, tuple[int, ...]]] = {}

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        return monomials_of_degree(self.ideal.n_vars, d)

    def rref_at(self, d: int) -> tuple[np.ndarray, tuple[int, ...]]:
        """Triangular echelon basis of the degree-d span, rows sorted by
        their (distinct) leading columns.  Left-to-right reduction against
        it projects onto the non-pivot monomials, which is all the
        downstream computations need."""
        if d in self._cache:
            return self._cache[d]
        p = self.ideal.p
        monos = self.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        width = len(monos)
        # single-monomial generators contribute unit rows; eliminating them
        # first just zeroes their columns everywhere else
        unit_cols: set[int] = set()
        dense_gens = []
        for g in self.ideal.generators:
            if g.is_zero or g.degree() > d:
                continue
            if len(g.terms) == 1:
                gm = g.terms[0][0]
                for mult in monomials_of_degree(self.ideal.n_vars, d - g.degree()):
                    unit_cols.add(index[mono_mul(mult, gm)])
            else:
                dense_gens.append(g)
        candidates = []
        for g in dense_gens:
            for mult in monomials_of_degree(self.ideal.n_vars, d - g.degree()):
                row = np.zeros(width, dtype=np.int64)
                nonzero = False
                for m, c in g.terms:
                    col = index[mono_mul(mult, m)]
                    if col not in unit_cols:
                        row[col] = c
                        nonzero = True
                if nonzero:
                    candidates.append(row)
        candidates.sort(key=lambda r: int(np.nonzero(r)[0][0]))
        pivot_row: dict[int, np.ndarray] = {}
        for v in candidates:
            while True:
                nz = np.nonzero(v)[0]
                if nz.size == 0:
                    break
                lead = int(nz[0])
                if lead in pivot_row:
                    v = (v - v[lead] * pivot_row[lead]) % p
                else:
                    inv = pow(int(v[lead]), p - 2, p)
                    if inv != 1:
                        v = (v * inv) % p
                    pivot_row[lead] = v
                    break
        for col in unit_cols:
            row = np.zeros(width, dtype=np.int64)
            row[col] = 1
            pivot_row[col] = row
        pivots = tuple(sorted(pivot_row))
        if pivots:
            echelon = np.vstack([pivot_row[c] for c in pivots])
        else:
            echelon = np.zeros((0, width), dtype=np.int64)
        result = (echelon, pivots)
        self._cache[d] = result
        return result

    def reduce(self, poly: PolynomialFp) -> np.ndarray:
        """Residual coefficient vector of a homogeneous polynomial after
        reduction by the span of its degree."""
        d = poly.degree()
        monos = self.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        ech, pivots = self.rref_at(d)
        return reduce_vector(ech, pivots, poly.coefficient_vector(list(monos), index), self.ideal.p)

    def contains(self, poly: PolynomialFp) -> bool:
        if poly.is_zero:
            return True
        return not np.any(self.reduce(poly))

    def quotient_monomials(self, d: int) -> tuple[Monomial, ...]:
        """Monomials spanning the degree-d piece of the quotient (non-pivots)."""
        monos = self.monomials(d)
        _, pivots = self.rref_at(d)
        pset = set(pivots)
        return tuple(m for i, m in enumerate(monos) if i not in pset)

    def normal_form(self, poly: PolynomialFp) -> PolynomialFp:
        """Reduce every homogeneous component against its degree span."""
        if poly.is_zero:
            return poly
        out = PolynomialFp.zero(poly.p, poly.n_vars)
        for _, comp in poly.homogeneous_components().items():
            res = self.reduce(comp)
            monos = self.monomials(comp.degree())
            out = out + PolynomialFp.make(poly.p, poly.n_vars, {m: int(c) for m, c in zip(monos, res)})
        return out


def ideal_membership_bounded(r: PolynomialFp, ideal: GradedIdealBasis, degree_cap: int | None = None) -> bool:
    """Exact membership test for homogeneous data, one rank comparison
    per graded piece.  Rejects non-homogeneous generators rather than
    approximating."""
    cap = ideal.degree_cap if degree_cap is None else degree_cap
    if r.is_zero:
        return True
    if r.degree() > cap:
        raise CapacityError(f"degree {r.degree()} exceeds cap {cap}")
    if not ideal.generators or all(g.is_zero for g in ideal.generators):
        return False
    spans = DegreeSpans(ideal)
    return all(spans.contains(comp) for comp in r.homogeneous_components().values())
