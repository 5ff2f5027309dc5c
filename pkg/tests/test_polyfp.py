import itertools
import random

import pytest

from froblab.errors import ParseError, UnsupportedInputError
from froblab.polyfp import (
    GradedIdealBasis,
    MonomialIdeal,
    PolynomialFp,
    frobenius_power,
    ideal_membership_bounded,
    monomial_colon,
    monomial_ideal_intersection,
    monomial_ideal_sum,
    monomials_of_degree,
    parse_polynomial,
    squarefree_minimal_primes,
    standard_monomial_splitting,
)


def poly(text, p, n=None):
    return parse_polynomial(text, p, n)


def test_parse_and_print_roundtrip():
    f = poly("x0^3 + x1^3 + x2^3", 7)
    assert f.n_vars == 3 and f.degree() == 3 and f.is_homogeneous()
    assert f.to_text() == "x0^3 + x1^3 + x2^3"
    g = poly("2*x0*x1 - 3 + x0*x1", 5)
    assert g.as_dict() == {(1, 1): 3, (0, 0): 2}
    with pytest.raises(ParseError):
        poly("x0 + + x1", 3)
    with pytest.raises(ParseError):
        poly("y0", 3)


def test_arithmetic():
    p = 5
    f = poly("x0 + x1", p)
    g = poly("x0 - x1", p)
    assert (f * g).as_dict() == {(2, 0): 1, (0, 2): 4}
    assert (f + g).as_dict() == {(1, 0): 2}
    assert f.pow(2).as_dict() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert f.pow(0).as_dict() == {(0, 0): 1}


def test_frobenius_of_polynomial_matches_pow():
    rng = random.Random(5)
    for p in (2, 3, 5):
        for _ in range(5):
            coeffs = {
                (rng.randrange(3), rng.randrange(3)): rng.randrange(1, p)
                for _ in range(3)
            }
            f = PolynomialFp.make(p, 2, coeffs)
            assert f.frobenius(p) == f.pow(p)
            assert f.frobenius(p * p) == f.pow(p * p)


def test_frobenius_power_monomial_ideal():
    xy = MonomialIdeal.from_generators(2, [(1, 1)])
    assert frobenius_power(xy, 1, 2) == xy
    assert frobenius_power(xy, 2, 2).generators == ((2, 2),)
    i2 = MonomialIdeal.from_generators(2, [(2, 0), (0, 1)])
    assert frobenius_power(i2, 3, 3).generators == ((0, 3), (6, 0))
    with pytest.raises(ValueError):
        frobenius_power(xy, 6, 2)


def test_frobenius_power_composition():
    rng = random.Random(9)
    for _ in range(10):
        gens = [tuple(rng.randrange(4) for _ in range(3)) for _ in range(3)]
        ideal = MonomialIdeal.from_generators(3, gens)
        assert frobenius_power(frobenius_power(ideal, 2, 2), 4, 2) == frobenius_power(ideal, 8, 2)


def test_monomial_colon_basics():
    i = MonomialIdeal.from_generators(2, [(2, 2)])
    j = MonomialIdeal.from_generators(2, [(1, 1)])
    assert monomial_colon(i, j).generators == ((1, 1),)
    assert monomial_colon(i, i).is_unit
    i2 = MonomialIdeal.from_generators(2, [(3, 0), (0, 3)])
    assert monomial_colon(i2, MonomialIdeal.from_generators(2, [(1, 0)])).generators == (
        (0, 3),
        (2, 0),
    )


def test_colon_containment_property():
    rng = random.Random(13)
    for _ in range(25):
        i = MonomialIdeal.from_generators(
            3, [tuple(rng.randrange(4) for _ in range(3)) for _ in range(3)]
        )
        j = MonomialIdeal.from_generators(
            3, [tuple(rng.randrange(3) for _ in range(3)) for _ in range(2)]
        )
        q = monomial_colon(i, j)
        for g in j.generators:
            for h in q.generators:
                assert i.contains_monomial(tuple(a + b for a, b in zip(g, h)))


def test_squarefree_minimal_primes():
    i = MonomialIdeal.from_generators(2, [(1, 1)])
    assert squarefree_minimal_primes(i) == ((0,), (1,))
    m = MonomialIdeal.from_generators(2, [(1, 0), (0, 1)])
    assert squarefree_minimal_primes(m) == ((0, 1),)
    assert squarefree_minimal_primes(MonomialIdeal.zero(2)) == ((),)
    assert squarefree_minimal_primes(MonomialIdeal.unit(2)) == ()


def test_splitting_examples():
    for p in (2, 3, 5):
        x = poly("x0", p, 1)
        assert standard_monomial_splitting(x.pow(p)) == x
        assert standard_monomial_splitting(x).is_zero
    f = poly("x0^2*x1^2 + x0*x1", 2)
    assert standard_monomial_splitting(f) == poly("x0*x1", 2)


def test_splitting_semilinearity():
    rng = random.Random(17)
    for p in (2, 3):
        for _ in range(10):
            s = PolynomialFp.make(
                p, 2, {(rng.randrange(3), rng.randrange(3)): rng.randrange(1, p) for _ in range(2)}
            )
            r = PolynomialFp.make(
                p, 2, {(rng.randrange(4), rng.randrange(4)): rng.randrange(1, p) for _ in range(3)}
            )
            assert standard_monomial_splitting(s.pow(p) * r) == s * standard_monomial_splitting(r)


def test_membership_trivial_cases():
    p = 5
    gens = GradedIdealBasis((poly("x0^2", p, 2), poly("x1", p, 2)), degree_cap=10)
    assert ideal_membership_bounded(poly("x0^2", p, 2), gens)
    assert not ideal_membership_bounded(poly("x0", p, 2), GradedIdealBasis((poly("x0^2", p, 2),), 10))


def test_membership_fermat_cubic_examples():
    p7 = 7
    gens7 = GradedIdealBasis(
        (poly("x0^3 + x1^3 + x2^3", p7), poly("x1^7", p7, 3), poly("x2^7", p7, 3)), 40
    )
    assert not ideal_membership_bounded(poly("x0^14", p7, 3), gens7)
    p5 = 5
    gens5 = GradedIdealBasis(
        (poly("x0^3 + x1^3 + x2^3", p5), poly("x1^5", p5, 3), poly("x2^5", p5, 3)), 40
    )
    assert ideal_membership_bounded(poly("x0^10", p5, 3), gens5)


def test_membership_rejects_inhomogeneous_generators():
    p = 3
    bad = poly("x0^2 + x1", p, 2)
    with pytest.raises(UnsupportedInputError):
        GradedIdealBasis((bad,), 10)


def test_membership_inhomogeneous_element_with_homogeneous_generators():
    # each graded component is tested separately
    p = 3
    gens = GradedIdealBasis((poly("x0", p, 2),), 10)
    assert ideal_membership_bounded(poly("x0^2 + x0*x1", p, 2), gens)
    assert not ideal_membership_bounded(poly("x0 + x1^2", p, 2), gens)


def _naive_membership(r, gens, p, n):
    """Enumerate every F_p-combination of the span {m*g} at deg(r)."""
    d = r.degree()
    span = []
    for g in gens:
        if g.is_zero or g.degree() > d:
            continue
        for mult in monomials_of_degree(n, d - g.degree()):
            span.append(PolynomialFp.monomial(p, mult) * g)
    for coeffs in itertools.product(range(p), repeat=len(span)):
        acc = PolynomialFp.zero(p, n)
        for c, s in zip(coeffs, span):
            acc = acc + s.scale(c)
        if acc == r:
            return True
    return False


def test_membership_agrees_with_naive_span():
    rng = random.Random(23)
    p, n = 2, 2
    checked_in = 0
    for _ in range(30):
        dg = rng.randrange(1, 3)
        g1 = PolynomialFp.make(
            p, n, {m: rng.randrange(p) for m in monomials_of_degree(n, dg)}
        )
        g2 = PolynomialFp.make(
            p, n, {m: rng.randrange(p) for m in monomials_of_degree(n, 2)}
        )
        gens = GradedIdealBasis((g1, g2), 8)
        d = rng.randrange(2, 4)
        r = PolynomialFp.make(p, n, {m: rng.randrange(p) for m in monomials_of_degree(n, d)})
        fast = ideal_membership_bounded(r, gens)
        slow = _naive_membership(r, (g1, g2), p, n)
        assert fast == slow
        checked_in += fast
    assert checked_in > 0  # the comparison saw both outcomes


def test_monomial_ideal_sum_intersection():
    a = MonomialIdeal.from_generators(2, [(2, 0)])
    b = MonomialIdeal.from_generators(2, [(0, 2)])
    assert monomial_ideal_sum(a, b).generators == ((0, 2), (2, 0))
    assert monomial_ideal_intersection(a, b).generators == ((2, 2),)
