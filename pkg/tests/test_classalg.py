from fractions import Fraction

import pytest

from weighted_hurwitz.classalg import (
    CentralElement,
    class_product,
    class_sum,
    central_weight_element,
    idempotent,
    idempotent_eigenvalue_check,
    identity_element,
    jm_monomial,
    jucys_elementary,
    structure_constants,
)
from weighted_hurwitz.exact import parse_rational_function as R
from weighted_hurwitz.partitions import enumerate_partitions
from weighted_hurwitz.perms import ga_class_coefficients, jm_elementary_direct, jm_monomial_direct
from weighted_hurwitz.weights import coefficient, parse_generator


def C(*coeffs):
    n = sum(coeffs[0][0])
    return CentralElement(n, dict(coeffs))


def test_class_product_examples():
    x = C(((3,), R("q")), ((2, 1), 2))
    assert class_product(identity_element(3), x) == x
    assert class_product(class_sum((2,)), class_sum((2,))) == class_sum((1, 1))
    assert class_product(class_sum((2, 1)), class_sum((2, 1))) == C(((1, 1, 1), 3), ((3,), 3))


def test_size_mismatch():
    with pytest.raises(ValueError):
        class_product(class_sum((2,)), class_sum((3,)))


def test_structure_constants_two_routes():
    for n in range(1, 8):
        direct = structure_constants(n, "direct")
        assert direct == structure_constants(n, "character")
        ident = (1,) * n
        for mu in enumerate_partitions(n):
            assert direct[(ident, mu)] == {mu: 1}
    assert structure_constants(3)[((2, 1), (2, 1))][(3,)] == 3


def test_associative_commutative():
    for n in range(2, 6):
        parts = enumerate_partitions(n)
        for a in parts:
            for b in parts:
                ab = class_product(class_sum(a), class_sum(b))
                assert ab == class_product(class_sum(b), class_sum(a))
                for c in parts[:3]:
                    assert class_product(ab, class_sum(c)) == class_product(class_sum(a), class_product(class_sum(b), class_sum(c)))


def test_jucys_examples():
    assert jucys_elementary(3, 1) == class_sum((2, 1))
    assert jucys_elementary(3, 2) == class_sum((3,))
    for n in range(1, 6):
        assert jucys_elementary(n, 0) == identity_element(n)
    with pytest.raises(ValueError):
        jucys_elementary(3, 3)


def test_jucys_theorem_direct():
    for n in range(1, 7):
        for k in range(n):
            assert ga_class_coefficients(jm_elementary_direct(n, k)) == dict(jucys_elementary(n, k).coeffs)


def test_jm_monomial_examples():
    assert jm_monomial(3, (1,)) == class_sum((2, 1))
    assert jm_monomial(3, (1, 1)) == class_sum((3,))
    assert jm_monomial(3, (2,)) == C(((1, 1, 1), 3), ((3,), 1))


def test_jm_monomial_direct():
    for n in range(1, 6):
        for d in range(1, 4):
            for lam in enumerate_partitions(d):
                direct = ga_class_coefficients(jm_monomial_direct(n, lam))
                assert direct == dict(jm_monomial(n, lam).coeffs)


def test_central_weight_element_examples():
    E = parse_generator("E")
    s = central_weight_element(E, 3, 3)
    assert s[2] == class_sum((3,))
    assert s[3].is_zero()
    Eq = parse_generator("E(q)")
    s = central_weight_element(Eq, 3, 2)
    expected = (class_sum((3,)).scale(coefficient(Eq, 1) ** 2)
                + jm_monomial(3, (2,)).scale(coefficient(Eq, 2)))
    assert s[2] == expected
    for spec in ["exp", "H", "E(q)", "Q(q,p)"]:
        assert central_weight_element(parse_generator(spec), 4, 2)[0] == identity_element(4)


def test_central_weight_multiplicative():
    Q = central_weight_element(parse_generator("Q(q,p)"), 3, 3)
    # H(p) is H(q) with q renamed
    Eq = central_weight_element(parse_generator("E(q)"), 3, 3)
    Hq = central_weight_element(parse_generator("H(q)"), 3, 3)
    Hp_terms = tuple(
        CentralElement(3, {mu: c.subs("q", R("p")) for mu, c in t.coeffs.items()}) for t in Hq.terms
    )
    from weighted_hurwitz.classalg import ZSeriesCentral
    product = Eq * ZSeriesCentral(3, 3, Hp_terms)
    assert all(product[d] == Q[d] for d in range(4))
    E2 = central_weight_element(parse_generator("E^2"), 4, 3)
    E = central_weight_element(parse_generator("E"), 4, 3)
    assert all((E * E)[d] == E2[d] for d in range(4))


def test_idempotents():
    for n in range(1, 6):
        Fs = {lam: idempotent(lam) for lam in enumerate_partitions(n)}
        total = CentralElement(n)
        for a, Fa in Fs.items():
            total = total + Fa
            for b, Fb in Fs.items():
                assert class_product(Fa, Fb) == (Fa if a == b else CentralElement(n))
        assert total == identity_element(n)


def test_eigenvalue_examples():
    E = parse_generator("E")
    assert idempotent_eigenvalue_check(E, 3, (3,), 3)
    assert idempotent_eigenvalue_check(E, 3, (1, 1, 1), 3)
    for spec in ["exp", "H", "E(q)"]:
        assert idempotent_eigenvalue_check(parse_generator(spec), 1, (1,), 2)


def test_eigenvalues_all_generators():
    for spec in ["exp", "E", "E^2", "H", "E(q)", "E'(q)", "H(q)", "Q(q,p)"]:
        G = parse_generator(spec)
        for n in range(2, 5):
            for lam in enumerate_partitions(n):
                assert idempotent_eigenvalue_check(G, n, lam, 3)
