import math

import pytest

from weighted_hurwitz.exact import ONE, ZERO, as_rf, exp_laurent, parse_rational_function as R
from weighted_hurwitz.partitions import enumerate_partitions
from weighted_hurwitz.symfun import ParameterList, elementary, eval_m
from weighted_hurwitz.weights import (
    coefficient,
    dual,
    finite_c,
    format_generator,
    geometric_weight,
    monomial_weight,
    monomial_weight_powersums,
    monomial_weight_universal,
    parse_generator,
    path_weight,
)

ALL_SPECS = ["exp", "E", "E^2", "E^3", "H", "E(q)", "E'(q)", "H(q)", "H'(q)", "Q(q,p)",
             "c:[1,2,q]", "coeffs:[1,1/2,1/3]"]


def G(spec):
    return parse_generator(spec)


def test_coefficient_examples():
    assert coefficient(G("exp"), 3) == R("1/6")
    assert coefficient(G("H(q)"), 2) == R("1/((1-q)*(1-q^2))")
    assert coefficient(G("Q(q,p)"), 1) == R("1/(1-q)+1/(1-p)")
    for spec in ALL_SPECS:
        assert coefficient(G(spec), 0) == ONE


def test_classical_coefficients():
    for k in range(6):
        assert coefficient(G("E^3"), k) == math.comb(3, k)
        assert coefficient(G("H"), k) == ONE
        assert coefficient(G("E"), k) == (ONE if k <= 1 else ZERO)


def test_path_weight():
    assert path_weight(G("E"), (1, 1, 1)) == ONE
    for lam in [(2,), (2, 1), (3, 1, 1)]:
        assert path_weight(G("E"), lam) == ZERO
    assert path_weight(G("E(q)"), (2,)) == R("q/((1-q)*(1-q^2))")
    assert path_weight(G("exp"), (2, 2), tilde=True) == ONE


def test_dual():
    assert dual(G("E")) == G("H")
    assert dual(G("E(q)")) == G("H(q)")
    assert dual(G("exp")) == G("exp")
    with pytest.raises(ValueError):
        dual(G("Q(q,p)"))
    with pytest.raises(ValueError):
        dual(G("c:[1,2]"))


def test_dual_coefficient_relation():
    for spec in ["E", "H", "E(q)", "H(q)", "E'(q)", "H'(q)", "exp"]:
        a, b = G(spec), dual(G(spec))
        for k in range(6):
            total = sum((coefficient(a, j) * coefficient(b, k - j) * (-1) ** j for j in range(k + 1)), ZERO)
            assert total == (ONE if k == 0 else ZERO)


def test_qqp_product_law():
    Eq = G("E(q)")
    p_list = ParameterList.geometric(0, "p")
    from weighted_hurwitz.symfun import complete
    for k in range(9):
        conv = sum((coefficient(Eq, m) * complete(k - m, p_list) for m in range(k + 1)), ZERO)
        assert coefficient(G("Q(q,p)"), k) == conv


def test_classical_limit_of_coefficients():
    for k in range(1, 6):
        for spec in ["E(q)", "H(q)"]:
            L = exp_laurent(coefficient(G(spec), k), "q", 2)
            assert L.order == -k
            assert L.coefficient(-k) == R(f"1/{math.factorial(k)}")


def test_finite_c():
    gen = finite_c(["2", "3", "q"])
    c = ParameterList.finite(["2", "3", "q"])
    for k in range(5):
        assert coefficient(gen, k) == elementary(k, c)
    for d in range(1, 5):
        for lam in enumerate_partitions(d):
            assert monomial_weight(gen, lam) == eval_m(lam, c)


def test_geometric_weight_examples():
    assert geometric_weight(G("E(q)"), [(3,)]) == R("1/(1-q^2)")
    assert geometric_weight(G("E(q)"), [(2, 1), (2, 1)]) == R("q/((1-q)*(1-q^2))")
    assert geometric_weight(G("H(q)"), [(2, 1), (2, 1)]) == R("1/((1-q)*(1-q^2))")
    with pytest.raises(ValueError):
        geometric_weight(G("E(q)"), [(1, 1, 1)])
    with pytest.raises(ValueError):
        geometric_weight(G("E(q)"), [(2,), (2, 1)])


def test_weight_routes_agree():
    for spec in ALL_SPECS:
        gen = G(spec)
        for d in range(1, 5):
            for lam in enumerate_partitions(d):
                a = monomial_weight(gen, lam)
                assert a == monomial_weight_universal(gen, lam)
                assert a == monomial_weight_powersums(gen, lam)


def test_parse_round_trip():
    for spec in ALL_SPECS:
        assert parse_generator(format_generator(G(spec))) == G(spec)
    with pytest.raises(ValueError):
        parse_generator("F(q)")
    with pytest.raises(ValueError):
        parse_generator("coeffs:[2,1]")
