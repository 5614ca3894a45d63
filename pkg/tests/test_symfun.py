import pytest

from weighted_hurwitz.characters import schur_in_powersums
from weighted_hurwitz.exact import ONE, ZERO, as_rf, parse_rational_function as R
from weighted_hurwitz.partitions import enumerate_partitions
from weighted_hurwitz.symfun import (
    CL_VARIANTS,
    ParameterList,
    SymFunExpansion,
    cauchy_littlewood_check,
    convert,
    eval_basis,
    eval_e,
    eval_f,
    eval_h,
    elementary,
    eval_m,
    evaluate,
)

G0 = ParameterList.geometric(0)
G1 = ParameterList.geometric(1)


def test_eval_e():
    assert eval_e((1,), G0) == R("1/(1-q)")
    assert eval_e((2,), G0) == R("q/((1-q)*(1-q^2))")
    one = ParameterList.finite([1])
    assert eval_e((1, 1), one) == ONE
    assert eval_e((2,), one) == ZERO


def test_eval_h():
    assert eval_h((1,), G0) == R("1/(1-q)")
    assert eval_h((2,), G0) == R("1/((1-q)*(1-q^2))")
    for k in range(1, 6):
        assert eval_h((k,), ParameterList.finite([1])) == ONE


def test_eval_m():
    assert eval_m((2,), G0) == R("1/(1-q^2)")
    assert eval_m((1, 1), G0) == R("q/((1-q)*(1-q^2))")
    assert eval_m((2,), ParameterList.finite([1])) == ONE


def test_eval_f():
    assert eval_f((1,), G0) == R("1/(1-q)")
    assert eval_f((1, 1), G0) == R("1/((1-q)*(1-q^2))")
    assert eval_f((2,), G0) == R("-1/(1-q^2)")


def test_finite_list_trimming():
    assert ParameterList.finite([1, 2, 0, 0]).values == (ONE, as_rf(2))


def test_closed_forms_match_powersum_route():
    finite = ParameterList.finite([2, 3, "q", "-1/2"])
    for d in range(1, 6):
        for lam in enumerate_partitions(d):
            for basis in "ehmf":
                assert eval_basis(basis, lam, G0) == evaluate(basis, lam, G0)
                assert eval_basis(basis, lam, G1) == evaluate(basis, lam, G1)
            for basis in "ehm":
                assert eval_basis(basis, lam, finite) == evaluate(basis, lam, finite)


def test_forgotten_weakly_ordered_sum_finite():
    # f_lam(c) = (-1)^colength * sum over weakly increasing index chains, symmetrized
    c = [as_rf(2), as_rf(3), as_rf(5)]
    params = ParameterList.finite(c)
    from itertools import combinations_with_replacement, permutations
    for lam in [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1), (2, 2)]:
        orderings = set(permutations(lam))
        total = ZERO
        for a in orderings:
            for idx in combinations_with_replacement(range(len(c)), len(a)):
                term = ONE
                for i, e in zip(idx, a):
                    term = term * c[i] ** e
                total = total + term
        sign = (-1) ** (sum(lam) - len(lam))
        assert eval_f(lam, params) == total * sign


def test_offset_relation():
    for j in range(1, 6):
        assert eval_e((j,), G1) == eval_e((j,), G0) * R("q") ** j


def test_coefficient_extraction_finite():
    c = ["2", "q", "-3"]
    params = ParameterList.finite(c)
    prod = R("(1+2*z)*(1+q*z)*(1-3*z)")
    from weighted_hurwitz.exact import series_expand
    s = series_expand(prod, "z", 4)
    for d in range(5):
        assert s[d] == elementary(d, params)


def test_convert_examples():
    e2 = SymFunExpansion.single("e", (2,))
    p = convert(e2, "p")
    assert p.nonzero() == {(1, 1): R("1/2"), (2,): R("-1/2")}
    assert convert(p, "e") == e2
    s21 = convert(SymFunExpansion.single("s", (2, 1)), "p")
    assert s21.nonzero() == {k: as_rf(v) for k, v in schur_in_powersums((2, 1)).items()}
    zero = SymFunExpansion("m", {}, 3)
    for b in "pshemf":
        assert convert(zero, b).nonzero() == {}


def test_convert_round_trips():
    for d in range(1, 6):
        for lam in enumerate_partitions(d):
            for src in "pshemf":
                x = SymFunExpansion.single(src, lam)
                for dst in "pshemf":
                    assert convert(convert(x, dst), src) == x


def test_convert_errors():
    with pytest.raises(ValueError):
        convert(SymFunExpansion.single("e", (1,)), "x")
    with pytest.raises(ValueError):
        SymFunExpansion("q", {}, 1)


def test_cauchy_littlewood_examples():
    assert cauchy_littlewood_check("hm", 2, 2, 4)
    assert cauchy_littlewood_check("em", 3, 2, 4)
    assert cauchy_littlewood_check("ss", 1, 1, 3)


def test_cauchy_littlewood_rejects_wrong_pairing(monkeypatch):
    monkeypatch.setitem(CL_VARIANTS, "wrong", (-1, "e", "m", False))
    assert not cauchy_littlewood_check("wrong", 2, 2, 3)
    with pytest.raises(ValueError):
        cauchy_littlewood_check("nope", 2, 2, 3)


def test_duality_em_me():
    x = ParameterList.finite(["2", "3", "5", "7"])
    y = ParameterList.finite(["1", "-1", "4", "1/2"])
    for d in range(1, 7):
        a = sum((eval_e(l, x) * eval_m(l, y) for l in enumerate_partitions(d)), ZERO)
        b = sum((eval_m(l, x) * eval_e(l, y) for l in enumerate_partitions(d)), ZERO)
        assert a == b
