"""Exact arithmetic: multivariate polynomials, rational functions, truncated series.

Scalars are :class:`fractions.Fraction`.  Polynomials live in a fixed
universe of indeterminates ``q, p, z, u`` (other generator tuples are allowed
for :class:`MultiPoly`, which the Cauchy kernel checks use).  Storage and gcd
are delegated to FLINT's sparse multivariate polynomials.

Canonical form of a :class:`RationalFunction`:

* numerator and denominator are coprime,
* both have integer coefficients whose combined gcd is 1,
* the denominator's lowest term, in graded order with ``q < p < z < u``,
  has a positive coefficient (so ``1/(2(1-q))`` prints as ``1/(2-2*q)``).

Two rational functions are equal exactly when their canonical forms agree.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Sequence, Union

import flint

GENS: tuple[str, ...] = ("q", "p", "z", "u")

Scalar = Union[int, Fraction]


@cache
def _context(gens: tuple[str, ...]):
    return flint.fmpq_mpoly_ctx.get(gens, "deglex")


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, flint.fmpz):
        return flint.fmpq(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def _fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _order_key(exp: tuple[int, ...]) -> tuple:
    # graded, then lexicographic with the last generator most significant
    return (sum(exp), exp[::-1])


def _format_terms(terms: Sequence[tuple[tuple[int, ...], int]], gens: Sequence[str]) -> str:
    out = []
    for exp, c in sorted(terms, key=lambda t: _order_key(t[0])):
        mono = "*".join(
            g if e == 1 else f"{g}^{e}" for g, e in zip(gens, exp) if e
        )
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}*{mono}"
        if out and not s.startswith("-"):
            s = "+" + s
        out.append(s)
    return "".join(out) if out else "0"


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | Scalar | None = None,
                 gens: Sequence[str] = GENS):
        ctx = _context(tuple(gens))
        if terms is None:
            self._p = ctx.constant(0)
        elif isinstance(terms, Mapping):
            self._p = ctx.from_dict({tuple(e): _fmpq(c) for e, c in terms.items() if c})
        else:
            self._p = ctx.constant(_fmpq(terms))

    @classmethod
    def _wrap(cls, poly) -> MultiPoly:
        obj = cls.__new__(cls)
        obj._p = poly
        return obj

    @classmethod
    def gen(cls, name: str, gens: Sequence[str] = GENS) -> MultiPoly:
        gens = tuple(gens)
        return cls._wrap(_context(gens).gens()[gens.index(name)])

    @property
    def gens(self) -> tuple[str, ...]:
        return tuple(self._p.context().names())

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {tuple(e): _fraction(c) for e, c in self._p.terms()}

    def __len__(self) -> int:
        return len(self._p)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant()

    def total_degree(self) -> int:
        return -1 if self._p.is_zero() else int(self._p.total_degree())

    def degree(self, var: str) -> int:
        if self._p.is_zero():
            return -1
        return int(self._p.degrees()[self.gens.index(var)])

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other._p
        return self._p.context().constant(_fmpq(other))

    def __add__(self, other):
        return MultiPoly._wrap(self._p + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return MultiPoly._wrap(self._p - self._coerce(other))

    def __rsub__(self, other):
        return MultiPoly._wrap(self._coerce(other) - self._p)

    def __mul__(self, other):
        return MultiPoly._wrap(self._p * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly._wrap(-self._p)

    def __pow__(self, k: int):
        return MultiPoly._wrap(self._p ** k)

    def __eq__(self, other) -> bool:
        try:
            return self._p == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        return MultiPoly._wrap(self._p / other._p)

    def gcd(self, other: MultiPoly) -> MultiPoly:
        """Monic gcd (leading coefficient 1 in FLINT's internal order)."""
        return MultiPoly._wrap(self._p.gcd(other._p))

    def truncate(self, max_degree: int, vars: Iterable[str] | None = None) -> MultiPoly:
        """Drop terms whose degree in ``vars`` (default: all) exceeds ``max_degree``."""
        gens = self.gens
        idx = [gens.index(v) for v in vars] if vars is not None else range(len(gens))
        kept = {
            e: c for e, c in self._p.to_dict().items()
            if sum(e[i] for i in idx) <= max_degree
        }
        return MultiPoly._wrap(self._p.context().from_dict(kept))

    def __str__(self) -> str:
        ints = all(c.q == 1 for c in self._p.coeffs())
        if ints:
            return _format_terms([(tuple(e), int(c.p)) for e, c in self._p.terms()], self.gens)
        return str(self._p)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _trailing_sign(poly) -> int:
    exp, c = min(poly.terms(), key=lambda t: _order_key(tuple(t[0])))
    return 1 if c > 0 else -1


def _primitive_scale(num, den):
    """Scale num/den by one rational so both are integral with joint content 1."""
    coeffs = list(num.coeffs()) + list(den.coeffs())
    lcm = flint.fmpz(1)
    for c in coeffs:
        if c.q != 1:
            lcm = lcm.lcm(c.q)
    g = flint.fmpz(0)
    for c in coeffs:
        g = g.gcd(c.p * (lcm // c.q))
        if g == 1:
            break
    factor = flint.fmpq(lcm, g) * _trailing_sign(den)
    if factor != 1:
        num = num * factor
        den = den * factor
    return num, den


class RationalFunction:
    """Canonical fraction of polynomials in ``q, p, z, u`` over the rationals."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num: MultiPoly | Scalar | str = 0, den: MultiPoly | Scalar = 1):
        if isinstance(num, str):
            parsed = parse_rational_function(num)
            self._n, self._d, self._hash = parsed._n, parsed._d, None
            return
        ctx = _context(GENS)
        n = num._p if isinstance(num, MultiPoly) else ctx.constant(_fmpq(num))
        d = den._p if isinstance(den, MultiPoly) else ctx.constant(_fmpq(den))
        self._n, self._d = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, n, d) -> RationalFunction:
        obj = cls.__new__(cls)
        obj._n, obj._d, obj._hash = n, d, None
        return obj

    @classmethod
    def var(cls, name: str) -> RationalFunction:
        return cls._raw(_context(GENS).gens()[GENS.index(name)], _context(GENS).constant(1))

    @property
    def num(self) -> MultiPoly:
        return MultiPoly._wrap(self._n)

    @property
    def den(self) -> MultiPoly:
        return MultiPoly._wrap(self._d)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self._n.is_zero()

    def __bool__(self) -> bool:
        return not self._n.is_zero()

    def is_constant(self) -> bool:
        return self._n.is_constant() and self._d.is_constant()

    def is_polynomial(self) -> bool:
        return self._d.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self._n.is_zero():
            return Fraction(0)
        return _fraction(self._n.coeffs()[0]) / _fraction(self._d.coeffs()[0])

    def variables(self) -> set[str]:
        used = set()
        for poly in (self._n, self._d):
            if not poly.is_zero():
                used.update(g for g, e in zip(GENS, poly.degrees()) if e)
        return used

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction._from_scalar(other)
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        return NotImplemented

    @staticmethod
    def _from_scalar(c: Scalar) -> RationalFunction:
        c = Fraction(c)
        ctx = _context(GENS)
        return RationalFunction._raw(ctx.constant(c.numerator), ctx.constant(c.denominator))

    def _scaled(self, c: Fraction) -> RationalFunction:
        if c == 0:
            return ZERO
        c = _fmpq(c)
        return RationalFunction._raw(*_primitive_scale(self._n * c.p, self._d * c.q))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._n.is_zero():
            return self
        if self._n.is_zero():
            return other
        if self._d == other._d:
            return RationalFunction._raw(*_canonical(self._n + other._n, self._d))
        return RationalFunction._raw(
            *_canonical(self._n * other._d + other._n * self._d, self._d * other._d)
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._raw(-self._n, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._n.is_zero() or other._n.is_zero():
            return ZERO
        if other.is_constant():
            return self._scaled(other.constant_value())
        if self.is_constant():
            return other._scaled(self.constant_value())
        return RationalFunction._raw(*_canonical(self._n * other._n, self._d * other._d))

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction._raw(*_primitive_scale(self._d, self._n))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._scaled(1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self._n ** k, self._d ** k)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(str(self))
        return self._hash

    # -- substitution -----------------------------------------------------
    def subs(self, var: str, value: RationalFunction | Scalar) -> RationalFunction:
        """Substitute ``value`` for the indeterminate ``var``."""
        value = self._coerce(value)
        return _poly_subs(self._n, var, value) / _poly_subs(self._d, var, value)

    def series(self, var: str, cutoff: int) -> TruncatedSeries:
        return series_expand(self, var, cutoff)

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        num = _format_terms([(tuple(e), int(c.p)) for e, c in self._n.terms()], GENS)
        if self._d.is_one():
            return num
        if len(self._n) > 1:
            num = f"({num})"
        dterms = list(self._d.terms())
        den = _format_terms([(tuple(e), int(c.p)) for e, c in dterms], GENS)
        simple = len(dterms) == 1 and (
            self._d.is_constant() or (dterms[0][1] == 1 and sum(1 for e in dterms[0][0] if e) == 1)
        )
        return f"{num}/{den}" if simple else f"{num}/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"


def _canonical(n, d):
    if d.is_zero():
        raise ZeroDivisionError("zero denominator")
    if n.is_zero():
        return n, d.context().constant(1)
    if not d.is_constant() and not n.is_constant():
        g = n.gcd(d)
        if not g.is_one():
            n = n / g
            d = d / g
    return _primitive_scale(n, d)


def _poly_subs(poly, var: str, value: RationalFunction) -> RationalFunction:
    idx = GENS.index(var)
    ctx = poly.context()
    if value.is_polynomial():
        gens = list(ctx.gens())
        gens[idx] = value._n * (1 / value._d.coeffs()[0])
        return RationalFunction._raw(*_primitive_scale(poly.compose(*gens), ctx.constant(1)))
    by_power: dict[int, dict] = {}
    for exp, c in poly.to_dict().items():
        rest = list(exp)
        k = int(rest[idx])
        rest[idx] = 0
        by_power.setdefault(k, {})[tuple(rest)] = c
    total = ZERO
    for k, terms in by_power.items():
        total = total + RationalFunction._raw(*_canonical(ctx.from_dict(terms), ctx.constant(1))) * value ** k
    return total


ZERO = RationalFunction(0)
ONE = RationalFunction(1)


def var(name: str) -> RationalFunction:
    return RationalFunction.var(name)


def as_rf(x) -> RationalFunction:
    """Coerce int, Fraction, MultiPoly or string into a RationalFunction."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return parse_rational_function(x)
    return RationalFunction(x)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'}; dividing by zero raises ZeroDivisionError."""
    a, b = as_rf(a), as_rf(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError(f"division of {a} by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"cannot parse {self.text!r}: expected {value or 'more input'}")
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        result = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"cannot parse {self.text!r}: trailing input")
        return result

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, text = self.take()
            if kind != "num":
                raise ValueError(f"cannot parse {self.text!r}: exponents must be integers")
            return base ** (sign * int(text))
        return base

    def atom(self):
        kind, text = self.take()
        if kind == "num":
            return RationalFunction(int(text))
        if kind == "name":
            if text not in GENS:
                raise ValueError(f"unknown indeterminate {text!r}; expected one of {GENS}")
            return RationalFunction.var(text)
        if text == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ValueError(f"cannot parse {self.text!r}: unexpected {text!r}")


def parse_rational_function(text: str) -> RationalFunction:
    """Parse strings like ``(1+2*q)/(3*(1-q)*(1-q^2))``."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# truncated power series


class TruncatedSeries:
    """Power series in one indeterminate, exact through degree ``cutoff``."""

    __slots__ = ("variable", "cutoff", "coefficients")

    def __init__(self, variable: str, cutoff: int, coefficients: Iterable = ()):
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        coeffs = [as_rf(c) for c in list(coefficients)[: cutoff + 1]]
        coeffs += [ZERO] * (cutoff + 1 - len(coeffs))
        self.variable = variable
        self.cutoff = cutoff
        self.coefficients = tuple(coeffs)

    def _check(self, other: TruncatedSeries) -> int:
        if other.variable != self.variable:
            raise ValueError("series in different variables")
        return min(self.cutoff, other.cutoff)

    def __getitem__(self, k: int) -> RationalFunction:
        return self.coefficients[k] if 0 <= k <= self.cutoff else ZERO

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        D = self._check(other)
        return TruncatedSeries(self.variable, D, [self[k] + other[k] for k in range(D + 1)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.variable, self.cutoff, [-c for c in self.coefficients])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.variable, self.cutoff, [c * other for c in self.coefficients])
        D = self._check(other)
        out = [ZERO] * (D + 1)
        for i in range(D + 1):
            a = self[i]
            if a.is_zero():
                continue
            for j in range(D + 1 - i):
                b = other[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.variable, D, out)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        c0 = self[0]
        if c0.is_zero():
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        out = [inv0]
        for k in range(1, self.cutoff + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if not self[j].is_zero():
                    acc = acc + self[j] * out[k - j]
            out.append(-acc * inv0)
        return TruncatedSeries(self.variable, self.cutoff, out)

    def truncate(self, cutoff: int) -> TruncatedSeries:
        return TruncatedSeries(self.variable, min(cutoff, self.cutoff), self.coefficients)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coefficients):
            if not c.is_zero():
                return k
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        D = self._check(other)
        return all(self[k] == other[k] for k in range(D + 1))

    def __hash__(self):
        return hash((self.variable, self.cutoff, self.coefficients))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            mono = "" if k == 0 else (self.variable if k == 1 else f"{self.variable}^{k}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.variable}^{self.cutoff + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"


def _split_by_power(poly, var: str) -> dict[int, RationalFunction]:
    idx = GENS.index(var)
    ctx = poly.context()
    grouped: dict[int, dict] = {}
    for exp, c in poly.to_dict().items():
        rest = list(exp)
        k = int(rest[idx])
        rest[idx] = 0
        grouped.setdefault(k, {})[tuple(rest)] = c
    one = ctx.constant(1)
    return {
        k: RationalFunction._raw(*_canonical(ctx.from_dict(t), one)) for k, t in grouped.items()
    }


def series_expand(r: RationalFunction, variable: str, cutoff: int) -> TruncatedSeries:
    """Taylor expansion of ``r`` at ``variable = 0`` through degree ``cutoff``.

    Raises ValueError when the denominator vanishes at the origin.
    """
    r = as_rf(r)
    num = _split_by_power(r._n, variable)
    den = _split_by_power(r._d, variable)
    d0 = den.get(0, ZERO)
    if d0.is_zero():
        raise ValueError(f"{r} has a pole at {variable}=0")
    inv0 = d0.inverse()
    out: list[RationalFunction] = []
    for k in range(cutoff + 1):
        acc = num.get(k, ZERO)
        for j in range(1, k + 1):
            dj = den.get(j)
            if dj is not None:
                acc = acc - dj * out[k - j]
        out.append(acc * inv0)
    return TruncatedSeries(variable, cutoff, out)


# ---------------------------------------------------------------------------
# Laurent expansion under var = exp(-eps)


@dataclass(frozen=True)
class LaurentSeries:
    """``sum(coefficients[k] * eps**(order + k))`` plus higher-order terms."""

    order: int
    coefficients: tuple[RationalFunction, ...]

    def coefficient(self, power: int) -> RationalFunction:
        k = power - self.order
        if k < 0:
            return ZERO
        if k >= len(self.coefficients):
            raise IndexError(f"coefficient of eps^{power} not computed")
        return self.coefficients[k]


def _exp_series(poly, var: str, length: int) -> list[RationalFunction]:
    # sum_k a_k exp(-k eps) = sum_m eps^m / m! * sum_k a_k (-k)^m
    parts = _split_by_power(poly, var)
    out = []
    for m in range(length):
        acc = ZERO
        for k, a in parts.items():
            if k or m == 0:
                acc = acc + a * Fraction((-k) ** m, math.factorial(m))
        out.append(acc)
    return out


def exp_laurent(r: RationalFunction, var: str = "q", terms: int = 2) -> LaurentSeries:
    """Expand ``r`` with ``var = exp(-eps)`` as a Laurent series in ``eps``.

    Returns the first ``terms`` coefficients starting at the leading power.
    """
    r = as_rf(r)
    if r.is_zero():
        return LaurentSeries(0, (ZERO,) * terms)
    # a nonzero polynomial of degree D vanishes to order at most D at var=1
    bound = max(r.den.degree(var), r.num.degree(var), 0) + 1
    den = _exp_series(r._d, var, bound + terms)
    num = _exp_series(r._n, var, bound + terms)
    vd = next(k for k, c in enumerate(den) if not c.is_zero())
    vn = next(k for k, c in enumerate(num) if not c.is_zero())
    quotient = series_quotient(num[vn:vn + terms], den[vd:vd + terms])
    return LaurentSeries(vn - vd, tuple(quotient))


def series_quotient(num: Sequence[RationalFunction], den: Sequence[RationalFunction]) -> list[RationalFunction]:
    """Coefficients of num/den as power series, same length as ``num``."""
    inv0 = den[0].inverse()
    out: list[RationalFunction] = []
    for k in range(len(num)):
        acc = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out
