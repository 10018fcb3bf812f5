"""Exact bivariate polynomials in q and t, q-analogues, and grid-based
polynomial equality testing.

Coefficients are Python ints (arbitrary precision); specializations are
``fractions.Fraction``.  Equality of evaluator-defined polynomials is
decided on a deterministic grid of prime points: q-values are drawn from
the small primes, t-values from primes >= 101, so no mixed prime-power
coincidences can make structured denominators vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


class PoleError(ArithmeticError):
    """An evaluator hit a vanishing denominator at a grid point."""


class InfeasibleGridError(RuntimeError):
    """Every candidate grid point was rejected by an evaluator."""


class QtPolynomial:
    """Sparse polynomial in q and t with exact integer coefficients.

    Terms are stored as ``{(q_exp, t_exp): coeff}`` with no zero
    coefficients and no negative exponents.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (eq, et), c in items:
                if eq < 0 or et < 0:
                    raise ValueError(f"negative exponent ({eq}, {et})")
                c = data.get((eq, et), 0) + c
                if c:
                    data[(eq, et)] = c
                else:
                    data.pop((eq, et), None)
        self.terms = data

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c}) if c else cls()

    @classmethod
    def monomial(cls, coeff, q_exp=0, t_exp=0):
        return cls({(q_exp, t_exp): coeff}) if coeff else cls()

    @classmethod
    def q(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    # -- ring operations ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QtPolynomial):
            return other
        if isinstance(other, int):
            return QtPolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            c = out.get(k, 0) + c
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        res = QtPolynomial.__new__(QtPolynomial)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QtPolynomial.__new__(QtPolynomial)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                c = out.get(k, 0) + c1 * c2
                if c:
                    out[k] = c
                else:
                    del out[k]
        res = QtPolynomial.__new__(QtPolynomial)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = QtPolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = QtPolynomial.const(other)
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- queries -----------------------------------------------------

    def degree(self):
        """Max (q_degree, t_degree) over all terms; (-1, -1) for zero."""
        if not self.terms:
            return (-1, -1)
        return (max(k[0] for k in self.terms), max(k[1] for k in self.terms))

    def coeff(self, q_exp, t_exp):
        return self.terms.get((q_exp, t_exp), 0)

    def eval(self, q0, t0):
        """Exact evaluation; returns a Fraction when inputs are Fractions."""
        total = 0
        for (eq, et), c in self.terms.items():
            total += c * q0**eq * t0**et
        return total

    def transpose(self):
        """Swap the roles of q and t."""
        return QtPolynomial({(et, eq): c for (eq, et), c in self.terms.items()})

    def exact_div(self, other):
        """Exact polynomial division; raises ValueError on nonzero remainder."""
        if not isinstance(other, QtPolynomial) or other.is_zero():
            raise ValueError("division by zero polynomial")
        lead = max(other.terms)
        lead_c = other.terms[lead]
        rem = dict(self.terms)
        out = {}
        while rem:
            (a, b) = max(rem)
            c = rem[(a, b)]
            da, db = a - lead[0], b - lead[1]
            if da < 0 or db < 0 or c % lead_c:
                raise ValueError("inexact polynomial division")
            qc = c // lead_c
            out[(da, db)] = qc
            for (a2, b2), c2 in other.terms.items():
                k = (da + a2, db + b2)
                v = rem.get(k, 0) - qc * c2
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return QtPolynomial(out)

    def csv_rows(self):
        """Rows (q_exp, t_exp, coeff) sorted lexicographically."""
        return [(eq, et, self.terms[(eq, et)]) for eq, et in sorted(self.terms)]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (eq, et) in sorted(self.terms):
            c = self.terms[(eq, et)]
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("q", eq), ("t", et))
                if e
            )
            if mono:
                cs = {1: "", -1: "-"}.get(c, str(c) + "*")
                parts.append(cs + mono)
            else:
                parts.append(str(c))
        s = " + ".join(parts).replace("+ -", "- ")
        return s


class QtRational:
    """Quotient of two QtPolynomials, evaluated exactly at rational points.

    No normal form is computed; equality questions go through grid
    evaluation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = QtPolynomial.one()
        if isinstance(num, int):
            num = QtPolynomial.const(num)
        if isinstance(den, int):
            den = QtPolynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        self.num = num
        self.den = den

    def __mul__(self, other):
        if isinstance(other, (int, QtPolynomial)):
            other = QtRational(other)
        return QtRational(self.num * other.num, self.den * other.den)

    def __add__(self, other):
        if isinstance(other, (int, QtPolynomial)):
            other = QtRational(other)
        return QtRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return QtRational(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, QtPolynomial)):
            other = QtRational(other)
        return self + (-other)

    def eval(self, q0, t0):
        d = self.den.eval(q0, t0)
        if d == 0:
            raise PoleError(f"pole at ({q0}, {t0})")
        return Fraction(self.num.eval(q0, t0), 1) / d


@dataclass(frozen=True)
class EvalPoint:
    """An exact rational evaluation point with an attached degree bound."""

    q0: Fraction
    t0: Fraction
    degree_bound: int = 0

    def swap(self):
        return EvalPoint(self.t0, self.q0, self.degree_bound)


# -- q-analogues -----------------------------------------------------


def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int of negative integer")
    return QtPolynomial({(i, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError("q_factorial of negative integer")
    if n == 0:
        return QtPolynomial.one()
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial [n choose k]_q; zero when n < k."""
    if n < 0 or k < 0:
        raise ValueError("q_binomial arguments must be non-negative")
    if n < k:
        return QtPolynomial.zero()
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


# -- prime grids -----------------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def _primes_from(start, count):
    out = []
    n = start
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n += 1
    return tuple(out)


def q_primes(count):
    """q-coordinates of the grid: 2, 3, 5, 7, ..."""
    return _primes_from(2, count)


def t_primes(count):
    """t-coordinates of the grid: 101, 103, 107, ... (disjoint from q_primes)."""
    return _primes_from(101, count)


def eval_grid(degree_bound):
    """The deterministic (degree_bound+1)^2 grid of EvalPoints."""
    qs = q_primes(degree_bound + 1)
    ts = t_primes(degree_bound + 1)
    return [
        EvalPoint(Fraction(a), Fraction(b), degree_bound) for a in qs for b in ts
    ]


def poly_equal_by_grid(f, g, degree_bound, max_replacements=8):
    """Decide f == g for evaluators of polynomials of per-variable degree
    <= degree_bound.

    ``f`` and ``g`` map (q0, t0) to exact numbers and may raise PoleError.
    For each of degree_bound+1 distinct q-values the difference is checked
    at degree_bound+1 distinct t-values, which forces the zero polynomial.
    A point where a side reports a pole (or where the two prime lists
    would collide) is replaced by a further t-prime at the same q, so the
    column argument stays intact.
    """
    m = degree_bound + 1
    qs = q_primes(m)
    ts = t_primes(m * (max_replacements + 1))
    for i in range(m):
        q0 = Fraction(qs[i])
        for j in range(m):
            for rep in range(max_replacements + 1):
                t0 = Fraction(ts[j + rep * m])
                if t0 == q0:
                    continue
                try:
                    if f(q0, t0) != g(q0, t0):
                        return False
                    break
                except PoleError:
                    continue
            else:
                raise InfeasibleGridError(
                    f"no usable point for grid cell ({i}, {j})"
                )
    return True


def binom2(h):
    """binomial(h, 2), used as a q-exponent."""
    return comb(h, 2)
