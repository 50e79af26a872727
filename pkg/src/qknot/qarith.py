"""Exact arithmetic in Z[u, u^-1] (with rational coefficients) and friends.

All polynomials are stored with exponents in the unit ``u`` where ``q = u^4``
and ``v = u^2``.  That single integer grading is enough to carry the quarter
powers ``q^(f mu^2 / 4)`` and the half powers ``v^((mu^2 - 1)/2)`` that show
up in root-of-unity sums and framing factors.

Coefficients are arbitrary-precision rationals.  Internally a polynomial is a
map ``exponent -> integer numerator`` together with one positive common
denominator, which keeps the hot loops in plain ``int`` arithmetic.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "HSeries",
    "MuPoly",
    "MuCoefficient",
    "NonDivisible",
    "QuarterPowerPresent",
    "SYMMETRIC",
    "ASYM_PLUS",
    "ASYM_MINUS",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "subst_q_inverse",
    "cyclotomic",
    "angle_factorial",
    "exact_div",
    "to_h_series",
    "general_binomial_series",
    "reduce_mod_cyclotomic",
]

SYMMETRIC = "symmetric"
ASYM_PLUS = "asym_plus"
ASYM_MINUS = "asym_minus"
_KINDS = (SYMMETRIC, ASYM_PLUS, ASYM_MINUS)


class NonDivisible(ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{dividend} is not divisible by {divisor} (remainder {remainder})")


class QuarterPowerPresent(ValueError):
    """A polynomial in q was expected but fractional powers of q occur."""


def _normalize(num: dict, den: int):
    num = {e: c for e, c in num.items() if c}
    if not num:
        return {}, 1
    if den < 0:
        num = {e: -c for e, c in num.items()}
        den = -den
    if den != 1:
        g = den
        for c in num.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        if g != 1:
            num = {e: c // g for e, c in num.items()}
            den //= g
    return num, den


class LaurentPoly:
    """Immutable Laurent polynomial in ``u`` with rational coefficients.

    >>> q = LaurentPoly.q()
    >>> str((q + 1) * (q - 1))
    '-1 + q^2'
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        num: dict[int, int] = {}
        den = 1
        if terms:
            fracs = {int(e): Fraction(c) for e, c in terms.items()}
            den = math.lcm(*(f.denominator for f in fracs.values())) if fracs else 1
            for e, f in fracs.items():
                num[e] = num.get(e, 0) + f.numerator * (den // f.denominator)
        self._num, self._den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: int = 1) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._num, obj._den = _normalize(num, den)
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def u(cls, k: int = 1) -> "LaurentPoly":
        return cls._raw({k: 1})

    @classmethod
    def v(cls, k: int = 1) -> "LaurentPoly":
        return cls._raw({2 * k: 1})

    @classmethod
    def q(cls, k: int = 1) -> "LaurentPoly":
        return cls._raw({4 * k: 1})

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable, low: int = 0) -> "LaurentPoly":
        """Polynomial ``sum c_i q^(low + i)`` from a dense coefficient list."""
        return cls({4 * (low + i): c for i, c in enumerate(coeffs) if c})

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, Fraction]:
        return {e: Fraction(c, self._den) for e, c in sorted(self._num.items())}

    def coeff(self, exponent: int) -> Fraction:
        return Fraction(self._num.get(exponent, 0), self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_integral(self) -> bool:
        return self._den == 1

    def is_q_poly(self) -> bool:
        return all(e % 4 == 0 for e in self._num)

    def is_v_poly(self) -> bool:
        return all(e % 2 == 0 for e in self._num)

    @property
    def denominator(self) -> int:
        return self._den

    def min_exp(self) -> int:
        return min(self._num)

    def max_exp(self) -> int:
        return max(self._num)

    def __len__(self):
        return len(self._num)

    def __bool__(self):
        return bool(self._num)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = dict(self._num)
            for e, c in other._num.items():
                num[e] = num.get(e, 0) + c
            return LaurentPoly._raw(num, d1)
        den = d1 * d2 // math.gcd(d1, d2)
        m1, m2 = den // d1, den // d2
        num = {e: c * m1 for e, c in self._num.items()}
        for e, c in other._num.items():
            num[e] = num.get(e, 0) + c * m2
        return LaurentPoly._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._num.items()}, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        num: dict[int, int] = {}
        get = num.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = e1 + e2
                num[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(num, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._num) != 1:
                raise ValueError("negative powers are only defined for monomials")
            ((e, c),) = self._num.items()
            return LaurentPoly({-e * (-n): Fraction(self._den, c) ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``u^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._num.items()}, self._den)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly._raw({e: x * c.numerator for e, x in self._num.items()}, self._den * c.denominator)

    def map_exponents(self, f) -> "LaurentPoly":
        num: dict[int, int] = {}
        for e, c in self._num.items():
            k = f(e)
            num[k] = num.get(k, 0) + c
        return LaurentPoly._raw(num, self._den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()), self._den))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    # rendering ----------------------------------------------------------
    def __str__(self):
        if not self._num:
            return "0"
        parts = []
        for e, f in self.terms.items():
            if e % 4 == 0:
                var, k = "q", e // 4
            elif e % 2 == 0:
                var, k = "v", e // 2
            else:
                var, k = "u", e
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(f)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if f < 0 else "") + body)
            else:
                parts.append(("- " if f < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"unit": "u", "terms": [[e, f"{f.numerator}/{f.denominator}"] for e, f in self.terms.items()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("unit") != "u":
            raise ValueError("expected unit 'u'")
        return cls({int(e): Fraction(c) for e, c in obj["terms"]})

    # polynomial helpers -------------------------------------------------
    def q_coeffs(self) -> tuple[int, list[Fraction]]:
        """Dense coefficients in q, returned as ``(lowest q-exponent, coeffs)``."""
        if not self.is_q_poly():
            raise QuarterPowerPresent(str(self))
        if not self._num:
            return 0, []
        lo, hi = self.min_exp() // 4, self.max_exp() // 4
        coeffs = [Fraction(0)] * (hi - lo + 1)
        for e, c in self._num.items():
            coeffs[e // 4 - lo] = Fraction(c, self._den)
        return lo, coeffs


# ---------------------------------------------------------------------------
# q-numbers


def _check_kind(kind):
    if kind not in _KINDS:
        raise ValueError(f"unknown q-number kind {kind!r}")


@lru_cache(maxsize=None)
def _q_integer(n: int, kind: str) -> LaurentPoly:
    if kind == SYMMETRIC:
        return LaurentPoly._raw({2 * k: 1 for k in range(1 - n, n, 2)})
    if kind == ASYM_PLUS:
        return LaurentPoly._raw({4 * k: 1 for k in range(n)})
    return LaurentPoly._raw({-4 * k: 1 for k in range(n)})


def q_integer(n: int, kind: str = SYMMETRIC) -> LaurentPoly:
    """``[n]``, ``{n}`` or ``{n}_-`` for ``n >= 0``."""
    _check_kind(kind)
    if n < 0:
        raise ValueError(f"q_integer needs n >= 0, got {n}")
    return _q_integer(n, kind)


def _signed_q_integer(n: int, kind: str) -> LaurentPoly:
    # {-n} = -q^-n {n}, [-n] = -[n]; only reached from generalized binomials
    if n >= 0:
        return _q_integer(n, kind)
    p = _q_integer(-n, kind)
    if kind == SYMMETRIC:
        return -p
    if kind == ASYM_PLUS:
        return -p.shift(4 * n)
    return -p.shift(-4 * n)


@lru_cache(maxsize=None)
def _q_factorial(n: int, kind: str) -> LaurentPoly:
    if n == 0:
        return LaurentPoly.const(1)
    return _q_factorial(n - 1, kind) * _q_integer(n, kind)


def q_factorial(n: int, kind: str = SYMMETRIC) -> LaurentPoly:
    _check_kind(kind)
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    return _q_factorial(n, kind)


@lru_cache(maxsize=None)
def _q_binomial(s: int, l: int, kind: str) -> LaurentPoly:
    if -l <= s <= -1:
        return LaurentPoly._raw({})
    top = LaurentPoly.const(1)
    for i in range(1, l + 1):
        top = top * _signed_q_integer(s + i, kind)
    return exact_div(top, _q_factorial(l, kind))


def q_binomial(s: int, l: int, kind: str = ASYM_PLUS) -> LaurentPoly:
    """Generalized q-binomial with upper argument ``s + l`` and lower ``l``.

    Computed as ``prod_{i=1..l} {s+i} / {i}`` so ``s`` may be negative.
    """
    _check_kind(kind)
    if l < 0:
        raise ValueError(f"q_binomial needs l >= 0, got {l}")
    return _q_binomial(s, l, kind)


def subst_q_inverse(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``q -> q^-1`` (equivalently ``u -> u^-1``)."""
    return p.map_exponents(lambda e: -e)


# ---------------------------------------------------------------------------
# cyclotomics and exact division


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Dense long division, ascending coefficient lists, ``b[-1] != 0``."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], a
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            if lead == 1:
                t = c
            elif isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                t = c // lead
            else:
                t = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            quot[k - db] = t
            for i in range(db + 1):
                a[k - db + i] -= t * b[i]
    rem = a[:db]
    while rem and not rem[-1]:
        rem.pop()
    return quot, rem


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(_cyclotomic_coeffs(d)))
            assert not rem
    return tuple(int(c) for c in num)


def cyclotomic(l: int) -> LaurentPoly:
    """The ``l``-th cyclotomic polynomial in ``q``."""
    if l < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {l}")
    return LaurentPoly.from_q_coeffs(_cyclotomic_coeffs(l))


@lru_cache(maxsize=None)
def angle_factorial(l: int) -> LaurentPoly:
    """``<l>! = prod_{p=1..l} Phi_p(q)``; ``<0>! = 1``."""
    if l < 0:
        raise ValueError(f"angle_factorial needs l >= 0, got {l}")
    out = LaurentPoly.const(1)
    for p in range(1, l + 1):
        out = out * cyclotomic(p)
    return out


def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    lo, hi = p.min_exp(), p.max_exp()
    out = [0] * (hi - lo + 1)
    for e, c in p._num.items():
        out[e - lo] = c
    return lo, out


def divmod_poly(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division in ``Q[u, u^-1]`` normalised so that ``b`` is a polynomial
    with nonzero constant term.  Returns ``(quotient, remainder)``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a, a
    alo, ad = _dense(a)
    blo, bd = _dense(b)
    quot, rem = _poly_divmod(ad, bd)
    qpoly = LaurentPoly({alo - blo + i: c for i, c in enumerate(quot) if c})
    rpoly = LaurentPoly({alo + i: c for i, c in enumerate(rem) if c})
    return (qpoly.scale(Fraction(b._den, a._den)), rpoly.scale(Fraction(1, a._den)))


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """``a / b`` in ``Q[u, u^-1]``; raises :class:`NonDivisible` otherwise."""
    quot, rem = divmod_poly(a, b)
    if not rem.is_zero():
        raise NonDivisible(a, b, rem)
    return quot


def reduce_mod_cyclotomic(p: LaurentPoly, n: int, unit: str = "u") -> LaurentPoly:
    """Canonical representative of ``p`` in ``Q[x]/Phi_n(x)``.

    ``x`` is ``u`` by default; with ``unit="q"`` the polynomial must be a pure
    q-polynomial and the reduction happens modulo ``Phi_n(q)``.
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    step = {"u": 1, "q": 4}[unit]
    if step == 4 and not p.is_q_poly():
        raise QuarterPowerPresent(str(p))
    if p.is_zero():
        return p
    # x^n == 1 modulo Phi_n, which clears negative exponents
    folded = [0] * n
    for e, c in p._num.items():
        folded[(e // step) % n] += c
    _, rem = _poly_divmod(folded, list(_cyclotomic_coeffs(n)))
    return LaurentPoly({step * i: Fraction(c, p._den) for i, c in enumerate(rem) if c})


# ---------------------------------------------------------------------------
# power series in h = q - 1


class HSeries:
    """Truncated power series ``sum_{n<=order} c_n h^n`` with ``h = q - 1``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "HSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "HSeries":
        return cls([1], order)

    def __add__(self, other: "HSeries") -> "HSeries":
        n = min(self.order, other.order)
        return HSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other: "HSeries") -> "HSeries":
        return self + (-other)

    def __neg__(self):
        return HSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return HSeries(out, n)

    __rmul__ = __mul__

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"HSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def _gen_binom(k: int, n: int) -> int:
    # C(k, n) for arbitrary integer k
    out = 1
    for t in range(n):
        out *= k - t
    return out // math.factorial(n)


def to_h_series(p: LaurentPoly, order: int) -> HSeries:
    """Expand a pure q-polynomial at ``q = 1 + h`` up to ``h^order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if not p.is_q_poly():
        raise QuarterPowerPresent(str(p))
    out = [0] * (order + 1)
    for e, c in p._num.items():
        k = e // 4
        b = 1
        for n in range(order + 1):
            out[n] += c * b
            b = b * (k - n) // (n + 1)
    return HSeries([Fraction(x, p._den) for x in out], order)


class MuCoefficient:
    """Polynomial in the color ``mu`` with rational coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, mu):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * mu + c
        return out

    def __add__(self, other: "MuCoefficient") -> "MuCoefficient":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return MuCoefficient(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MuCoefficient(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return MuCoefficient()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return MuCoefficient(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MuCoefficient):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self == MuCoefficient(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"MuCoefficient({[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("mu" if k == 1 else f"mu^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])


def general_binomial_series(alpha: int, beta: int, order: int) -> list[MuCoefficient]:
    """Coefficients of ``h^n`` in ``(1 + h)^(alpha*mu + beta)`` for ``n <= order``."""
    out = []
    poly = MuCoefficient([1])
    for n in range(order + 1):
        out.append(poly)
        poly = poly * MuCoefficient([Fraction(beta - n, n + 1), Fraction(alpha, n + 1)])
    return out


# ---------------------------------------------------------------------------
# polynomials in the formal monomial q^mu


class MuPoly:
    """Finite sum ``sum_m c_m(u) q^(m mu)`` with Laurent polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, LaurentPoly] | None = None):
        self._terms = {int(m): c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def monomial(cls, m: int, coeff: LaurentPoly | int = 1) -> "MuPoly":
        return cls({m: LaurentPoly._coerce(coeff)})

    @property
    def terms(self) -> dict[int, LaurentPoly]:
        return dict(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "MuPoly") -> "MuPoly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return MuPoly(out)

    def __neg__(self):
        return MuPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = LaurentPoly._coerce(other)
            return MuPoly({m: c * other for m, c in self._terms.items()})
        out: dict[int, LaurentPoly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c = c1 * c2
                out[m1 + m2] = out[m1 + m2] + c if m1 + m2 in out else c
        return MuPoly(out)

    __rmul__ = __mul__

    def evaluate(self, mu: int) -> LaurentPoly:
        """Substitute ``q^mu`` by the literal power of ``q``."""
        out = LaurentPoly()
        for m, c in self._terms.items():
            out = out + c.shift(4 * m * mu)
        return out

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, MuPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{m}: {c}" for m, c in self.terms.items())
        return f"MuPoly({{{inner}}})"
