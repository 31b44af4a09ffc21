"""Univariate polynomials and rational functions over Q.

Coefficients are :class:`fractions.Fraction` values stored in ascending
order, so ``UniPoly([1, 0, 2])`` is ``1 + 2X^2``.  The zero polynomial has
an empty coefficient tuple.  Both classes are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class UniPoly:
    """Polynomial in one variable with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> UniPoly:
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> UniPoly:
        return cls([0] * n + [c])

    @classmethod
    def coerce(cls, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls([other])
        return NotImplemented

    # -- basic properties ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> UniPoly:
        return UniPoly._raw([-c for c in self.coeffs])

    def __add__(self, other) -> UniPoly:
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UniPoly()
            return UniPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        return UniPoly._raw(_mul_lists(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[UniPoly, UniPoly]:
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return UniPoly(), self
        inv_lc = 1 / other.coeffs[-1]
        quo = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * inv_lc
            quo[k] = q
            if q:
                for i in range(db + 1):
                    rem[k + i] -= q * bc[i]
        return UniPoly._raw(quo), UniPoly._raw(rem[:db])

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: UniPoly) -> bool:
        """True if ``self`` divides ``other``."""
        return (other % self).is_zero()

    # -- evaluation and calculus ---------------------------------------------

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        inv = 1 / self.coeffs[-1]
        return UniPoly._raw([c * inv for c in self.coeffs])

    def content_and_primitive(self) -> tuple[Fraction, list[int]]:
        """Split into a rational content and a primitive integer polynomial.

        The sign is chosen so the primitive part has positive leading coefficient.
        """
        if not self.coeffs:
            return Fraction(0), []
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [i // g for i in ints]

    def scale_var(self, k) -> UniPoly:
        """Return ``p(k*X)``."""
        k = _as_fraction(k)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= k
        return UniPoly._raw(out)


def _mul_lists(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


X = UniPoly([0, 1])


def poly(*coeffs) -> UniPoly:
    """Build a polynomial from coefficients given highest degree first."""
    return UniPoly(reversed(coeffs))


# -- gcd machinery -----------------------------------------------------------


def _int_content(a: list[int]) -> int:
    return reduce(gcd, a, 0)


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (ascending, trimmed)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for i in range(db + 1):
            r[shift + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
        if r:
            g = _int_content(r)
            if g > 1:
                r = [c // g for c in r]
    return r


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials; ``poly_gcd(0, 0)`` is zero.

    Runs a primitive remainder sequence over Z to keep coefficient growth
    in check, then normalizes to a monic result.
    """
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    _, a = p.content_and_primitive()
    _, b = q.content_and_primitive()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, r
        if len(a) == 1:
            return UniPoly([1])
    return UniPoly(a).monic()


def multiplicity(p: UniPoly, f: UniPoly) -> int:
    """Largest ``e`` such that ``p**e`` divides ``f``."""
    if p.is_constant():
        raise ValueError("multiplicity of a constant polynomial is undefined")
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    e = 0
    while True:
        q, r = divmod(f, p)
        if r:
            return e
        f = q
        e += 1


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm.

    Returns monic, squarefree, pairwise coprime parts ``(g_i, i)`` with
    ``f = lc(f) * prod g_i**i``; trivial parts are omitted.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    f = f.monic()
    if f.is_constant():
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a) if not a.is_zero() else fp
    d = c - b.derivative()
    i = 1
    while not b.is_constant():
        g = poly_gcd(b, d)
        if not g.is_constant():
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def cubic_discriminant(f: UniPoly) -> Fraction:
    """Discriminant of a polynomial of degree exactly 3."""
    if f.degree != 3:
        raise ValueError(f"expected a cubic, got degree {f.degree}")
    d, c, b, a = f.coeffs
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant via the Euclidean algorithm over Q."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    res = Fraction(1)
    a, b = p, q
    while b.degree > 0:
        da, db = a.degree, b.degree
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if da % 2 == 1 and db % 2 == 1:
            res = -res
        res *= b.lc() ** (da - r.degree)
        a, b = b, r
    # b is a nonzero constant
    return res * b.lc() ** a.degree


# -- rational functions --------------------------------------------------------


class RatFunc:
    """Reduced quotient ``num / den`` of polynomials, with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = _to_poly(num)
        den = UniPoly([1]) if den is None else _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = UniPoly(), UniPoly([1])
        elif not reduced and not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc()
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            return cls(other, reduced=True)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, reduced=True)

    def __add__(self, other) -> RatFunc:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if other.den == 1:
            return RatFunc(self.num + other.num * self.den, self.den, reduced=True)
        if self.den == 1:
            return RatFunc(self.num * other.den + other.num, other.den, reduced=True)
        g = poly_gcd(self.den, other.den)
        sd = self.den.exact_div(g)
        od = other.den.exact_div(g)
        return RatFunc(self.num * od + other.num * sd, sd * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den, reduced=True)
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc(0)
        # cross-cancel so the product is reduced without a big gcd
        g1 = poly_gcd(self.num, other.den) if not other.den.is_constant() else UniPoly([1])
        g2 = poly_gcd(other.num, self.den) if not self.den.is_constant() else UniPoly([1])
        num = self.num.exact_div(g1) * other.num.exact_div(g2)
        den = self.den.exact_div(g2) * other.den.exact_div(g1)
        return RatFunc(num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other) -> RatFunc:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if isinstance(d, (int, Fraction)) and d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self.num(x) / d

    def derivative(self) -> RatFunc:
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def compose(self, inner: RatFunc) -> RatFunc:
        """Substitute a rational function for the variable."""
        return _eval_poly_ratfunc(self.num, inner) / _eval_poly_ratfunc(self.den, inner)

    def degree(self) -> int:
        """Degree of the induced map P^1 -> P^1, i.e. max(deg num, deg den)."""
        return max(self.num.degree, self.den.degree)


def _eval_poly_ratfunc(p: UniPoly, r: RatFunc) -> RatFunc:
    # homogenize to avoid a gcd per Horner step
    n = p.degree
    if n < 0:
        return RatFunc(0)
    total = UniPoly()
    num_pow = UniPoly([1])
    powers_num = []
    for _ in range(n + 1):
        powers_num.append(num_pow)
        num_pow = num_pow * r.num
    den_pow = UniPoly([1])
    powers_den = [None] * (n + 1)
    for k in range(n, -1, -1):
        powers_den[k] = den_pow
        den_pow = den_pow * r.den
    for k, c in enumerate(p.coeffs):
        if c:
            total = total + powers_num[k] * powers_den[k] * c
    return RatFunc(total, r.den**n)


def _to_poly(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return UniPoly([p])
    raise TypeError(f"cannot convert {type(p).__name__} to UniPoly")
