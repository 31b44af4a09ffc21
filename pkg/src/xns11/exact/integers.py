"""Integer factorization by trial division and square tests over Q and Q(sqrt d)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

DEFAULT_BOUND = 10**6


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """Signed integer as ``sign * prod p**e`` with an optional unfactored cofactor.

    ``cofactor`` is 1 for a complete factorization; otherwise it is the part
    left after trial division up to the bound (all of its prime factors
    exceed the bound).
    """

    sign: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        n = self.sign * self.cofactor
        for p, e in self.factors.items():
            n *= p**e
        return n

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items())]
        if not self.complete:
            parts.append(f"[{self.cofactor}]")
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "factors": {str(p): e for p, e in sorted(self.factors.items())},
            "cofactor": self.cofactor,
        }


def factor_integer(n: int, bound: int = DEFAULT_BOUND) -> FactoredInteger:
    """Trial-divide ``n`` by the primes up to ``bound``.

    Division stops early once ``p*p`` exceeds what is left, which then is
    prime.  If the bound runs out first, the leftover stays in ``cofactor``
    and the result is marked incomplete.
    """
    if bound < 2:
        raise ValueError("factorization bound must be at least 2")
    if n == 0:
        return FactoredInteger(0)
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors: dict[int, int] = {}
    exhausted = True
    for p in primes_up_to(bound):
        if p * p > n:
            exhausted = False
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1 and (not exhausted or isqrt(n) <= bound):
        # every prime up to sqrt(n) was tried, so n is prime
        factors[n] = 1
        n = 1
    return FactoredInteger(sign, dict(sorted(factors.items())), n)


class IncompleteFactorization(ArithmeticError):
    pass


def require_complete(f: FactoredInteger) -> FactoredInteger:
    if not f.complete:
        raise IncompleteFactorization(f"unfactored cofactor {f.cofactor}")
    return f


def integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of an integer, or None."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_nth_root(-n, k)
        return None if r is None else -r
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k)) if n.bit_length() < 1000 else _int_root_newton(n, k)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    r = _int_root_newton(n, k)
    return r if r**k == n else None


def _int_root_newton(n: int, k: int) -> int:
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_nth_root(q: Fraction, k: int) -> Fraction | None:
    """The rational number r with r**k == q (the positive one for even k), or None."""
    q = Fraction(q)
    a = integer_nth_root(q.numerator, k)
    b = integer_nth_root(q.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    return q >= 0 and rational_nth_root(q, 2) is not None


def is_squarefree(d: int) -> bool:
    if d == 0:
        return False
    n = abs(d)
    f = factor_integer(n, max(2, min(DEFAULT_BOUND, isqrt(n) + 1)))
    return f.complete and all(e == 1 for e in f.factors.values())


def squarefree_kernel(n: int) -> int:
    """Squarefree part of n, keeping its sign: -12 -> -3, -16 -> -1."""
    f = require_complete(factor_integer(n))
    out = f.sign
    for p, e in f.factors.items():
        if e % 2:
            out *= p
    return out


def is_square_in_quadratic(q, d: int) -> bool:
    """Whether the nonzero rational ``q`` is a square in Q(sqrt d).

    ``(x + y sqrt d)^2`` is rational only if ``x = 0`` or ``y = 0``, so the
    squares of Q(sqrt d) lying in Q are the ``r^2`` and the ``d r^2``.
    """
    if not is_squarefree(d) or d == 1:
        raise ValueError(f"{d} is not a squarefree integer other than 1")
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    return is_rational_square(q) or is_rational_square(q / d)
