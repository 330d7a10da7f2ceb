"""Arbitrary-precision rational scalars and small-integer factorization.

``Rat`` is the coefficient scalar used everywhere in this package.  It is
the standard library ``fractions.Fraction``, which already keeps the
canonical reduced form (gcd(|numerator|, denominator) = 1, denominator > 0)
that structural equality of field and algebra elements relies on.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def as_rat(value: int | str | Fraction) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions to a canonical rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(q: Fraction) -> str:
    """Render as "p" or "p/q" with positive denominator."""
    return str(q)


def factor_small_int(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, increasing primes.

    Returns [] for n = 1.  Meant for the small discriminants produced here;
    anything in comfortable trial-division range (say below 2**64) works.
    """
    if n < 1:
        raise ValueError("factor_small_int requires n >= 1")
    out: list[tuple[int, int]] = []
    for p in _trial_divisors():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def _trial_divisors():
    yield 2
    yield 3
    d = 5
    while True:
        yield d
        yield d + 2
        d += 6
