"""Exact integer and rational arithmetic kernels.

Everything downstream (height boxes, cuspidal-cubic lattices, curve counts)
reduces to a handful of exact primitives collected here:

    factorize(n)              sign and prime exponents of a nonzero integer
    ord_p(q, p)               exponent of p in a nonzero rational
    moebius(n)                Moebius function
    is_kfree(n, k)            no prime p has p^k | n
    iroot(n, k)               floor(n^(1/k)) for integers, exact
    floor_rational_root(q, k) floor(q^(1/k)) for rationals, exact
    count_kfree(M, k)         number of k-free integers in [1, M], exact
    zeta_value(s)             zeta(s) for s in {2, 4, 6, 10}, 30+ digits

All results are exact (the zeta values are correctly rounded to the working
precision).  Counting formulas in the rest of the package are floors of
algebraic expressions, so "close enough" roots are never acceptable: every
root routine here certifies m^k <= x < (m+1)^k before returning m.

Rational numbers are ``fractions.Fraction`` values throughout: the stdlib
type already guarantees lowest terms and a positive denominator, which is
exactly the invariant the rest of the package relies on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

Rational = Fraction

# Trial division handles all prime factors below this bound; Pollard rho
# takes over for anything larger.
_TRIAL_BOUND = 10_000

# Miller-Rabin with these witnesses is deterministic below this bound
# (first thirteen primes; the classical verified threshold).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_RANDOM_ROUNDS = 40


@lru_cache(maxsize=None)
def _small_primes(limit: int = _TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(limit + 1) if sieve[i])


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below ~3.3e24 via the fixed witness set; above that,
    40 pseudo-random rounds (seeded from n, so the answer is stable).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_DETERMINISTIC_BOUND:
        witnesses = _MR_WITNESSES
    else:
        rng = random.Random(n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS))
    for a in witnesses:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1  # cycle collapsed; retry with the next polynomial


@dataclass(frozen=True)
class Factorization:
    """Sign and prime exponents: value = sign * prod(p**e).

    ``factors`` maps primes (strictly increasing key order) to nonzero
    exponents.  Exponents are negative for primes in a denominator, so the
    same type carries factored rationals.
    """

    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    def value(self) -> int | Fraction:
        v = Fraction(self.sign)
        for p, e in self.factors.items():
            v *= Fraction(p) ** e
        return int(v) if v.denominator == 1 else v


def factorize(n: int) -> Factorization:
    """Prime factorization of a nonzero integer.

    Trial division by small primes, then Miller-Rabin plus Pollard rho on
    whatever survives, so every reported prime carries a primality
    certificate.
    """
    if n == 0:
        raise ValueError("0 has no prime factorization")
    sign = 1 if n > 0 else -1
    n = abs(n)
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return Factorization(sign, dict(sorted(out.items())))


def factorize_rational(q: Fraction) -> Factorization:
    """Factorization of a nonzero rational; denominator primes get
    negative exponents."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no prime factorization")
    num = factorize(q.numerator)
    out = dict(num.factors)
    for p, e in factorize(q.denominator).factors.items():
        out[p] = out.get(p, 0) - e
    out = {p: e for p, e in sorted(out.items()) if e != 0}
    return Factorization(num.sign, out)


def ord_p(q: int | Fraction, p: int) -> int:
    """Exponent of the prime p in the nonzero rational q (negative when p
    divides the denominator)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("ord_p is undefined at 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    num = abs(q.numerator)
    while num % p == 0:
        num //= p
        e += 1
    den = q.denominator
    while den % p == 0:
        den //= p
        e -= 1
    return e


def moebius(n: int) -> int:
    """Moebius function: 0 unless n is square-free, else (-1)^(#primes)."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    if n == 1:
        return 1
    f = factorize(n)
    if any(e > 1 for e in f.factors.values()):
        return 0
    return -1 if len(f.factors) % 2 else 1


@lru_cache(maxsize=8)
def _moebius_prefix(limit: int) -> tuple[int, ...]:
    # Linear sieve; cached per limit so repeated k-free counts are cheap.
    mu = [1] * (limit + 1)
    composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            composite[i * p] = 1
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return tuple(mu)


def moebius_sieve(limit: int) -> tuple[int, ...]:
    """moebius(n) for n = 0..limit (index 0 is padding)."""
    return _moebius_prefix(limit)


def is_kfree(n: int, k: int) -> bool:
    """True iff no prime p has p^k dividing n."""
    if n == 0:
        raise ValueError("0 is divisible by every prime power")
    if k < 2:
        raise ValueError("k-free needs k >= 2")
    return all(e < k for e in factorize(n).factors.values())


def iroot(n: int, k: int) -> int:
    """The unique m >= 0 with m^k <= n < (m+1)^k, for n >= 0, k >= 1.

    Newton iteration on integers, seeded above the root from the bit
    length, then corrected against exact powers; never trusts floating
    point.
    """
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    if n == 0 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    if n < (1 << k):
        return 1
    x = 1 << -(-n.bit_length() // k)  # 2^ceil(bits/k) >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def floor_rational_root(q: int | Fraction, k: int) -> int:
    """floor(q^(1/k)) for a nonnegative rational q.

    For integer m: m^k <= q iff m^k <= floor(q), so the rational case
    reduces exactly to the integer one.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("floor_rational_root requires q >= 0")
    return iroot(q.numerator // q.denominator, k)


def count_kfree(limit: int, k: int) -> int:
    """Number of k-free integers in [1, limit], exactly.

    Inclusion-exclusion over k-th powers:

        Q_k(M) = sum_{d <= M^(1/k)} moebius(d) * floor(M / d^k)
    """
    if limit < 0:
        raise ValueError("count_kfree requires limit >= 0")
    if k < 2:
        raise ValueError("count_kfree requires k >= 2")
    if limit == 0:
        return 0
    r = iroot(limit, k)
    mu = _moebius_prefix(r)
    return sum(mu[d] * (limit // d**k) for d in range(1, r + 1) if mu[d])


# Closed forms for the only zeta values the counting formulas use.
_ZETA_CLOSED_FORMS = {2: 6, 4: 90, 6: 945, 10: 93555}


def zeta_value(s: int) -> mpmath.mpf:
    """zeta(s) for s in {2, 4, 6, 10} via the closed forms pi^s / const,
    to at least 30 significant digits."""
    if s not in _ZETA_CLOSED_FORMS:
        raise ValueError(f"zeta_value supports s in {sorted(_ZETA_CLOSED_FORMS)}, not {s}")
    with mpmath.workdps(40):
        return mpmath.pi**s / _ZETA_CLOSED_FORMS[s]
