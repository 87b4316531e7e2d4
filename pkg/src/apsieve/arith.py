"""Exact integer arithmetic kernel: factorization, modular square roots,
Jacobi symbols, and integers kept in prime-factored form with exponents
that are affine functions of the working prime exponent.

Everything here is deterministic; the rho method uses a seed derived from
its input so repeated runs factor identically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

FACTOR_LIMIT = 10**14

# Miller-Rabin with these bases is a deterministic primality test for all
# n < 3,317,044,064,679,887,385,961,981 (far beyond FACTOR_LIMIT).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6
_small_primes: list[int] | None = None


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def _trial_primes() -> list[int]:
    global _small_primes
    if _small_primes is None:
        _small_primes = primes_up_to(_TRIAL_LIMIT)
    return _small_primes


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n within the supported range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """One nontrivial factor of composite n (Brent's cycle finding).

    The constants of the iteration are derived from n, so the result is a
    pure function of n.
    """
    if n % 2 == 0:
        return 2
    seed = n ^ 0x9E3779B97F4A7C15
    while True:
        y = seed % (n - 3) + 2
        c = (seed >> 17) % (n - 1) + 1
        seed = (seed * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        m, g, r, q = 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def radical(self) -> int:
        r = 1
        for p, _ in self.factors:
            r *= p
        return r


def factor(n: int) -> Factorization:
    """Exact prime factorization for 1 <= n <= 10**14.

    Trial division by sieved primes, then deterministic Brent rho on any
    remaining cofactor.
    """
    if n < 1 or n > FACTOR_LIMIT:
        raise ValueError(f"factor: n={n} outside supported range [1, {FACTOR_LIMIT}]")
    found: dict[int, int] = {}
    rem = n
    for p in _trial_primes():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            found[p] = e
    stack = [rem] if rem > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(found.items())))


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = c * d**2 with c squarefree; returns (c, d)."""
    f = factor(n)
    c = d = 1
    for p, e in f.factors:
        if e % 2:
            c *= p
        d *= p ** (e // 2)
    return c, d


def is_squarefree(n: int) -> bool:
    return squarefree_decompose(n)[0] == n


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi: n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, q: int) -> int | None:
    """Square root of a modulo the odd prime q, or None for a non-residue.

    Returns the canonical root s with s <= q - 1 - s (Tonelli-Shanks).
    """
    if not is_prime(q):
        raise ValueError(f"sqrt_mod: modulus {q} is not prime")
    a %= q
    if a == 0:
        return 0
    if q == 2:
        return a
    if jacobi(a, q) != 1:
        return None
    if q % 4 == 3:
        s = pow(a, (q + 1) // 4, q)
        return min(s, q - s)
    # Tonelli-Shanks
    d = q - 1
    e = 0
    while d % 2 == 0:
        d //= 2
        e += 1
    z = 2
    while jacobi(z, q) != -1:
        z += 1
    g = pow(z, d, q)
    x = pow(a, (d + 1) // 2, q)
    b = pow(a, d, q)
    r = e
    while b != 1:
        m = 0
        t = b
        while t != 1:
            t = t * t % q
            m += 1
        gs = pow(g, 1 << (r - m - 1), q)
        x = x * gs % q
        g = gs * gs % q
        b = b * g % q
        r = m
    return min(x, q - x)


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer depending on a prime exponent p:

        value(p) = prod prime_i ** (alpha_i + beta_i * p)

    with primes strictly increasing and alpha + beta*p >= 0 for all p >= 5.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        last = 1
        for prime, alpha, beta in self.factors:
            if prime <= last:
                raise ValueError("primes must be strictly increasing and >= 2")
            if beta < 0 or alpha + 5 * beta < 0:
                raise ValueError("exponent must be non-negative for all p >= 5")
            last = prime

    def value(self, p: int) -> int:
        v = 1
        for prime, alpha, beta in self.factors:
            v *= prime ** (alpha + beta * p)
        return v

    def exponents_at(self, p: int) -> tuple[tuple[int, int], ...]:
        return tuple((prime, alpha + beta * p) for prime, alpha, beta in self.factors)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        merged: dict[int, tuple[int, int]] = {p: (a, b) for p, a, b in self.factors}
        for p, a, b in other.factors:
            a0, b0 = merged.get(p, (0, 0))
            merged[p] = (a0 + a, b0 + b)
        return FactoredInteger(
            tuple((p, a, b) for p, (a, b) in sorted(merged.items()) if (a, b) != (0, 0))
        )


def factored_one() -> FactoredInteger:
    return FactoredInteger(())


def factored(*terms: tuple[int, int, int]) -> FactoredInteger:
    """Build a FactoredInteger from (prime, alpha, beta) terms."""
    return FactoredInteger(tuple(sorted(terms)))


def eval_mod(f: FactoredInteger, p: int, q: int) -> int:
    """value(p) reduced modulo the prime q, via modular exponentiation."""
    v = 1
    for prime, alpha, beta in f.factors:
        e = alpha + beta * p
        if e < 0:
            raise ValueError("negative exponent at this p")
        if prime % q == 0:
            if e > 0:
                return 0
            continue
        v = v * pow(prime, e, q) % q
    return v


def nth_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None if n is not a k-th power."""
    if n < 0:
        raise ValueError("nth_root: n must be non-negative")
    if n in (0, 1) or k == 1:
        return n
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    # float guess can drift for very large n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@lru_cache(maxsize=None)
def primes_in(lo: int, hi: int) -> tuple[int, ...]:
    """Primes in [lo, hi], for iterating exponent ranges."""
    return tuple(p for p in primes_up_to(hi) if p >= lo)
