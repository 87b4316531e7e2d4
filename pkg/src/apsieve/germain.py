"""Elimination sieve modulo auxiliary primes q = 2kp + 1.

For q = 2kp + 1 prime with q not dividing a, the set of 2p-th powers in
F_q is mu(p, q) = {0} union the k-th roots of unity.  The ternary
equation a*w2^p - b*w1^(2p) = c has a solution mod q only if some
zeta in mu(p, q) satisfies ((b*zeta + c)/a)^(2k) in {0, 1}.  When no
zeta works the equation has no integral solutions at all (a Sophie
Germain style criterion), which eliminates the instance outright.

The range sieve inverts the test: for fixed (p, q) the residues c that
survive are exactly {a*x - b*zeta : zeta in mu, x in {0} union the
2k-th roots of unity}, a set computed once and probed per r.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import eval_mod, factor, is_prime
from .cases import TernaryInstance, get_template, instantiate

DEFAULT_K_MAX = 600


def primitive_root(q: int) -> int:
    """Smallest primitive root modulo the prime q."""
    if q == 2:
        return 1
    phi = q - 1
    prime_divs = factor(phi).primes()
    g = 2
    while True:
        if all(pow(g, phi // ell, q) != 1 for ell in prime_divs):
            return g
        g += 1


def mu_set(p: int, q: int) -> frozenset[int]:
    """The 2p-th powers in F_q, i.e. {0} union the k-th roots of unity."""
    if not is_prime(q) or (q - 1) % (2 * p) != 0:
        raise ValueError(f"q={q} is not a prime congruent to 1 mod 2p")
    k = (q - 1) // (2 * p)
    g = primitive_root(q)
    e = pow(g, 2 * p, q)
    out = {0}
    z = 1
    for _ in range(k):
        out.add(z)
        z = z * e % q
    assert len(out) == k + 1
    return frozenset(out)


def _power_classes(p: int, q: int) -> tuple[list[int], list[int]]:
    """(mu(p,q) as list, {0} union 2k-th roots of unity as list)."""
    k = (q - 1) // (2 * p)
    g = primitive_root(q)
    e2p = pow(g, 2 * p, q)
    mu = [0]
    z = 1
    for _ in range(k):
        mu.append(z)
        z = z * e2p % q
    ep = pow(g, p, q)
    roots2k = [0]
    z = 1
    for _ in range(2 * k):
        roots2k.append(z)
        z = z * ep % q
    return mu, roots2k


def b_set_is_empty(a: int, b: int, c: int, p: int, q: int) -> bool:
    """True iff no zeta in mu(p,q) has ((b*zeta + c)/a)^(2k) in {0, 1}."""
    a %= q
    if a == 0:
        raise ValueError("q must not divide a")
    k = (q - 1) // (2 * p)
    ainv = pow(a, -1, q)
    for zeta in mu_set(p, q):
        t = (b * zeta + c) * ainv % q
        if t == 0 or pow(t, 2 * k, q) == 1:
            return False
    return True


def candidate_primes(p: int, k_max: int):
    """Primes q = 2kp + 1 for k = 1..k_max, ascending."""
    for k in range(1, k_max + 1):
        q = 2 * k * p + 1
        if is_prime(q):
            yield k, q


def find_eliminating_prime(inst: TernaryInstance, k_max: int = DEFAULT_K_MAX) -> int | None:
    """Smallest prime q = 2kp+1, k <= k_max, certifying no solutions."""
    for _, q in candidate_primes(inst.p, k_max):
        a = eval_mod(inst.a, inst.p, q)
        if a == 0:
            continue
        b = eval_mod(inst.b, inst.p, q)
        if b_set_is_empty(a, b, inst.c % q, inst.p, q):
            return q
    return None


@dataclass(frozen=True)
class SieveResult:
    case_id: int
    p: int
    r_lo: int
    r_hi: int
    k_max: int
    min_k: np.ndarray  # per r in [r_lo, r_hi]: smallest eliminating k, 0 = survivor

    @property
    def survivors(self) -> list[int]:
        return [int(r) for r in np.flatnonzero(self.min_k == 0) + self.r_lo]

    def witness_q(self, r: int) -> int | None:
        k = int(self.min_k[r - self.r_lo])
        return 2 * k * self.p + 1 if k else None

    def survivor_count_at(self, k_cap: int) -> int:
        """Survivor count had the search stopped at k <= k_cap."""
        return int(np.count_nonzero((self.min_k == 0) | (self.min_k > k_cap)))


def sieve_block(case_id: int, p: int, r_lo: int, r_hi: int, k_max: int = DEFAULT_K_MAX) -> SieveResult:
    """Run the sieve for one case and exponent over a contiguous r block."""
    t = get_template(case_id)
    instantiate(t, p, r_lo)  # validates case/exponent/range
    rs = np.arange(r_lo, r_hi + 1, dtype=np.int64)
    min_k = np.zeros(len(rs), dtype=np.int32)
    alive = np.arange(len(rs))
    for k, q in candidate_primes(p, k_max):
        a = eval_mod(t.a, p, q)
        if a == 0:
            continue
        b = eval_mod(t.b, p, q)
        mu, roots2k = _power_classes(p, q)
        zs = np.asarray(mu, dtype=np.int64)
        xs = np.asarray(roots2k, dtype=np.int64)
        allowed = np.zeros(q, dtype=bool)
        allowed[((a * xs)[:, None] - (b * zs)[None, :]) % q] = True
        cvals = t.c0 * (rs[alive] % q) ** 2 % q
        killed = ~allowed[cvals]
        min_k[alive[killed]] = k
        alive = alive[~killed]
        if alive.size == 0:
            break
    return SieveResult(case_id, p, r_lo, r_hi, k_max, min_k)


def sieve_range(case_id: int, p: int, r_range: tuple[int, int], k_max: int = DEFAULT_K_MAX):
    """Survivor list plus per-r elimination witnesses (r, q)."""
    res = sieve_block(case_id, p, r_range[0], r_range[1], k_max)
    records = []
    for i, k in enumerate(res.min_k):
        r = r_range[0] + i
        records.append((r, 2 * int(k) * p + 1 if k else None))
    return res.survivors, records
