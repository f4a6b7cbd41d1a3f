"""Exact integer number theory for inputs up to 64 bits.

Deterministic primality, factorization (trial division + Brent's rho),
totient, multiplicative order, primitive root enumeration, Lucas-Lehmer
testing and Mersenne-factor hunting.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

# Witness set deterministic for all n < 3.3 * 10^24, covers 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Trial-division ceiling before switching to Brent's rho.  10^4 keeps the
# worst case (large prime cofactor) under a millisecond; rho covers the rest.
_TRIAL_LIMIT = 10 ** 4


@dataclass(frozen=True)
class FactorizationInfo:
    """Prime factorization n = p1^e1 * ... * pr^er with tau(n)."""

    n: int
    factors: tuple[tuple[int, int], ...]
    divisor_count: int

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 0 <= n < 2^64."""
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
    for a in _MR_WITNESSES:
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


def _brent_rho(n: int) -> int:
    """One nontrivial factor of composite n (n odd, not a prime power of 2)."""
    if n % 2 == 0:
        return 2
    y0 = 2
    c = 1
    while True:
        y, r, q = y0, 1, 1
        g, x, ys = 1, y0, y0
        m = 128
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # cycle collapsed; retry with a different polynomial


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> FactorizationInfo:
    """Factor n >= 2 by trial division up to 10^6, then Brent's rho."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    acc: dict[int, int] = {}
    m = n
    while m % 2 == 0:
        m //= 2
        acc[2] = acc.get(2, 0) + 1
    d = 3
    while d <= _TRIAL_LIMIT and d * d <= m:
        while m % d == 0:
            m //= d
            acc[d] = acc.get(d, 0) + 1
        d += 2
    if m > 1:
        if d * d > m:
            acc[m] = acc.get(m, 0) + 1
        else:
            _factor_into(m, acc)
    factors = tuple(sorted(acc.items()))
    tau = 1
    for _, e in factors:
        tau *= e + 1
    return FactorizationInfo(n=n, factors=factors, divisor_count=tau)


def euler_phi(n: int) -> int:
    """Euler's totient, computed from the factorization of n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    if n == 1:
        return 1
    phi = 1
    for p, e in factorize(n).factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(a: int, m: int) -> int:
    """Smallest k >= 1 with a^k = 1 (mod m); requires gcd(a, m) = 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1, order undefined")
    order = euler_phi(m)
    if order == 1:
        return 1
    for p, _ in factorize(order).factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def _find_generator(p: int, phi_factors: tuple[int, ...]) -> int:
    exps = [(p - 1) // q for q in phi_factors]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exps):
            return g
    raise RuntimeError(f"no primitive root found mod {p}")  # unreachable for prime p


@lru_cache(maxsize=128)
def primitive_roots(p: int) -> tuple[int, ...]:
    """All primitive roots modulo an odd prime p, in increasing order."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    pm1_primes = factorize(p - 1).primes()
    g = _find_generator(p, pm1_primes)
    roots = []
    acc = 1
    pm1 = p - 1
    for k in range(1, pm1):
        acc = acc * g % p
        if gcd(k, pm1) == 1:
            roots.append(acc)
    roots.sort()
    return tuple(roots)


def is_mersenne_prime(T: int) -> bool:
    """Lucas-Lehmer test: is 2^T - 1 prime?  T itself must be prime."""
    if not is_prime(T):
        raise ValueError(f"Mersenne exponent must be prime, got {T}")
    if T == 2:
        return True
    n = (1 << T) - 1
    s = 4
    for _ in range(T - 2):
        s = (s * s - 2) % n
    return s == 0


def smallest_mersenne_factor(T: int, k_max: int) -> int | None:
    """Hunt the smallest prime factor of 2^T - 1 for prime T.

    Candidates are 2kT + 1 with q = +-1 (mod 8), k = 1..k_max; the first
    divisor found is automatically the smallest prime factor.  Returns None
    if nothing divides within the budget.
    """
    if not is_prime(T):
        raise ValueError(f"Mersenne exponent must be prime, got {T}")
    step = 2 * T
    q = 1
    for _ in range(k_max):
        q += step
        if q % 8 in (1, 7) and pow(2, T, q) == 1:
            return q
    return None


def verify_mersenne_factor(T: int, q: int) -> bool:
    """True iff q divides 2^T - 1, i.e. 2^T = 1 (mod q)."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    return pow(2, T, q) == 1
