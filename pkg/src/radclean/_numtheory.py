"""Small integer number-theory helpers: primality, prime powers, modular
square roots.  Everything here is exact and deterministic."""

from __future__ import annotations

from math import isqrt

from .errors import NotASquare

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def as_prime_power(m: int) -> tuple[int, int] | None:
    """Return (p, k) with m == p**k and p prime, or None."""
    if m < 2:
        return None
    if is_prime(m):
        return m, 1
    # The prime base of a proper prime power is at most isqrt(m).
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            n = m
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 and is_prime(p) else None
        p += 1
    return None


def tonelli_shanks(a: int, p: int) -> int:
    """Square root of a modulo an odd prime p.  Raises NotASquare."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NotASquare(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    s = p - 1
    e = 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(z, s, p)
    r = e
    while b != 1:
        t = b
        m = 0
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        x = x * gs % p
        g = gs * gs % p
        b = b * g % p
        r = m
    return x


def sqrt_mod_prime_power(a: int, p: int, e: int) -> int:
    """Square root of a modulo p**e for odd p, exact and complete.

    Strips even powers of p off a, takes a Tonelli-Shanks root of the unit
    part mod p and Hensel-lifts it.  Raises NotASquare when no root exists.
    """
    if p == 2:
        raise ValueError("sqrt_mod_prime_power requires an odd prime")
    q = p**e
    a %= q
    if a == 0:
        return 0
    val = 0
    while a % p == 0:
        a //= p
        val += 1
    if val % 2 == 1:
        raise NotASquare(f"p-adic valuation {val} is odd")
    # a is now a unit; a root mod p**(e - val) suffices and stays exact
    # after multiplying back p**(val // 2).
    sub = e - val
    r = tonelli_shanks(a, p)
    mod = p
    while mod < p**sub:
        mod = min(mod * mod, p**sub)
        # Newton step: r <- r - (r^2 - a) / (2r); 2r is a unit.
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    root = p ** (val // 2) * r % q
    return min(root, (q - root) % q)
