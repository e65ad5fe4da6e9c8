"""Modular arithmetic kernel: primality, residue symbols, square roots mod p."""

from math import isqrt

from twoclass.errors import SymbolError, ValidationError

# Deterministic for n < 3.3e24, which covers the whole 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

PRIME_BOUND = 1 << 32


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive bound."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def check_prime(p: int, name: str = "p") -> int:
    """Return p if it is a prime below PRIME_BOUND, else raise ValidationError."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError(f"{name}={p!r} is not an integer")
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if p >= PRIME_BOUND:
        raise ValidationError(f"{p} exceeds the supported bound 2^32")
    return p


def powmod(a: int, e: int, m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be positive")
    return pow(a, e, m)


def _as_sign(x: int, p: int) -> int:
    if x == 1:
        return 1
    if x == p - 1:
        return -1
    raise SymbolError(f"power {x} mod {p} is not +-1")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion; p odd prime, p does not divide a."""
    if p % 2 == 0:
        raise SymbolError("legendre symbol needs an odd prime")
    if a % p == 0:
        raise SymbolError(f"{p} divides {a}: symbol is 0")
    return _as_sign(pow(a, (p - 1) // 2, p), p)


def jacobi(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive modulus")
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


def quartic_symbol(a: int, p: int) -> int:
    """Rational biquadratic symbol (a/p)_4 = a^((p-1)/4) mod p, read as +-1.

    Only defined for p = 1 mod 4 and a a quadratic residue mod p; anything
    else raises SymbolError rather than returning a non-sign value.
    """
    if p % 4 != 1:
        raise SymbolError(f"(a/{p})_4 needs p = 1 mod 4")
    if a % p == 0:
        raise SymbolError(f"{p} divides {a}")
    return _as_sign(pow(a, (p - 1) // 4, p), p)


def p_over_2_quartic(p: int) -> int:
    """(p/2)_4 = (-1)^((p-1)/8) for p = 1 mod 8."""
    if p % 8 != 1:
        raise SymbolError(f"(p/2)_4 needs p = 1 mod 8, got {p}")
    return -1 if ((p - 1) // 8) % 2 else 1


def sqrt_mod(a: int, p: int) -> int:
    """Canonical square root min(s, p - s) of a quadratic residue a mod odd prime p."""
    a %= p
    if a == 0 or legendre(a, p) != 1:
        raise SymbolError(f"{a} is not a nonzero quadratic residue mod {p}")
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def decompose_x2_16y2(p: int) -> tuple[int, int]:
    """Find positive x, y with x^2 + 16 y^2 = p (p = 1 mod 8)."""
    if p % 8 != 1:
        raise ValidationError(f"{p} is not 1 mod 8")
    for y in range(1, isqrt(p // 16) + 1):
        rest = p - 16 * y * y
        x = isqrt(rest)
        if x * x == rest:
            return x, y
    raise ValidationError(f"no representation {p} = x^2 + 16y^2")
