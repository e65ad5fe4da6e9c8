"""Hilbert symbols needed for the unit-norm index.

Symbols over F = Q(sqrt q, i) are reduced to residue computations mod p at a
degree-1 prime, the same way the unit-norm lemmas do it. A separate evaluator
for rational local Hilbert symbols backs the product-formula check.
"""

from dataclasses import dataclass

from twoclass.arith import (
    check_prime,
    legendre,
    p_over_2_quartic,
    quartic_symbol,
    sqrt_mod,
)
from twoclass.errors import ValidationError
from twoclass.quadfield import embed, embedding, eps_symbol, eta, sqrt_two_eps

INFINITY = "inf"


@dataclass(frozen=True)
class HilbertEvidence:
    p: int
    q: int
    symbol_i: int
    symbol_unit: int
    lemma_case: str  # q5_split, q5_inert, q3_split, q3_inert


def _check_p(p: int) -> None:
    check_prime(p, "p")
    if p % 8 != 1:
        raise ValidationError(f"p={p} must be 1 mod 8")


def _gaussian_residue(a: int, b: int, p: int, conjugate: bool = False) -> int:
    # a + b*i at the prime of Z[i] sending i to t; Z[i]/P = Z/p
    t = sqrt_mod(-1, p)
    if conjugate:
        t = p - t
    return legendre(a + b * t, p)


def symbol_one_plus_i(p: int, conjugate: bool = False) -> int:
    """((1 + i)/P) for the prime P of Z[i] above p = 1 mod 8."""
    _check_p(p)
    return _gaussian_residue(1, 1, p, conjugate)


def symbol_i_mod_p(p: int) -> int:
    _check_p(p)
    return _gaussian_residue(0, 1, p)


def unit_norm_symbol(p: int, q: int) -> HilbertEvidence:
    """(p, i) and (p, unit) at the prime of F above p.

    The unit is eps_q for q = 5 mod 8 and sqrt(i eps_q) for q = 3 mod 4; in
    the latter case the symbol factors as ((1+i)/P) * (sqrt(2 eps_q)/P).
    """
    _check_p(p)
    check_prime(q, "q")
    if p == q:
        raise ValidationError("p and q must differ")
    if q % 8 == 5:
        family = "q5"
    elif q % 4 == 3:
        family = "q3"
    else:
        raise ValidationError(f"q={q} must be 5 mod 8 or 3 mod 4")
    symbol_i = symbol_i_mod_p(p)
    if legendre(q, p) == -1:
        return HilbertEvidence(p, q, symbol_i, 1, family + "_inert")
    if family == "q5":
        unit = eps_symbol(p, q)
    else:
        unit = sqrt_i_eps_symbol(p, q)
    return HilbertEvidence(p, q, symbol_i, unit, family + "_split")


def sqrt_i_eps_symbol(p: int, q: int, conj_i: bool = False, conj_q: bool = False) -> int:
    """(sqrt(i eps_q) / P_F) at a degree-1 prime of F = Q(sqrt q, i) above p.

    Evaluates sqrt(i eps_q) = (1 + i) sqrt(2 eps_q) / 2 directly in Z/p with
    i -> t and sqrt q -> s; the result does not depend on the choice of roots.
    """
    _check_p(p)
    emb = embedding(q, p, conj_q)
    t = sqrt_mod(-1, p)
    if conj_i:
        t = p - t
    value = (1 + t) * embed(sqrt_two_eps(q), emb) * pow(2, -1, p)
    return legendre(value, p)


def lemma_unit_symbol(p: int, q: int) -> int:
    """Closed form of the unit symbol in the split case, via quartic symbols."""
    if q % 8 == 5:
        return quartic_symbol(p, q) * quartic_symbol(q, p)
    return quartic_symbol(2, p) * p_over_2_quartic(p) * eta(p, q)


def _split(n: int, ell: int) -> tuple[int, int]:
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v, n


def rational_hilbert(a: int, b: int, place) -> int:
    """Local Hilbert symbol (a, b) over Q at a prime or at INFINITY."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    ell = place
    alpha, u = _split(a, ell)
    beta, v = _split(b, ell)
    if ell == 2:
        eps_u, eps_v = (u - 1) // 2 % 2, (v - 1) // 2 % 2
        om_u, om_v = (u * u - 1) // 8 % 2, (v * v - 1) // 8 % 2
        e = eps_u * eps_v + alpha * om_v + beta * om_u
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((ell - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre(u, ell)
    if alpha % 2:
        sign *= legendre(v, ell)
    return sign


def _odd_prime_divisors(n: int) -> list[int]:
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    out, d = [], 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def relevant_places(a: int, b: int) -> list:
    """Places where (a, b) can be -1: infinity, 2, and odd primes dividing ab."""
    primes = sorted(set(_odd_prime_divisors(a)) | set(_odd_prime_divisors(b)))
    return [INFINITY, 2, *primes]


def product_formula_check(a: int, b: int) -> bool:
    prod = 1
    for place in relevant_places(a, b):
        prod *= rational_hilbert(a, b, place)
    return prod == 1
