"""Real quadratic field Q(sqrt q): continued fractions, the fundamental unit,
sqrt(2 eps_q) for q = 3 mod 4, and the unit residue symbols at a degree-1
prime above p."""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from twoclass.arith import check_prime, legendre, sqrt_mod
from twoclass.errors import SymbolError, ValidationError


@dataclass(frozen=True)
class CFData:
    q: int
    a0: int
    periodic_part: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.periodic_part)


@dataclass(frozen=True)
class QuadUnit:
    """The element (u + v sqrt q) / denom with its exact rational norm.

    ``norm`` is +-1 for units; sqrt(2 eps_q) reuses the type with norm +-2.
    """

    u: int
    v: int
    denom: int
    q: int
    norm: int

    def __post_init__(self):
        if self.denom not in (1, 2):
            raise ValueError("denom must be 1 or 2")
        if self.denom == 2 and (self.u - self.v) % 2:
            raise ValueError("u and v must have equal parity when denom is 2")
        num = self.u * self.u - self.q * self.v * self.v
        if num != self.norm * self.denom * self.denom:
            raise ValueError(f"stored norm {self.norm} does not match {num}/{self.denom ** 2}")

    def __mul__(self, other: "QuadUnit") -> "QuadUnit":
        if self.q != other.q:
            raise ValueError("elements of different fields")
        u = self.u * other.u + self.q * self.v * other.v
        v = self.u * other.v + self.v * other.u
        d = self.denom * other.denom
        while d > 1 and u % 2 == 0 and v % 2 == 0:
            u, v, d = u // 2, v // 2, d // 2
        if d == 4:
            raise ValueError("product left the ring of integers")
        return QuadUnit(u, v, d, self.q, self.norm * other.norm)

    def __str__(self):
        s = f"{self.u} + {self.v}*sqrt({self.q})"
        return s if self.denom == 1 else f"({s})/{self.denom}"


@dataclass(frozen=True)
class ModEmbedding:
    """Z[sqrt q] -> Z/p sending sqrt q to s; realizes a degree-1 prime above p."""

    p: int
    s: int

    def __post_init__(self):
        if not 0 < self.s < self.p:
            raise ValueError("root must lie in (0, p)")


def embedding(q: int, p: int, conjugate: bool = False) -> ModEmbedding:
    """Embedding with the canonical root min(s, p - s), or the other one."""
    s = sqrt_mod(q, p)
    return ModEmbedding(p, p - s if conjugate else s)


def _surd_expansion(P: int, Q: int, D: int):
    """Partial quotients of (P + sqrt D)/Q, yielding (a_j, P_j, Q_j, Q_{j+1})."""
    if (D - P * P) % Q:
        raise ValueError("Q must divide D - P^2")
    r = isqrt(D)
    while True:
        # floor((P + sqrt D)/Q) for either sign of Q
        a = (P + r) // Q if Q > 0 else (P + r + 1) // Q
        P_next = a * Q - P
        Q_next = (D - P_next * P_next) // Q
        yield a, P, Q, Q_next
        P, Q = P_next, Q_next


def cf_sqrt(q: int) -> CFData:
    r = isqrt(q)
    if r * r == q:
        raise ValidationError(f"{q} is a perfect square")
    periodic = []
    gen = _surd_expansion(0, 1, q)
    a0 = next(gen)[0]
    for a, _, Q, _ in gen:
        periodic.append(a)
        if Q == 1:
            # Q returns to 1 only at the quotient 2*a0 closing the period
            break
    return CFData(q, a0, tuple(periodic))


def _unit_start(q: int) -> tuple[int, int]:
    # eps = a + b*omega, conjugate a - b*theta; a/b is a convergent of theta.
    # q = 3 mod 4: omega = sqrt q, theta = sqrt q. q = 1 mod 4: theta = (sqrt q - 1)/2.
    return (0, 1) if q % 4 == 3 else (-1, 2)


def _unit_convergent_index(q: int) -> int:
    """Index j of the first convergent of theta that yields a unit.

    Uses only the small (P, Q) recurrence: N(eps) = +-Q_{j+1}/Q_0 up to the
    normalization, so a unit appears exactly when Q_{j+1} returns to Q_0.
    """
    P0, Q0 = _unit_start(q)
    for j, (_, _, _, q_next) in enumerate(_surd_expansion(P0, Q0, q)):
        if q_next == Q0:
            return j
    raise AssertionError("unreachable")


def _to_unit(q: int, a: int, b: int) -> QuadUnit:
    if q % 4 == 3:
        u, v, d = a, b, 1
    else:
        u, v, d = 2 * a + b, b, 2
        if u % 2 == 0 and v % 2 == 0:
            u, v, d = u // 2, v // 2, 1
    num = u * u - q * v * v
    return QuadUnit(u, v, d, q, num // (d * d))


@lru_cache(maxsize=None)
def fundamental_unit(q: int) -> QuadUnit:
    """Fundamental unit eps_q > 1 of the ring of integers of Q(sqrt q), q an odd prime."""
    check_prime(q, "q")
    if q == 2:
        raise ValidationError("q must be odd")
    P0, Q0 = _unit_start(q)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for a, _, _, _ in _surd_expansion(P0, Q0, q):
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        # each convergent h/k is tested exactly; the first unit is fundamental
        eps = _norm_of(q, h, k)
        if eps is not None:
            return eps
    raise AssertionError("unreachable")


def _norm_of(q: int, a: int, b: int):
    if q % 4 == 3:
        n = a * a - q * b * b
        return _to_unit(q, a, b) if n in (1, -1) else None
    n4 = (2 * a + b) ** 2 - q * b * b
    return _to_unit(q, a, b) if n4 in (4, -4) else None


@lru_cache(maxsize=None)
def sqrt_two_eps(q: int) -> QuadUnit:
    """alpha = a + b sqrt q with alpha^2 = 2 eps_q, for q = 3 mod 4.

    From a^2 + q b^2 = 2u and a^2 - q b^2 = N(alpha) = +-2 we get a^2 = u +- 1.
    """
    if q % 4 != 3:
        raise ValidationError(f"sqrt(2 eps_q) needs q = 3 mod 4, got {q}")
    eps = fundamental_unit(q)
    for sign in (1, -1):
        a2 = eps.u + sign
        a = isqrt(a2)
        if a > 0 and a * a == a2 and eps.v % a == 0:
            b = eps.v // a
            alpha = QuadUnit(a, b, 1, q, a * a - q * b * b)
            if alpha * alpha == QuadUnit(2 * eps.u, 2 * eps.v, 1, q, 4 * eps.norm):
                return alpha
    raise ArithmeticError(f"2*eps_{q} is not a square in Z[sqrt {q}]")


def embed(e: QuadUnit, emb: ModEmbedding) -> int:
    p, s = emb.p, emb.s
    if (s * s - e.q) % p:
        raise ValueError(f"{s}^2 is not {e.q} mod {p}")
    if e.denom % p == 0:
        raise ValueError("p divides the denominator")
    value = (e.u + e.v * s) * pow(e.denom, -1, p) % p
    if value == 0:
        raise SymbolError(f"element vanishes at the prime above {p}")
    return value


def unit_mod_p(q: int, emb: ModEmbedding) -> int:
    """Image of eps_q under emb, with convergents carried only mod p."""
    p, s = emb.p, emb.s
    P0, Q0 = _unit_start(q)
    stop = _unit_convergent_index(q)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for j, (a, _, _, _) in enumerate(_surd_expansion(P0, Q0, q)):
        h_prev, h = h, (a * h + h_prev) % p
        k_prev, k = k, (a * k + k_prev) % p
        if j == stop:
            break
    if q % 4 == 3:
        return (h + k * s) % p
    # a + b*(1 + sqrt q)/2
    return (h + k * (1 + s) * pow(2, -1, p)) % p


def _check_unit_pair(p: int, q: int) -> None:
    check_prime(p, "p")
    check_prime(q, "q")
    if p % 8 != 1:
        raise ValidationError(f"p={p} must be 1 mod 8")
    if legendre(q, p) != 1:
        raise SymbolError(f"({q}/{p}) = -1: no degree-1 prime above {p} in Q(sqrt {q})")


def eps_symbol(p: int, q: int, conjugate: bool = False) -> int:
    """(eps_q / p_Q(sqrt q)) for p = 1 mod 8, q = 5 mod 8, (q/p) = 1."""
    _check_unit_pair(p, q)
    if q % 8 != 5:
        raise ValidationError(f"q={q} must be 5 mod 8")
    return legendre(embed(fundamental_unit(q), embedding(q, p, conjugate)), p)


def eta(p: int, q: int, conjugate: bool = False) -> int:
    """(sqrt(2 eps_q) / p_Q(sqrt q)) for p = 1 mod 8, q = 3 mod 4, (q/p) = 1."""
    _check_unit_pair(p, q)
    if q % 4 != 3:
        raise ValidationError(f"q={q} must be 3 mod 4")
    return legendre(embed(sqrt_two_eps(q), embedding(q, p, conjugate)), p)
