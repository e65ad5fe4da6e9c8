"""Decision tables for the rank r of the 2-class group of k* = Q(sqrt p, sqrt q, i)
and the structure of G = Gal(k_2^(2)/k), k = Q(sqrt(pq), i).

Two independent routes to r are provided: the symbol table (``rank_kstar``)
and the ambiguous class number formula r = t - e - 1
(``rank_via_ambiguous_formula``).
"""

from dataclasses import dataclass, field

from twoclass.arith import (
    check_prime,
    decompose_x2_16y2,
    legendre,
    p_over_2_quartic,
    quartic_symbol,
)
from twoclass.errors import ValidationError
from twoclass.hilbert import unit_norm_symbol
from twoclass.quadfield import eps_symbol, eta

REGIMES = ("p5_q3", "p1_q1", "p1_q5", "p1_q3", "unsupported")
SUPPORTED = ("p5_q3", "p1_q1", "p1_q5", "p1_q3")
VERDICTS = (
    "cyclic",
    "nonmetacyclic",
    "dihedral",
    "abelian_or_dihedral",
    "metacyclic_nonabelian_2_4",
    "metacyclic",
    "undetermined",
)

# rank of Cl_2(k) by congruence class, as restated from the literature
_R0 = {"p5_q3": 1, "p1_q1": 3, "p1_q5": 2, "p1_q3": 2}


@dataclass(frozen=True)
class PairCase:
    p: int
    q: int
    regime: str


@dataclass(frozen=True)
class RankResult:
    r: int
    branch: str
    evidence: tuple[tuple[str, int], ...] = field(default_factory=tuple)

    def symbols(self) -> dict[str, int]:
        return dict(self.evidence)


@dataclass(frozen=True)
class AmbiguousData:
    t: int
    e: int

    @property
    def r(self) -> int:
        return self.t - self.e - 1


@dataclass(frozen=True)
class StructureResult:
    verdict: str
    r0: int
    r: int


def validate_pair(p: int, q: int) -> PairCase:
    check_prime(p, "p")
    check_prime(q, "q")
    if p == q:
        raise ValidationError(f"p and q must differ (both {p})")
    if p % 8 == 5 and q % 4 == 3:
        regime = "p5_q3"
    elif p % 8 == 1 and q % 8 == 1:
        regime = "p1_q1"
    elif p % 8 == 1 and q % 8 == 5:
        regime = "p1_q5"
    elif p % 8 == 1 and q % 4 == 3:
        regime = "p1_q3"
    else:
        regime = "unsupported"
    return PairCase(p, q, regime)


def _supported(p: int, q: int) -> PairCase:
    case = validate_pair(p, q)
    if case.regime == "unsupported":
        raise ValidationError(
            f"({p}, {q}) is outside the supported congruence classes "
            "(p = 5 mod 8 with q = 3 mod 4, or p = 1 mod 8 with q = 1 mod 8, 5 mod 8 or 3 mod 4)"
        )
    return case


def rank_kstar(p: int, q: int) -> RankResult:
    case = _supported(p, q)
    if case.regime == "p5_q3":
        return RankResult(1, "p5_q3: Cl_2(k) cyclic")
    if case.regime == "p1_q1":
        # reported as the rank-3 evidence r0 = d(G) = 3, not a computed rank of k*
        return RankResult(3, "p1_q1: d(G) = 3")

    # (p/q) = (q/p) in both regimes since p = 1 mod 4
    lpq = legendre(p, q)
    ev = [("legendre_pq", lpq)]
    if lpq == -1:
        return RankResult(1, f"{case.regime}: (p/q) = -1", tuple(ev))

    if case.regime == "p1_q5":
        qpq, qqp = quartic_symbol(p, q), quartic_symbol(q, p)
        ev += [("quartic_pq", qpq), ("quartic_qp", qqp)]
        if qpq == qqp:
            return RankResult(3, "p1_q5: (p/q)_4 = (q/p)_4", tuple(ev))
        return RankResult(2, "p1_q5: (p/q)_4 = -(q/p)_4", tuple(ev))

    q2p, p2, et = quartic_symbol(2, p), p_over_2_quartic(p), eta(p, q)
    ev += [("quartic_2p", q2p), ("p_over_2", p2), ("eta", et)]
    if q2p == p2 * et:
        return RankResult(3, "p1_q3: (2/p)_4 = (p/2)_4 eta", tuple(ev))
    return RankResult(2, "p1_q3: (2/p)_4 = -(p/2)_4 eta", tuple(ev))


def rank_via_ambiguous_formula(p: int, q: int) -> AmbiguousData:
    """r = t - e - 1 for the quadratic extension k*/F, F = Q(sqrt q, i).

    t counts primes of F ramified in k* = F(sqrt p): only the primes above p
    ramify, two of them if p splits in Q(sqrt q) and one (of degree 2) if
    not, each again splitting in F/Q(sqrt q) because p = 1 mod 4. 2^e is the
    index of the unit norms, read off the Hilbert symbols (p, i) and
    (p, unit) at the primes above p.
    """
    case = _supported(p, q)
    if case.regime not in ("p1_q5", "p1_q3"):
        raise ValidationError(f"ambiguous class formula only covers p1_q5 and p1_q3, got {case.regime}")
    primes_above_p_in_q = 2 if legendre(q, p) == 1 else 1
    t = 2 * primes_above_p_in_q
    ev = unit_norm_symbol(p, q)
    # units of F are generated (mod torsion and squares) by i and one unit;
    # a unit with all local symbols +1 is a norm (Hasse)
    nonnorm = sum(1 for s in (ev.symbol_i, ev.symbol_unit) if s == -1)
    e = min(nonnorm, 1)
    return AmbiguousData(t, e)


def galois_structure(p: int, q: int) -> StructureResult:
    case = _supported(p, q)
    r0 = _R0[case.regime]
    rank = rank_kstar(p, q)
    r = rank.r
    if case.regime == "p5_q3":
        return StructureResult("cyclic", r0, r)
    if case.regime == "p1_q1":
        return StructureResult("nonmetacyclic", r0, r)
    if r == 3:
        return StructureResult("nonmetacyclic", r0, r)
    split = legendre(q, p) == 1
    if case.regime == "p1_q5":
        verdict = "metacyclic_nonabelian_2_4" if split else "dihedral"
    elif split:
        verdict = "metacyclic"
    elif q % 8 == 3:
        verdict = "abelian_or_dihedral"
    else:
        verdict = "undetermined"
    return StructureResult(verdict, r0, r)


@dataclass(frozen=True)
class UnramifiedQuadratic:
    label: str
    generator: str
    x: int
    y: int
    p: int
    q: int


def unramified_quadratics(p: int, q: int) -> list[UnramifiedQuadratic]:
    """k*, k(sqrt pi1), k(sqrt pi2) with pi1, pi2 = x +- 4yi and p = x^2 + 16y^2."""
    check_prime(p, "p")
    x, y = decompose_x2_16y2(p)
    return [
        UnramifiedQuadratic("k*", f"sqrt({p}), sqrt({q})", x, y, p, q),
        UnramifiedQuadratic("k1", f"sqrt({x} + {4 * y}i)", x, y, p, q),
        UnramifiedQuadratic("k2", f"sqrt({x} - {4 * y}i)", x, y, p, q),
    ]
