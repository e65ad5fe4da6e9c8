"""Executable property suites, shared by ``twoclass verify`` and the tests."""

import random
from dataclasses import dataclass, field

from twoclass.arith import legendre, p_over_2_quartic, primes_up_to, quartic_symbol
from twoclass.classifier import galois_structure, rank_kstar, rank_via_ambiguous_formula, validate_pair
from twoclass.formsoracle import class_group
from twoclass.group2 import capitulation_count, make_group
from twoclass.hilbert import product_formula_check, sqrt_i_eps_symbol, symbol_i_mod_p, symbol_one_plus_i
from twoclass.quadfield import eps_symbol, eta


@dataclass
class SuiteReport:
    name: str
    bound: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checked, bound {self.bound}, {len(self.failures)} counterexamples)"


def primes_1_mod_8(bound: int) -> list[int]:
    return [p for p in primes_up_to(bound) if p % 8 == 1]


def valid_pairs(bound: int, regimes=("p1_q5", "p1_q3")):
    """(p, q) with p, q <= bound in the given regimes, ascending."""
    primes = primes_up_to(bound)
    for p in primes:
        if p % 8 not in (1, 5):
            continue
        for q in primes:
            if q != p and validate_pair(p, q).regime in regimes:
                yield p, q


def lemma5004(bound: int = 10**5) -> SuiteReport:
    rep = SuiteReport("lemma5004", bound)
    for p in primes_1_mod_8(bound):
        rep.checked += 1
        lhs = symbol_one_plus_i(p)
        rhs = quartic_symbol(2, p) * p_over_2_quartic(p)
        if lhs != rhs:
            rep.fail(f"p={p}: ((1+i)/P)={lhs} but (2/p)_4 (p/2)_4={rhs}")
        if symbol_one_plus_i(p, conjugate=True) != lhs:
            rep.fail(f"p={p}: ((1+i)/P) depends on the prime above p")
        if symbol_i_mod_p(p) != 1:
            rep.fail(f"p={p}: (i/P) = -1")
    return rep


def scholz(bound: int = 2000) -> SuiteReport:
    rep = SuiteReport("scholz", bound)
    for p, q in valid_pairs(bound, ("p1_q5",)):
        if legendre(p, q) != 1:
            continue
        rep.checked += 1
        lhs = eps_symbol(p, q)
        rhs = quartic_symbol(p, q) * quartic_symbol(q, p)
        if lhs != rhs:
            rep.fail(f"(p,q)=({p},{q}): (eps_q/P)={lhs} but (p/q)_4 (q/p)_4={rhs}")
    return rep


def dualpath(bound: int = 2000) -> SuiteReport:
    rep = SuiteReport("dualpath", bound)
    for p, q in valid_pairs(bound):
        rep.checked += 1
        r_table = rank_kstar(p, q).r
        amb = rank_via_ambiguous_formula(p, q)
        if r_table != amb.r:
            rep.fail(f"(p,q)=({p},{q}): table r={r_table}, t-e-1={amb.t}-{amb.e}-1={amb.r}")
        if (galois_structure(p, q).verdict == "nonmetacyclic") != (r_table == 3):
            rep.fail(f"(p,q)=({p},{q}): nonmetacyclic verdict disagrees with r={r_table}")
    return rep


def eta_welldef(bound: int = 2000) -> SuiteReport:
    rep = SuiteReport("eta_welldef", bound)
    for p, q in valid_pairs(bound):
        if legendre(q, p) != 1:
            continue
        rep.checked += 1
        if q % 8 == 5:
            a, b = eps_symbol(p, q), eps_symbol(p, q, conjugate=True)
            if a != b:
                rep.fail(f"(p,q)=({p},{q}): eps symbol {a} vs {b} under s -> p-s")
        else:
            a, b = eta(p, q), eta(p, q, conjugate=True)
            if a != b:
                rep.fail(f"(p,q)=({p},{q}): eta {a} vs {b} under s -> p-s")
            vals = {sqrt_i_eps_symbol(p, q, ci, cq) for ci in (False, True) for cq in (False, True)}
            if len(vals) != 1:
                rep.fail(f"(p,q)=({p},{q}): sqrt(i eps) symbol depends on the prime of F")
    return rep


def oracle_hminusp(bound: int = 10**4) -> SuiteReport:
    rep = SuiteReport("oracle_hminusp", bound)
    for p in primes_1_mod_8(bound):
        rep.checked += 1
        cg = class_group(-4 * p)
        if cg.two_part < 4:
            rep.fail(f"p={p}: h(-4p)={cg.h} has 2-part {cg.two_part} < 4")
    return rep


TRANSFER_EXPECTED = {
    "dihedral": 4,
    "quaternion": 2,
    "semidihedral": 2,
    "modular": 2,
    "modular (paper)": 2,
    "abelian (2, 2^m)": 4,
}


def _transfer_groups(n: int):
    yield "dihedral", make_group("dihedral", n)
    yield "quaternion", make_group("quaternion", n)
    # semidihedral and modular groups only exist from order 16 on
    if n >= 4:
        yield "semidihedral", make_group("semidihedral", n)
        yield "modular", make_group("modular", n)
        yield "modular (paper)", make_group("modular", n, paper_presentation=True)
    # type (2, 2^(n-1)), order 2^n, M = <x> cyclic of index 2
    yield "abelian (2, 2^m)", make_group("abelian", n - 1, 1)


def transfer_kernels(bound: int = 10) -> SuiteReport:
    rep = SuiteReport("transfer_kernels", bound)
    rows = {name: [] for name in TRANSFER_EXPECTED}
    for n in range(3, bound + 1):
        for name, G in _transfer_groups(n):
            rep.checked += 1
            size = capitulation_count(G)
            rows[name].append((n, size))
            if size != TRANSFER_EXPECTED[name]:
                rep.fail(f"{name} n={n}: kernel size {size}, expected {TRANSFER_EXPECTED[name]}")
    for name, vals in rows.items():
        sizes = sorted({s for _, s in vals})
        ns = [n for n, _ in vals]
        rep.lines.append(f"{name:18s} n={min(ns)}..{max(ns)} kernel size {'/'.join(map(str, sizes))}")
    return rep


def product_formula(bound: int = 10**4, seed: int = 20260101, magnitude: int = 10**6) -> SuiteReport:
    rep = SuiteReport("product_formula", bound)
    rng = random.Random(seed)
    for _ in range(bound):
        a = rng.choice((-1, 1)) * rng.randint(1, magnitude)
        b = rng.choice((-1, 1)) * rng.randint(1, magnitude)
        rep.checked += 1
        if not product_formula_check(a, b):
            rep.fail(f"(a,b)=({a},{b}): product of local symbols is -1")
    return rep


SUITES = {
    "lemma5004": (lemma5004, 10**5),
    "scholz": (scholz, 2000),
    "dualpath": (dualpath, 2000),
    "eta_welldef": (eta_welldef, 2000),
    "oracle_hminusp": (oracle_hminusp, 10**4),
    "transfer_kernels": (transfer_kernels, 10),
    "product_formula": (product_formula, 10**4),
}


def run_suite(name: str, bound: int | None = None) -> SuiteReport:
    func, default = SUITES[name]
    return func(default if bound is None else bound)
