"""Exit criteria: one test per criterion, each printing a PASS/FAIL line.

All tolerances are exact (+-1 symbols, integer ranks and kernel sizes).
"""

import pytest

from twoclass import verify
from twoclass.arith import primes_up_to
from twoclass.classifier import galois_structure, rank_kstar
from twoclass.errors import ValidationError
from twoclass.formsoracle import class_group
from twoclass.group2 import capitulation_count, make_group
from twoclass.quadfield import QuadUnit, fundamental_unit, sqrt_two_eps


def _check(report_criterion, number, title, report):
    status = "PASS" if report.ok else "FAIL"
    report_criterion(f"[{status}] criterion {number}: {title} ({report.checked} cases, bound {report.bound})")
    assert report.ok, report.failures[:5]


def test_criterion_1_lemma_1_plus_i(report_criterion):
    _check(report_criterion, 1, "((1+i)/P) = (2/p)_4 (p/2)_4 and (i/P) = 1, p = 1 mod 8 <= 1e5", verify.lemma5004(10**5))


def test_criterion_2_scholz(report_criterion):
    _check(report_criterion, 2, "(eps_q/P) = (p/q)_4 (q/p)_4, p,q <= 2000", verify.scholz(2000))


def test_criterion_3_dual_path(report_criterion):
    _check(report_criterion, 3, "symbol-table rank = t - e - 1, p,q <= 2000", verify.dualpath(2000))


PINNED = [
    (17, 5, 1, "dihedral"),
    (17, 13, 2, "metacyclic_nonabelian_2_4"),
    (89, 5, 3, "nonmetacyclic"),
    (73, 3, 3, "nonmetacyclic"),
    (13, 7, 1, "cyclic"),
]


def test_criterion_4_pinned_verdicts(report_criterion):
    got = [(p, q, rank_kstar(p, q).r, galois_structure(p, q).verdict) for p, q, _, _ in PINNED]
    ok = got == PINNED and galois_structure(17, 13).r0 == 2
    report_criterion(f"[{'PASS' if ok else 'FAIL'}] criterion 4: pinned verdicts {[(p, q, r, v) for p, q, r, v in got]}")
    assert got == PINNED
    assert galois_structure(17, 13).r0 == 2


def test_criterion_5_root_independence(report_criterion):
    _check(report_criterion, 5, "eta / eps symbol independent of s vs p - s, p,q <= 2000", verify.eta_welldef(2000))


def test_criterion_6_oracle_h_minus_4p(report_criterion):
    spots = (class_group(-68).h, class_group(-292).h)
    report = verify.oracle_hminusp(10**4)
    if spots != (4, 4):
        report.fail(f"h(-68), h(-292) = {spots}, expected (4, 4)")
    _check(report_criterion, 6, "2-part of h(-4p) >= 4 for p = 1 mod 8 <= 1e4; h(-68) = h(-292) = 4", report)


def test_criterion_7_transfer_kernels(report_criterion):
    report = verify.transfer_kernels(10)
    # Semidihedral and modular 2-groups start at order 16; at order 8 the
    # relators give the abelian group (2,4) and D4, so n=3 is not constructible.
    for family in ("semidihedral", "modular"):
        with pytest.raises(ValidationError):
            make_group(family, 3)
    _check(report_criterion, 7, "kernel sizes D 4, Q 2, SD 2, M 2 (both presentations), (2,2^m) 4; n = 3..10 (SD, M from n = 4)", report)
    for line in report.lines:
        report_criterion(f"    {line}")
    assert capitulation_count(make_group("modular", 10, paper_presentation=True)) == 2


def test_criterion_8_product_formula(report_criterion):
    _check(report_criterion, 8, "Hilbert product formula over Q, 1e4 random pairs", verify.product_formula(10**4))


PINNED_UNITS = {
    3: QuadUnit(2, 1, 1, 3, 1),
    5: QuadUnit(1, 1, 2, 5, -1),
    7: QuadUnit(8, 3, 1, 7, 1),
    11: QuadUnit(10, 3, 1, 11, 1),
    13: QuadUnit(3, 1, 2, 13, -1),
}


def test_criterion_9_units(report_criterion):
    failures = [q for q, unit in PINNED_UNITS.items() if fundamental_unit(q) != unit]
    checked = 0
    for q in primes_up_to(2000):
        if q % 4 != 3:
            continue
        checked += 1
        alpha, eps = sqrt_two_eps(q), fundamental_unit(q)
        square = alpha * alpha
        if (square.u, square.v, square.denom) != (2 * eps.u, 2 * eps.v, 1):
            failures.append(q)
    ok = not failures
    report_criterion(
        f"[{'PASS' if ok else 'FAIL'}] criterion 9: pinned units for q in 3,5,7,11,13; "
        f"sqrt(2 eps_q)^2 = 2 eps_q for {checked} primes q = 3 mod 4 <= 2000"
    )
    assert not failures
