"""Class groups of imaginary quadratic orders from reduced binary quadratic forms.

Brute force by design: the forms are enumerated, composed with Dirichlet's
algorithm, and the 2-Sylow structure is read off element orders. Used as an
oracle for 2-parts of class numbers such as h(-4p).
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd, isqrt

from twoclass.errors import ValidationError


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k = a // b
        a, b = b, a - k * b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True, order=True)
class BQF:
    a: int
    b: int
    c: int

    @property
    def D(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def reduce(self) -> "BQF":
        a, b, c = self.a, self.b, self.c
        if a <= 0:
            raise ValidationError("only positive definite forms are supported")
        while True:
            # bring b into (-a, a]
            if not -a < b <= a:
                k = (a - b) // (2 * a)
                c = a * k * k + b * k + c
                b = b + 2 * a * k
            if a > c:
                a, b, c = c, -b, a
                continue
            if a == c and b < 0:
                b = -b
            return BQF(a, b, c)

    def inverse(self) -> "BQF":
        return BQF(self.a, -self.b, self.c).reduce()

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValidationError(f"{D} is not a negative discriminant")


def principal_form(D: int) -> BQF:
    check_discriminant(D)
    b = D % 2
    return BQF(1, b, (b * b - D) // 4)


def reduced_forms(D: int) -> list[BQF]:
    """All primitive reduced forms of discriminant D, sorted."""
    check_discriminant(D)
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = BQF(a, b, c)
            if c >= a and f.is_reduced() and gcd(gcd(a, b), c) == 1:
                out.append(f)
    return sorted(out)


def compose(f: BQF, g: BQF) -> BQF:
    """Dirichlet composition followed by reduction."""
    if f.D != g.D:
        raise ValidationError(f"discriminant mismatch: {f.D} vs {g.D}")
    D = f.D
    a1, b1 = f.a, f.b
    a2, b2 = g.a, g.b
    s = (b1 + b2) // 2
    # a3 = a1*a2/e^2, with B = b2 (mod 2*a2/e), B = b1 (mod 2*a1/e), B^2 = D (mod 4*a3)
    e, x, y = _xgcd(a1, a2)
    e2, z, w = _xgcd(e, s)
    # e2 = z*(x*a1 + y*a2) + w*s
    a3 = a1 * a2 // (e2 * e2)
    B = (z * x * a1 * b2 + z * y * a2 * b1 + w * (b1 * b2 + D) // 2) // e2
    B %= 2 * a3
    c3 = (B * B - D) // (4 * a3)
    return BQF(a3, B, c3).reduce()


def power(f: BQF, n: int) -> BQF:
    result = principal_form(f.D)
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def order(f: BQF) -> int:
    one = principal_form(f.D)
    g, n = f, 1
    while g != one:
        g = compose(g, f)
        n += 1
    return n


@dataclass(frozen=True)
class ClassGroupData:
    D: int
    h: int
    two_part: int
    two_structure: tuple[int, ...]
    forms: tuple[BQF, ...]

    @cached_property
    def two_torsion(self) -> int:
        """Number of classes of order dividing 2."""
        one = principal_form(self.D)
        return sum(1 for f in self.forms if compose(f, f) == one)


def _invariant_factors(counts: list[int]) -> tuple[int, ...]:
    # counts[k] = log2 #{g : g^(2^k) = 1} = sum_i min(k, e_i)
    exps = []
    for k in range(1, len(counts)):
        n_ge_k = counts[k] - counts[k - 1]  # number of factors with e_i >= k
        exps.append(n_ge_k)
    factors = []
    for k in range(len(exps)):
        n_exact = exps[k] - (exps[k + 1] if k + 1 < len(exps) else 0)
        factors += [2 ** (k + 1)] * n_exact
    return tuple(sorted(factors))


def class_group(D: int) -> ClassGroupData:
    forms = reduced_forms(D)
    h = len(forms)
    two_part = h & -h
    orders = [order(f) for f in forms]
    log2_part = two_part.bit_length() - 1
    counts = []
    for k in range(log2_part + 1):
        n = sum(1 for o in orders if (1 << k) % o == 0)
        counts.append(n.bit_length() - 1)
    structure = _invariant_factors(counts)
    return ClassGroupData(D, h, two_part, structure, tuple(forms))

