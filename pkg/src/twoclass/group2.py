"""Finite 2-groups with a cyclic subgroup of index 2, and the transfer to it.

Every group here is metacyclic, <x, y | x^N = 1, y^Y = x^s, y^-1 x y = x^k>,
so elements are stored in normal form x^a y^b (0 <= a < N, 0 <= b < Y).
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from twoclass.errors import ValidationError

FAMILIES = ("abelian", "dihedral", "quaternion", "semidihedral", "modular")

Element = tuple[int, int]


@dataclass(frozen=True)
class GroupModel:
    family: str
    n: int
    m: int
    N: int  # order of x
    Y: int  # order of y modulo <x>
    s: int  # y^Y = x^s
    k: int  # y^-1 x y = x^k
    variant: str = "standard"
    _r: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if pow(self.k, self.Y, self.N) != 1 % self.N or (self.s * (self.k - 1)) % self.N:
            raise ValidationError(f"inconsistent relators for {self.family}")
        # y x y^-1 = x^r with r = k^-1
        object.__setattr__(self, "_r", pow(self.k, -1, self.N) if self.N > 1 else 0)

    @property
    def order(self) -> int:
        return self.N * self.Y

    @cached_property
    def elements(self) -> list[Element]:
        return [(a, b) for b in range(self.Y) for a in range(self.N)]

    @property
    def identity(self) -> Element:
        return (0, 0)

    @property
    def x(self) -> Element:
        return (1 % self.N, 0)

    @property
    def y(self) -> Element:
        return (0, 1 % self.Y)

    def mul(self, g: Element, h: Element) -> Element:
        a, b = g
        c, d = h
        # y^b x^c = x^(c r^b) y^b
        a2 = a + c * pow(self._r, b, self.N)
        e = b + d
        if e >= self.Y:
            e -= self.Y
            a2 += self.s
        return (a2 % self.N, e)

    def inv(self, g: Element) -> Element:
        # (x^a y^b)^-1 = y^-b x^-a
        a, b = g
        if b == 0:
            return ((-a) % self.N, 0)
        yinv = ((-self.s) % self.N, self.Y - b)  # y^-b = x^-s y^(Y-b)
        return self.mul(yinv, ((-a) % self.N, 0))

    def pow(self, g: Element, e: int) -> Element:
        result, base = self.identity, g
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elem_order(self, g: Element) -> int:
        n, h = 1, g
        while h != self.identity:
            h = self.mul(h, g)
            n += 1
        return n

    def generated(self, gens) -> frozenset:
        """Subgroup generated by gens (closure under multiplication)."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            g = frontier.pop()
            for s in gens:
                h = self.mul(g, s)
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        return frozenset(seen)

    def word(self, g: Element) -> str:
        a, b = g
        parts = [f"x^{a}" if a > 1 else ("x" if a == 1 else ""), f"y^{b}" if b > 1 else ("y" if b == 1 else "")]
        return "".join(parts) or "1"


def _collapse_order(s: int, k: int, Y: int) -> int:
    # The relators force x^(s(k-1)) = 1 (y fixes y^Y = x^s) and x^(k^Y - 1) = 1
    # (y^Y is a power of x, so it centralizes x). The largest consistent order of x
    # is their gcd.
    return gcd(s * (k - 1), k**Y - 1)


def make_group(family: str, n: int, m: int = 1, paper_presentation: bool = False) -> GroupModel:
    """Build a group of the given family.

    abelian: Z/2^n x Z/2^m (x of order 2^n, y of order 2^m; m = 0 is cyclic).
    The nonabelian families have order 2^n with x of order 2^(n-1):
      dihedral     y^2 = 1,          y^-1 x y = x^-1            (n >= 3)
      quaternion   y^2 = x^(2^(n-2)), y^-1 x y = x^-1           (n >= 3)
      semidihedral y^2 = 1,          y^-1 x y = x^(2^(n-2) - 1) (n >= 4)
      modular      y^2 = 1,          y^-1 x y = x^(1 + 2^(n-2)) (n >= 4)
    With paper_presentation the modular group is built from
    y^2 = x^(2^(n-1)), y^-1 x y = x^(1 + 2^(n-2)) and the order of x is
    derived from the relators instead of being imposed.
    """
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}")
    if paper_presentation and family != "modular":
        raise ValidationError("paper presentation only applies to the modular family")
    if family == "abelian":
        if n < 1 or m < 0:
            raise ValidationError("abelian needs n >= 1, m >= 0")
        return GroupModel(family, n, m, 2**n, 2**m, 0, 1)
    min_n = 3 if family in ("dihedral", "quaternion") else 4
    if n < min_n:
        raise ValidationError(f"{family} needs n >= {min_n}, got {n}")
    N = 2 ** (n - 1)
    if family == "dihedral":
        return GroupModel(family, n, 0, N, 2, 0, N - 1)
    if family == "quaternion":
        return GroupModel(family, n, 0, N, 2, N // 2, N - 1)
    if family == "semidihedral":
        return GroupModel(family, n, 0, N, 2, 0, N // 2 - 1)
    k = 1 + N // 2
    if not paper_presentation:
        return GroupModel(family, n, 0, N, 2, 0, k)
    s = 2 ** (n - 1)
    N_paper = _collapse_order(s, k, 2)
    return GroupModel(family, n, 0, N_paper, 2, s % N_paper, k % N_paper, variant="paper")


def commutator(G: GroupModel, g: Element, h: Element) -> Element:
    return G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h))


def derived_subgroup(G: GroupModel, brute_force: bool = False) -> frozenset:
    """G' as the normal closure of [x, y], or from all commutators if brute_force."""
    if brute_force:
        comms = {commutator(G, g, h) for g in G.elements for h in G.elements}
        return G.generated(comms)
    c = commutator(G, G.x, G.y)
    conj = {G.mul(G.mul(G.inv(g), c), g) for g in (G.identity, G.x, G.y)}
    H = G.generated(conj)
    while True:
        bigger = G.generated(H | {G.mul(G.mul(G.inv(g), h), g) for h in H for g in (G.x, G.y)})
        if bigger == H:
            return H
        H = bigger


def cyclic_subgroup(G: GroupModel, g: Element) -> frozenset:
    return G.generated([g])


def _cosets(G: GroupModel, H: frozenset) -> list[frozenset]:
    seen, out = set(), []
    for g in G.elements:
        if g in seen:
            continue
        coset = frozenset(G.mul(g, h) for h in H)
        seen |= coset
        out.append(coset)
    return out


@dataclass(frozen=True)
class TransferResult:
    kernel_classes: tuple[frozenset, ...]
    image_in_M: tuple[Element, ...]
    quotient_order: int

    @property
    def kernel_size(self) -> int:
        return len(self.kernel_classes)


def transfer_map(G: GroupModel, M: frozenset):
    """Transfer V: G -> M for an abelian subgroup M of index 2.

    With left transversal {1, t}: g*tau = tau' * h_tau, V(g) = product of h_tau.
    """
    if 2 * len(M) != G.order:
        raise ValidationError("M must have index 2")
    if any(G.mul(a, b) not in M for a in M for b in M) or G.identity not in M:
        raise ValidationError("M is not a subgroup")
    if any(G.mul(a, b) != G.mul(b, a) for a in M for b in M):
        raise ValidationError("M must be abelian")
    t = next(g for g in G.elements if g not in M)
    t_inv = G.inv(t)
    transversal = (G.identity, t)

    def V(g: Element) -> Element:
        out = G.identity
        for tau in transversal:
            gt = G.mul(g, tau)
            rep = G.identity if gt in M else t
            rep_inv = G.identity if rep == G.identity else t_inv
            h = G.mul(rep_inv, gt)
            out = G.mul(out, h)
        return out

    return V


def transfer(G: GroupModel, M: frozenset | None = None) -> TransferResult:
    """Transfer from G/G' to M (default M = <x>), with its kernel."""
    if M is None:
        M = cyclic_subgroup(G, G.x)
    if not any(G.elem_order(g) == len(M) for g in M):
        raise ValidationError("M must be cyclic")
    V = transfer_map(G, M)
    Gp = derived_subgroup(G)
    cosets = _cosets(G, Gp)
    kernel, image = [], set()
    for coset in cosets:
        values = {V(g) for g in coset}
        if len(values) != 1:
            raise AssertionError("transfer is not constant on a coset of G'")
        v = values.pop()
        image.add(v)
        if v == G.identity:
            kernel.append(coset)
    return TransferResult(tuple(kernel), tuple(sorted(image)), len(cosets))


def capitulation_count(G: GroupModel, M: frozenset | None = None) -> int:
    return transfer(G, M).kernel_size
