import itertools

import pytest

from twoclass.errors import ValidationError
from twoclass.group2 import (
    capitulation_count,
    cyclic_subgroup,
    derived_subgroup,
    make_group,
    transfer,
    transfer_map,
)

NONABELIAN = ["dihedral", "quaternion", "semidihedral", "modular"]


def involutions(G):
    return sum(1 for g in G.elements if g != G.identity and G.mul(g, g) == G.identity)


def test_dihedral_8_relations():
    G = make_group("dihedral", 3)
    x, y = G.x, G.y
    assert G.order == 8 and G.pow(x, 4) == G.identity and G.elem_order(x) == 4
    assert G.mul(G.mul(y, x), G.inv(y)) == G.inv(x)


def test_quaternion_8_relations():
    G = make_group("quaternion", 3)
    x, y = G.x, G.y
    assert G.order == 8 and G.pow(y, 2) == G.pow(x, 2)
    assert G.mul(G.mul(y, x), G.inv(y)) == G.inv(x)


def test_modular_32_relations():
    G = make_group("modular", 5)
    x, y = G.x, G.y
    assert G.order == 32
    assert G.mul(G.mul(G.inv(y), x), y) == G.pow(x, 9)


@pytest.mark.parametrize("family, n", [("semidihedral", 3), ("modular", 3), ("dihedral", 2), ("abelian", 0), ("cyclic", 3)])
def test_invalid_parameters(family, n):
    with pytest.raises(ValidationError):
        make_group(family, n)


def test_paper_flag_only_for_modular():
    with pytest.raises(ValidationError):
        make_group("dihedral", 4, paper_presentation=True)


@pytest.mark.parametrize("family", NONABELIAN)
@pytest.mark.parametrize("n", range(4, 8))
def test_associativity_and_inverses(family, n):
    G = make_group(family, n)
    els = G.elements
    assert len(set(els)) == 2**n
    for g in els:
        assert G.mul(g, G.inv(g)) == G.identity == G.mul(G.inv(g), g)
    step = max(1, len(els) // 24)
    sample = els[::step]
    for a, b, c in itertools.product(sample, repeat=3):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_associativity_exhaustive_order_16():
    for family in NONABELIAN:
        G = make_group(family, 4)
        for a, b, c in itertools.product(G.elements, repeat=3):
            assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@pytest.mark.parametrize("n", range(4, 9))
def test_involution_counts_identify_families(n):
    # D: 2^(n-1)+1, Q: 1, SD: 2^(n-2)+1, M: 3
    assert involutions(make_group("dihedral", n)) == 2 ** (n - 1) + 1
    assert involutions(make_group("quaternion", n)) == 1
    assert involutions(make_group("semidihedral", n)) == 2 ** (n - 2) + 1
    assert involutions(make_group("modular", n)) == 3
    assert involutions(make_group("modular", n, paper_presentation=True)) == 3


def test_dihedral_matches_permutation_model():
    # symmetries of the 8-gon: rotation r, reflection s
    m = 8
    r = tuple((i + 1) % m for i in range(m))
    s = tuple((-i) % m for i in range(m))

    def compose(f, g):  # apply g first, then f
        return tuple(f[g[i]] for i in range(m))

    def perm(a, b):
        out = tuple(range(m))
        for _ in range(a):
            out = compose(out, r)
        for _ in range(b):
            out = compose(out, s)
        return out

    G = make_group("dihedral", 4)
    images = {g: perm(*g) for g in G.elements}
    assert len(set(images.values())) == 16
    for g, h in itertools.product(G.elements, repeat=2):
        assert images[G.mul(g, h)] == compose(images[g], images[h])


def test_quaternion_8_matches_unit_quaternions():
    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    one, i, j = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)

    def image(a, b):
        out = one
        for _ in range(a):
            out = qmul(out, i)
        for _ in range(b):
            out = qmul(out, j)
        return out

    G = make_group("quaternion", 3)
    images = {g: image(*g) for g in G.elements}
    assert len(set(images.values())) == 8
    for g, h in itertools.product(G.elements, repeat=2):
        assert images[G.mul(g, h)] == qmul(images[g], images[h])


def test_derived_subgroup_examples():
    D8 = make_group("dihedral", 3)
    assert derived_subgroup(D8) == {(0, 0), (2, 0)}
    assert derived_subgroup(make_group("abelian", 1, 2)) == {(0, 0)}
    M32 = make_group("modular", 5)
    assert derived_subgroup(M32) == {(0, 0), (8, 0)}


@pytest.mark.parametrize("family", NONABELIAN)
@pytest.mark.parametrize("n", range(4, 8))
def test_derived_subgroup_brute_force(family, n):
    G = make_group(family, n)
    assert derived_subgroup(G) == derived_subgroup(G, brute_force=True)
    expected = 2 if family == "modular" else 2 ** (n - 2)
    assert len(derived_subgroup(G)) == expected


@pytest.mark.parametrize("family", NONABELIAN + ["modular-paper", "abelian"])
@pytest.mark.parametrize("n", range(4, 11))
def test_transfer_is_homomorphism_into_M(family, n):
    if family == "modular-paper":
        G = make_group("modular", n, paper_presentation=True)
    elif family == "abelian":
        G = make_group("abelian", n - 1, 1)
    else:
        G = make_group(family, n)
    M = cyclic_subgroup(G, G.x)
    V = transfer_map(G, M)
    res = transfer(G, M)
    Gp = derived_subgroup(G)
    reps = [min(c) for c in (set(G.mul(g, h) for h in Gp) for g in G.elements)]
    reps = sorted(set(reps))[:64]
    for g, h in itertools.product(reps, repeat=2):
        assert V(G.mul(g, h)) == G.mul(V(g), V(h))
    assert all(v in M for v in res.image_in_M)
    assert res.quotient_order % res.kernel_size == 0


@pytest.mark.parametrize("n", range(3, 11))
def test_transfer_closed_forms(n):
    # V(g) = g * y^-1 g y on M = <x>, V(g) = g^2 off M
    for family in ("dihedral", "quaternion") + (("semidihedral", "modular") if n >= 4 else ()):
        G = make_group(family, n)
        M = cyclic_subgroup(G, G.x)
        V = transfer_map(G, M)
        for g in G.elements:
            if g in M:
                expected = G.mul(g, G.mul(G.mul(G.inv(G.y), g), G.y))
            else:
                expected = G.mul(g, g)
            assert V(g) == expected


@pytest.mark.parametrize("n", range(3, 11))
def test_kernel_sizes(n):
    assert capitulation_count(make_group("dihedral", n)) == 4
    assert capitulation_count(make_group("quaternion", n)) == 2
    assert capitulation_count(make_group("abelian", n - 1, 1)) == 4
    if n >= 4:
        assert capitulation_count(make_group("semidihedral", n)) == 2
        assert capitulation_count(make_group("modular", n)) == 2
        assert capitulation_count(make_group("modular", n, paper_presentation=True)) == 2


@pytest.mark.parametrize("n", range(4, 11))
def test_modular_kernel_is_G_prime_and_yG_prime(n):
    for paper in (False, True):
        G = make_group("modular", n, paper_presentation=paper)
        Gp = derived_subgroup(G)
        yGp = frozenset(G.mul(G.y, h) for h in Gp)
        assert set(transfer(G).kernel_classes) == {Gp, yGp}


def test_paper_modular_presentation_collapses_to_standard():
    for n in range(4, 11):
        std = make_group("modular", n)
        paper = make_group("modular", n, paper_presentation=True)
        assert (paper.N, paper.Y, paper.s, paper.k) == (std.N, std.Y, std.s, std.k)


def test_transfer_requires_index_two_cyclic():
    G = make_group("dihedral", 4)
    with pytest.raises(ValidationError):
        transfer(G, cyclic_subgroup(G, G.pow(G.x, 2)))
    A = make_group("abelian", 2, 1)
    # <x^2, y> has index 2 but is not cyclic
    with pytest.raises(ValidationError):
        transfer(A, A.generated([A.pow(A.x, 2), A.y]))
