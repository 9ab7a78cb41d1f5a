"""Cross-cutting structural properties beyond the acceptance criteria."""

from __future__ import annotations

from math import gcd

import pytest

from freerep.errors import DeadlineExceeded, NotAGroup
from freerep.groups import (
    Deadline,
    all_subgroups,
    build_group,
    count_nth_roots,
    is_isomorphic,
    normalizer,
    subgroup_generated,
    sylow_subgroup,
)
from freerep.constructors import (
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    sd,
    sl2,
)
from freerep.classify import is_sylow_cyclic
from freerep.normrel import find_norm_relation


def test_strong_frobenius_on_classes():
    # |{x : x^n in C}| is a multiple of gcd(n|C|, |G|) for conjugation-closed C
    for G in (dihedral(6), sd(7, 3, 2), sl2(3), generalized_quaternion(16)):
        for cls in G.conjugacy_classes():
            for n in (2, 3, 4, 6):
                cnt = count_nth_roots(G, cls, n)
                assert cnt % gcd(n * len(cls), G.order) == 0, (G.origin, cls, n)


def test_odd_pgroup_with_unique_prime_subgroup_is_cyclic():
    # checked over all odd-p subgroups of small corpus groups
    for G in (sd(7, 9, 2), cyclic(27), sd(35, 3, 11), dicyclic(9),
              direct_product(cyclic(3), cyclic(3))):
        for H in all_subgroups(G):
            size = len(H)
            p = next((q for q in (3, 5, 7) if size != 1
                      and size == q ** _valuation(size, q)), None)
            if p is None:
                continue
            HG = H.as_group()
            prime_subs = {frozenset(subgroup_generated(HG, [g]).elements)
                          for g in HG.elements() if HG.element_order(g) == p}
            if len(prime_subs) == 1:
                assert HG.is_cyclic(), f"{G.origin}: order-{size} subgroup"


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def test_largest_prime_sylow_normal_in_sylow_cyclic():
    for G in (sd(7, 3, 2), sd(7, 9, 2), dihedral(15), cyclic(30),
              sd(13, 4, 5), sd(35, 3, 11)):
        assert is_sylow_cyclic(G)
        q = max(p for p in range(2, G.order + 1)
                if G.order % p == 0 and all(p % d for d in range(2, p)))
        P = sylow_subgroup(G, q)
        assert P.is_normal(), f"{G.origin}: {q}-Sylow not normal"
        assert len(normalizer(G, P)) == G.order


def test_deadline_cancels_enumeration():
    token = Deadline(0)
    token.cancel()
    with pytest.raises(DeadlineExceeded):
        all_subgroups(dihedral(12), deadline=token)
    with pytest.raises(DeadlineExceeded):
        find_norm_relation(dihedral(12), deadline=token)


def test_sampled_associativity_catches_big_broken_table():
    # corrupt an intercalate of the C_600 table: stays Latin with identity,
    # breaks associativity; the sampled check must catch it
    n = 600
    r1, r2 = 1, 1 + n // 2
    c1, c2 = 2, 2 + n // 2

    def mult(i, j):
        if (i, j) in ((r1, c1), (r2, c2)):
            return (i + j + n // 2) % n
        if (i, j) in ((r1, c2), (r2, c1)):
            return (i + j + n // 2) % n
        return (i + j) % n

    with pytest.raises(NotAGroup):
        build_group(mult, n)


def test_isomorphism_reflexive_on_corpus():
    from corpus import structural_corpus

    for G in structural_corpus():
        if G.order > 100:
            continue
        phi = is_isomorphic(G, G)
        assert phi is not None and phi.is_bijective(), G.origin


def test_isomorphism_witness_fully_verified():
    phi = is_isomorphic(dicyclic(2), generalized_quaternion(8))
    assert phi is not None
    phi.verify()  # would raise if not a homomorphism
    assert phi.is_bijective()
    inv = phi.inverse_map()
    assert [inv(phi(g)) for g in range(8)] == list(range(8))


def test_quotient_projection_kernel():
    from freerep.groups import center, quotient_group

    G = generalized_quaternion(16)
    Z = center(G)
    Q, proj = quotient_group(G, Z)
    assert proj.kernel().elset == Z.elset
    assert Q.order == 8


def test_non_sylow_cyclic_cycloidal_has_unique_involution():
    from corpus import structural_corpus
    from freerep.classify import is_sylow_cycloidal

    hit = 0
    for G in structural_corpus():
        if not is_sylow_cycloidal(G) or is_sylow_cyclic(G):
            continue
        assert G.element_orders().count(2) == 1, G.origin
        hit += 1
    assert hit >= 8


def test_prime_field_multiplicative_group_cyclic():
    # F_p^x is cyclic: a primitive root exists for every prime p
    from freerep.sl2census import _primitive_root

    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if p == 2:
            continue
        g = _primitive_root(p)
        powers = {pow(g, k, p) for k in range(p - 1)}
        assert powers == set(range(1, p))


def test_sd_mu_equals_a_times_kernel():
    # mu(G) = A*K with K the kernel of the action (order-63 landmark shape)
    from freerep.classify import mcc_subgroup

    G = sd(7, 9, 2)
    mu = mcc_subgroup(G)
    assert len(mu) == 21  # |A| * |K| = 7 * 3
    # K is the unique subgroup of order 3 inside mu
    orders = [G.element_order(g) for g in mu.elements]
    assert sorted(set(orders)) == [1, 3, 7, 21]
