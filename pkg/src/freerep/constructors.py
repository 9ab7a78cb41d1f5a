"""Constructors for the named groups: cyclic, dihedral, dicyclic/quaternion,
cyclic semidirect products, direct products, SL2(F_p), binary polyhedral."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BadParams, BadSize, CapExceeded
from .groups import ORDER_CAP, Group, commutator_subgroup, subgroup_generated


def cyclic(n: int, *, origin: str | None = None) -> Group:
    if n < 1:
        raise BadParams("cyclic order must be >= 1")
    if n > ORDER_CAP:
        raise CapExceeded(f"order {n} exceeds cap {ORDER_CAP}")
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return Group(table, labels=labels, origin=origin or f"C{n}")


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n: rho^n = 1, tau^2 = 1, tau rho tau = rho^-1."""
    if n < 2:
        raise BadParams("dihedral parameter must be >= 2")
    if 2 * n > ORDER_CAP:
        raise CapExceeded(f"order {2 * n} exceeds cap {ORDER_CAP}")
    # element i + n*j  <->  rho^i tau^j
    i = np.arange(2 * n, dtype=np.int32)
    r, t = i % n, i // n
    r1, t1 = r[:, None], t[:, None]
    r2, t2 = r[None, :], t[None, :]
    # rho^a tau^b * rho^c tau^d = rho^(a + c*(-1)^b) tau^(b+d)
    rr = (r1 + np.where(t1 == 1, -r2, r2)) % n
    tt = (t1 + t2) % 2
    table = (rr + n * tt).astype(np.int32)
    labels = [f"r^{a}t" if b else f"r^{a}" for b in (0, 1) for a in range(n)]
    labels[0] = "e"
    return Group(table, labels=labels, origin=f"D{n}")


def direct_product(G: Group, H: Group) -> Group:
    """Direct product with element (a, b) encoded as a*|H| + b."""
    order = G.order * H.order
    if order > ORDER_CAP:
        raise CapExceeded(f"order {order} exceeds cap {ORDER_CAP}")
    nh = H.order
    i = np.arange(order, dtype=np.int64)
    a, b = i // nh, i % nh
    table = (G.table[np.ix_(a, a)].astype(np.int64) * nh
             + H.table[np.ix_(b, b)]).astype(np.int32)
    labels = None
    if G.labels and H.labels:
        labels = [f"({G.label(int(x))},{H.label(int(y))})" for x, y in zip(a, b)]
    P = Group(table, labels=labels, origin=f"prod({G.origin},{H.origin})")
    P.factors = (G, H)
    return P


def dicyclic(m: int) -> Group:
    """Dicyclic group of order 4m on a cyclic part of order 2m:
    R^(2m) = 1, T^2 = R^m, T R T^-1 = R^-1."""
    if m < 1:
        raise BadParams("dicyclic parameter must be >= 1")
    n2 = 2 * m  # order of <R>
    order = 4 * m
    if order > ORDER_CAP:
        raise CapExceeded(f"order {order} exceeds cap {ORDER_CAP}")
    i = np.arange(order, dtype=np.int32)
    r, t = i % n2, i // n2
    r1, t1 = r[:, None], t[:, None]
    r2, t2 = r[None, :], t[None, :]
    # R^a T^b * R^c T^d:  T R^c = R^-c T, and T^2 = R^m
    rr = (r1 + np.where(t1 == 1, -r2, r2)) % n2
    tsum = t1 + t2
    rr = (rr + np.where(tsum == 2, m, 0)) % n2
    tt = tsum % 2
    table = (rr + n2 * tt).astype(np.int32)
    labels = [f"R^{a}T" if b else f"R^{a}" for b in (0, 1) for a in range(n2)]
    labels[0] = "e"
    labels[n2] = "T"
    if n2 > 1:
        labels[1] = "R"
    return Group(table, labels=labels, origin=f"dicyclic({order})")


def generalized_quaternion(size: int) -> Group:
    """Generalized quaternion group of order 2^k, k >= 3.

    Presentation: R^(2^(k-1)) = 1, T^2 = R^(2^(k-2)), T R T^-1 = R^-1;
    exactly one element of order 2.
    """
    if size < 8 or size & (size - 1):
        raise BadSize("generalized quaternion size must be a power of 2, >= 8")
    G = dicyclic(size // 4)
    G.origin = f"Q{size}"
    orders = G.element_orders()
    assert orders.count(2) == 1, "quaternion group must have a unique involution"
    return G


@dataclass(frozen=True)
class SemidirectParams:
    """C_m x| C_n with b a b^-1 = a^r (r of order dividing n mod m)."""

    m: int
    n: int
    r: int

    def validate(self) -> None:
        if self.m < 1 or self.n < 1:
            raise BadParams("factor orders must be positive")
        if gcd(self.m, self.n) != 1:
            raise BadParams(f"gcd(m,n) = {gcd(self.m, self.n)} != 1")
        if not 1 <= self.r < max(self.m, 2):
            raise BadParams(f"action exponent r={self.r} outside [1, m)")
        if gcd(self.r, self.m) != 1:
            raise BadParams(f"gcd(r,m) = {gcd(self.r, self.m)} != 1")
        if pow(self.r, self.n, self.m) % self.m != 1 % self.m:
            raise BadParams(f"r^n = {pow(self.r, self.n, self.m)} != 1 mod m")


def semidirect_cyclic(params: SemidirectParams) -> Group:
    """Cyclic semidirect product of order m*n on pairs (a^i, b^j)."""
    params.validate()
    m, n, r = params.m, params.n, params.r
    if m * n > ORDER_CAP:
        raise CapExceeded(f"order {m * n} exceeds cap {ORDER_CAP}")
    i = np.arange(m * n, dtype=np.int64)
    ai, bj = i // n, i % n
    rpow = np.array([pow(r, int(j), m) for j in range(n)], dtype=np.int64)
    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*r^j1) b^(j1+j2)
    aa = (ai[:, None] + ai[None, :] * rpow[bj][:, None]) % m
    bb = (bj[:, None] + bj[None, :]) % n
    table = (aa * n + bb).astype(np.int32)
    labels = [f"a^{int(x)}b^{int(y)}" for x, y in zip(ai, bj)]
    labels[0] = "e"
    G = Group(table, labels=labels, origin=f"sd({m},{n},{r})")
    # postcondition: commutator subgroup is <a^(r-1)>
    expected = subgroup_generated(G, [((r - 1) % m) * n])
    assert commutator_subgroup(G).elset == expected.elset, \
        "semidirect commutator subgroup mismatch"
    return G


def sd(m: int, n: int, r: int) -> Group:
    return semidirect_cyclic(SemidirectParams(m, n, r))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def sl2(p: int) -> Group:
    """SL2(F_p): determinant-1 2x2 matrices over F_p; order (p-1)p(p+1)."""
    if not _is_prime(p):
        raise BadParams(f"{p} is not prime")
    order = (p - 1) * p * (p + 1)
    if order > ORDER_CAP:
        raise CapExceeded(f"|SL2(F_{p})| = {order} exceeds cap {ORDER_CAP}")
    mats = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                if a:
                    mats.append((a, b, c, (1 + b * c) * pow(a, p - 2, p) % p))
                elif b:
                    mats.append((0, b, (p - pow(b, p - 2, p)) % p, c))
    assert len(mats) == order
    # move the identity to position 0
    eye = mats.index((1, 0, 0, 1))
    mats[0], mats[eye] = mats[eye], mats[0]
    arr = np.array(mats, dtype=np.int64)
    key_of = arr[:, 0] * p**3 + arr[:, 1] * p**2 + arr[:, 2] * p + arr[:, 3]
    index_of = np.full(p**4, -1, dtype=np.int32)
    index_of[key_of] = np.arange(order, dtype=np.int32)
    a, b, c, d = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    table = np.empty((order, order), dtype=np.int32)
    for i in range(order):
        ai, bi, ci, di = int(a[i]), int(b[i]), int(c[i]), int(d[i])
        pa = (ai * a + bi * c) % p
        pb = (ai * b + bi * d) % p
        pc = (ci * a + di * c) % p
        pd = (ci * b + di * d) % p
        table[i] = index_of[pa * p**3 + pb * p**2 + pc * p + pd]
    labels = [f"[[{w},{x}],[{y},{z}]]" for w, x, y, z in mats]
    G = Group(table, labels=labels, origin=f"SL2({p})")
    G.matrices = mats
    return G


def binary_polyhedral(kind: str, n: int | None = None) -> Group:
    """2T, 2O, 2I, or binary dihedral 2D_n.

    2T and 2I are delivered as SL2(F_3) and SL2(F_5); 2O is generated from
    exact unit quaternions over Q(sqrt 2); 2D_n uses the dicyclic presentation
    (R^(2n) = 1, T^2 = R^n, T R T^-1 = R^-1), order 4n.
    """
    kind = kind.upper()
    if kind == "2T":
        G = sl2(3)
        G.origin = "2T"
        return G
    if kind == "2I":
        G = sl2(5)
        G.origin = "2I"
        return G
    if kind == "2O":
        from .quaternions import binary_octahedral_generators, finite_quaternion_group

        G = finite_quaternion_group(binary_octahedral_generators())
        G.origin = "2O"
        assert G.order == 48
        return G
    if kind == "2D":
        if n is None or n < 2:
            raise BadParams("2D_n requires n >= 2")
        if 4 * n > ORDER_CAP:
            raise CapExceeded(f"order {4 * n} exceeds cap {ORDER_CAP}")
        G = dicyclic(n)
        G.origin = f"2D{n}"
        orders = G.element_orders()
        assert orders.count(2) == 1
        return G
    raise BadParams(f"unknown binary polyhedral kind {kind!r}")
