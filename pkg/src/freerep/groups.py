"""Exact finite-group kernel on Cayley tables.

Elements of a group of order n are the indices 0..n-1, with the identity
always at index 0.  All operations are pure; Group and Subgroup instances
are immutable after construction and safe to share.
"""

from __future__ import annotations

import time
from array import array
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CapExceeded,
    DeadlineExceeded,
    NotAGroup,
    NotConjugationClosed,
    NotNormal,
)

# Full O(n^3) associativity check below this order; random sampling above.
FULL_ASSOC_LIMIT = 512
ASSOC_SAMPLE_FACTOR = 10  # sampled triples = factor * n^2
SUBGROUP_CAP = 2000  # all_subgroups / normal_subgroups enumeration cap
ORDER_CAP = 6000  # largest Cayley table we agree to build
DEFAULT_SEED = 0  # for sampled associativity checks (CLI --seed overrides)


class Deadline:
    """Cooperative cancellation token for long-running enumerations."""

    def __init__(self, seconds: Optional[float] = None):
        self._expires = None if seconds is None else time.monotonic() + seconds
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    def check(self) -> None:
        if self._cancelled:
            raise DeadlineExceeded("operation cancelled")
        if self._expires is not None and time.monotonic() > self._expires:
            raise DeadlineExceeded("deadline exceeded")


def _check_deadline(deadline: Optional[Deadline]) -> None:
    if deadline is not None:
        deadline.check()


class Group:
    """Finite group as an order-n Cayley table with identity at index 0."""

    __slots__ = (
        "order",
        "table",
        "inverse",
        "labels",
        "origin",
        "factors",
        "quaternions",
        "matrices",
        "_rows",
        "_orders",
        "_classes",
        "_class_index",
        "_fingerprint",
        "_center",
        "_commutator",
    )

    def __init__(self, table: np.ndarray, labels=None, origin: str = "raw", *,
                 validate: bool = True, seed: Optional[int] = None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        self.order = int(table.shape[0])
        self.table = table
        self.labels = list(labels) if labels is not None else None
        self.origin = origin
        self.factors = None  # set by direct_product for tensor dispatch
        self.quaternions = None  # set by finite_quaternion_group
        self.matrices = None  # set by sl2: per-element (a, b, c, d) mod p
        self._rows = None
        self._orders = None
        self._classes = None
        self._class_index = None
        self._fingerprint = None
        self._center = None
        self._commutator = None
        if validate:
            _validate_table(table, seed=seed)
        inv = np.empty(self.order, dtype=np.int32)
        rows, cols = np.nonzero(table == 0)
        inv[rows] = cols
        self.inverse = inv
        if validate:
            bad = np.nonzero(table[inv, np.arange(self.order)] != 0)[0]
            if bad.size:
                i = int(bad[0])
                raise NotAGroup("one-sided inverse", (i, int(inv[i])))

    # -- basic operations -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        result, base = 0, g
        row = self.table
        while k:
            if k & 1:
                result = int(row[result, base])
            base = int(row[base, base])
            k >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    @property
    def rows(self) -> list:
        """Row-indexed multiplication rows (fast scalar lookups)."""
        if self._rows is None:
            self._rows = [array("i", row) for row in self.table.tolist()]
        return self._rows

    def element_order(self, g: int) -> int:
        return self.element_orders()[g]

    def element_orders(self) -> list:
        if self._orders is None:
            rows = self.rows
            orders = [1] * self.order
            for g in range(1, self.order):
                x, k = g, 1
                while x != 0:
                    x = rows[x][g]
                    k += 1
                orders[g] = k
            self._orders = orders
        return self._orders

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders()

    def exponent_generator(self) -> Optional[int]:
        """Some element of full order, if the group is cyclic."""
        orders = self.element_orders()
        for g in range(self.order):
            if orders[g] == self.order:
                return g
        return None

    # -- conjugacy ---------------------------------------------------------

    def conjugacy_classes(self) -> list:
        """Conjugacy classes as sorted tuples, ordered by minimum element."""
        if self._classes is None:
            n = self.order
            table, inv = self.table, self.inverse
            all_g = np.arange(n)
            seen = np.zeros(n, dtype=bool)
            class_index = np.full(n, -1, dtype=np.int32)
            classes = []
            for x in range(n):
                if seen[x]:
                    continue
                orbit = np.unique(table[table[:, x], inv[all_g]])
                seen[orbit] = True
                class_index[orbit] = len(classes)
                classes.append(tuple(int(v) for v in orbit))
            self._classes = classes
            self._class_index = class_index
        return self._classes

    def class_of(self, g: int) -> tuple:
        classes = self.conjugacy_classes()
        return classes[int(self._class_index[g])]

    def fingerprint(self) -> tuple:
        """Multiset of (element order, class size, centralizer order)."""
        if self._fingerprint is None:
            orders = self.element_orders()
            classes = self.conjugacy_classes()
            items = []
            for cls in classes:
                size = len(cls)
                cent = self.order // size
                items.extend((orders[g], size, cent) for g in cls)
            self._fingerprint = tuple(sorted(items))
        return self._fingerprint

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": self.table.tolist(),
            "labels": self.labels,
            "origin": self.origin,
        }

    def __repr__(self):
        return f"Group({self.origin}, order={self.order})"


def _validate_table(table: np.ndarray, seed: Optional[int] = None) -> None:
    if seed is None:
        seed = DEFAULT_SEED
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup("table is not square")
    n = table.shape[0]
    if n < 1:
        raise NotAGroup("empty table")
    if table.min() < 0 or table.max() >= n:
        raise NotAGroup("entry out of range")
    ident = np.arange(n, dtype=np.int32)
    if not np.array_equal(table[0], ident) or not np.array_equal(table[:, 0], ident):
        raise NotAGroup("identity is not at index 0")
    srt = np.sort(table, axis=1)
    if not np.array_equal(srt, np.tile(ident, (n, 1))):
        bad = int(np.nonzero((srt != ident).any(axis=1))[0][0])
        raise NotAGroup("row is not a permutation", bad)
    srt = np.sort(table, axis=0)
    if not np.array_equal(srt, np.tile(ident.reshape(-1, 1), (1, n))):
        bad = int(np.nonzero((srt != ident.reshape(-1, 1)).any(axis=0))[0][0])
        raise NotAGroup("column is not a permutation", bad)
    if n <= FULL_ASSOC_LIMIT:
        for i in range(n):
            lhs = table[table[i], :]
            rhs = table[i][table]
            if not np.array_equal(lhs, rhs):
                j, k = np.argwhere(lhs != rhs)[0]
                raise NotAGroup("associativity fails", (i, int(j), int(k)))
    else:
        rng = np.random.default_rng(seed)
        remaining = ASSOC_SAMPLE_FACTOR * n * n
        batch = 1 << 20
        while remaining > 0:
            m = min(batch, remaining)
            i = rng.integers(0, n, m)
            j = rng.integers(0, n, m)
            k = rng.integers(0, n, m)
            lhs = table[table[i, j], k]
            rhs = table[i, table[j, k]]
            bad = np.nonzero(lhs != rhs)[0]
            if bad.size:
                b = int(bad[0])
                raise NotAGroup(
                    "associativity fails", (int(i[b]), int(j[b]), int(k[b]))
                )
            remaining -= m


def build_group(mult_oracle: Callable[[int, int], int], n: int, *,
                labels=None, origin: str = "oracle",
                seed: Optional[int] = None) -> Group:
    """Build a validated Group from a multiplication oracle on 0..n-1.

    The identity is relocated to index 0 if the oracle's identity differs.
    """
    if n < 1:
        raise NotAGroup("order must be positive")
    if n > ORDER_CAP:
        raise CapExceeded(f"group order {n} exceeds cap {ORDER_CAP}")
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(n):
            table[i, j] = mult_oracle(i, j)
    if table.min() < 0 or table.max() >= n:
        raise NotAGroup("oracle value out of range")
    ident = np.arange(n)
    e = None
    for i in range(n):
        if np.array_equal(table[i], ident) and np.array_equal(table[:, i], ident):
            e = i
            break
    if e is None:
        raise NotAGroup("no identity element")
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0  # swap names 0 <-> e
        table = perm[table[np.ix_(perm, perm)]]
        if labels is not None:
            labels = list(labels)
            labels[0], labels[e] = labels[e], labels[0]
    return Group(table, labels=labels, origin=origin, seed=seed)


# -- subgroups --------------------------------------------------------------


class Subgroup:
    """A verified subgroup: a strictly sorted element-index set of a parent."""

    __slots__ = ("parent", "elements", "elset")

    def __init__(self, parent: Group, elements: Iterable[int], *, validate: bool = True):
        elems = tuple(sorted(set(int(x) for x in elements)))
        self.parent = parent
        self.elements = elems
        self.elset = frozenset(elems)
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self.parent.order
        if not self.elements or self.elements[0] != 0:
            raise NotAGroup("subgroup must contain the identity")
        if self.elements[-1] >= n:
            raise NotAGroup("subgroup element out of range")
        if n % len(self.elements) != 0:
            raise NotAGroup("Lagrange violation", len(self.elements))
        sub = np.fromiter(self.elements, dtype=np.int64)
        mask = np.zeros(n, dtype=bool)
        mask[sub] = True
        if not mask[self.parent.table[np.ix_(sub, sub)]].all():
            raise NotAGroup("subgroup not closed under multiplication")
        if not mask[self.parent.inverse[sub]].all():
            raise NotAGroup("subgroup not closed under inverse")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elset

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elset == other.elset
        )

    def __hash__(self):
        return hash((id(self.parent), self.elset))

    def __repr__(self):
        return f"Subgroup(order={len(self)}, of={self.parent.origin})"

    def is_normal(self) -> bool:
        G = self.parent
        sub = np.fromiter(self.elements, dtype=np.int64)
        mask = np.zeros(G.order, dtype=bool)
        mask[sub] = True
        all_g = np.arange(G.order)
        conj = G.table[G.table[np.ix_(all_g, sub)], G.inverse[all_g, None]]
        return bool(mask[conj].all())

    def as_group(self) -> Group:
        """Standalone Group on this subgroup's elements (index 0 stays identity)."""
        G = self.parent
        sub = np.fromiter(self.elements, dtype=np.int64)
        pos = {g: i for i, g in enumerate(self.elements)}
        lookup = np.full(G.order, -1, dtype=np.int32)
        lookup[sub] = np.arange(len(sub), dtype=np.int32)
        table = lookup[G.table[np.ix_(sub, sub)]]
        labels = [G.label(g) for g in self.elements] if G.labels else None
        grp = Group(table, labels=labels,
                    origin=f"subgroup(order={len(sub)}, of={G.origin})")
        if G.quaternions is not None:
            grp.quaternions = [G.quaternions[g] for g in self.elements]
        return grp


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, (0,), validate=False)


def full_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, range(G.order), validate=False)


def mulclose(G: Group, gens: Sequence[int], *, cap: Optional[int] = None) -> Optional[list]:
    """Closure of {identity} under right multiplication by gens.

    Returns the sorted element list, or None if a cap was given and exceeded.
    """
    rows = G.rows
    elems = {0}
    frontier = [0]
    gens = [g for g in dict.fromkeys(int(g) for g in gens) if True]
    while frontier:
        new = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        if cap is not None and len(elems) > cap:
            return None
        frontier = new
    return sorted(elems)


def subgroup_generated(G: Group, gens: Sequence[int]) -> Subgroup:
    """Least subgroup containing gens (breadth-first closure).

    Large generating sets are absorbed incrementally: close over a few
    generators, then add one not yet inside and re-close, so the cost is
    |H| times the number of ESSENTIAL generators.
    """
    gens = list(dict.fromkeys(int(g) for g in gens))
    for g in gens:
        if not 0 <= g < G.order:
            raise NotAGroup("generator out of range", g)
    if len(gens) <= 4:
        return Subgroup(G, mulclose(G, gens), validate=False)
    active = gens[:2]
    closed = set(mulclose(G, active))
    for g in gens:
        if g not in closed:
            active.append(g)
            closed = set(mulclose(G, active))
    return Subgroup(G, sorted(closed), validate=False)


def cyclic_subgroups(G: Group) -> list:
    """All cyclic subgroups, each as a Subgroup, deduplicated."""
    rows = G.rows
    seen = {}
    for g in range(G.order):
        elems = [0]
        x = g
        while x != 0:
            elems.append(x)
            x = rows[x][g]
        key = frozenset(elems)
        if key not in seen:
            seen[key] = Subgroup(G, elems, validate=False)
    return list(seen.values())


def all_subgroups(G: Group, *, cap: int = SUBGROUP_CAP,
                  deadline: Optional[Deadline] = None) -> list:
    """Every subgroup exactly once, by cyclic seeds + pairwise join closure."""
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds subgroup cap {cap}")
    found = {}  # frozenset -> short generator tuple
    queue = []
    for sub in cyclic_subgroups(G):
        key = sub.elset
        gen = max(sub.elements[1:], default=0, key=G.element_orders().__getitem__) \
            if len(sub) > 1 else 0
        g = (gen,) if len(sub) > 1 else ()
        found[key] = g
        queue.append((key, g))
    processed = []
    while queue:
        _check_deadline(deadline)
        key1, gens1 = queue.pop()
        for key2, gens2 in processed:
            if key1 <= key2 or key2 <= key1:
                continue
            joined = mulclose(G, gens1 + gens2)
            jkey = frozenset(joined)
            if jkey not in found:
                reduced = _reduce_gens(G, gens1 + gens2, len(joined))
                found[jkey] = reduced
                queue.append((jkey, reduced))
        processed.append((key1, gens1))
    subs = [Subgroup(G, key, validate=False) for key in found]
    subs.sort(key=lambda s: (len(s), s.elements))
    return subs


def _reduce_gens(G: Group, gens: tuple, target: int) -> tuple:
    """Drop redundant generators (keeps joins cheap)."""
    gens = tuple(dict.fromkeys(gens))
    if len(gens) <= 2:
        return gens
    for i in range(len(gens)):
        trimmed = gens[:i] + gens[i + 1:]
        closed = mulclose(G, trimmed, cap=target)
        if closed is not None and len(closed) == target:
            return _reduce_gens(G, trimmed, target)
    return gens


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    elems = []
    hset = H.elset
    helems = H.elements
    rows = G.rows
    inv = G.inverse
    for g in range(G.order):
        row = rows[g]
        ig = int(inv[g])
        if all(rows[row[h]][ig] in hset for h in helems):
            elems.append(g)
    return Subgroup(G, elems, validate=False)


def centralizer(G: Group, elems: Iterable[int]) -> Subgroup:
    targets = list(dict.fromkeys(int(x) for x in elems))
    rows = G.rows
    out = [g for g in range(G.order)
           if all(rows[g][x] == rows[x][g] for x in targets)]
    return Subgroup(G, out, validate=False)


def center(G: Group) -> Subgroup:
    if G._center is None:
        eq = G.table == G.table.T
        G._center = Subgroup(G, [int(g) for g in np.nonzero(eq.all(axis=1))[0]],
                             validate=False)
    return G._center


def commutator_subgroup(G: Group) -> Subgroup:
    if G._commutator is None:
        n = G.order
        i = np.repeat(np.arange(n), n)
        j = np.tile(np.arange(n), n)
        comms = G.table[G.table[G.inverse[i], G.inverse[j]], G.table[i, j]]
        gens = np.unique(comms)
        G._commutator = subgroup_generated(G, [int(g) for g in gens])
    return G._commutator


def commutator_of_subgroup(G: Group, H: Subgroup) -> Subgroup:
    """Commutator subgroup of H, computed inside the parent G."""
    rows, inv = G.rows, G.inverse
    gens = set()
    for x in H.elements:
        ix = int(inv[x])
        for y in H.elements:
            gens.add(rows[rows[ix][int(inv[y])]][rows[x][y]])
    gens.discard(0)
    return subgroup_generated(G, sorted(gens))


def derived_series(G: Group) -> list:
    """G >= G' >= G'' >= ... computed until stable."""
    series = [full_subgroup(G)]
    current = commutator_subgroup(G)
    while current.elset != series[-1].elset:
        series.append(current)
        current = commutator_of_subgroup(G, current)
    return series


def is_solvable(G: Group) -> bool:
    return len(derived_series(G)[-1]) == 1


def is_perfect(G: Group) -> bool:
    return len(commutator_subgroup(G)) == G.order


def perfect_core(G: Group) -> Subgroup:
    """Last term of the derived series (trivial iff solvable)."""
    return derived_series(G)[-1]


def normal_closure(G: Group, seeds: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup containing the seed elements."""
    gens = list(dict.fromkeys(int(x) for x in seeds))
    while True:
        H = subgroup_generated(G, gens)
        sub = np.fromiter(H.elements, dtype=np.int64)
        mask = np.zeros(G.order, dtype=bool)
        mask[sub] = True
        all_g = np.arange(G.order)
        conj = G.table[G.table[np.ix_(all_g, sub)], G.inverse[all_g, None]]
        outside = conj[~mask[conj]]
        if outside.size == 0:
            return H
        gens.append(int(outside.flat[0]))


def normal_subgroups(G: Group, *, cap: int = SUBGROUP_CAP,
                     deadline: Optional[Deadline] = None) -> list:
    """Normal subgroups, filtered from all_subgroups by conjugation-invariance."""
    return [H for H in all_subgroups(G, cap=cap, deadline=deadline) if H.is_normal()]


@dataclass
class StructureReport:
    center: Subgroup
    commutator_subgroup: Subgroup
    derived_series: list
    conjugacy_classes: list
    normal_subgroups: list
    is_solvable: bool
    is_perfect: bool


def structure_ops(G: Group, *, cap: int = SUBGROUP_CAP,
                  deadline: Optional[Deadline] = None) -> StructureReport:
    series = derived_series(G)
    return StructureReport(
        center=center(G),
        commutator_subgroup=commutator_subgroup(G),
        derived_series=series,
        conjugacy_classes=G.conjugacy_classes(),
        normal_subgroups=normal_subgroups(G, cap=cap, deadline=deadline),
        is_solvable=len(series[-1]) == 1,
        is_perfect=len(commutator_subgroup(G)) == G.order,
    )


# -- Sylow theory ------------------------------------------------------------


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from a cyclic seed inside iterated normalizers."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise NotAGroup(f"{p} is not prime")
    target = 1
    while G.order % (target * p) == 0:
        target *= p
    if target == 1:
        return trivial_subgroup(G)
    orders = G.element_orders()
    seed = next(g for g in range(G.order) if orders[g] % p == 0)
    seed = G.power(seed, orders[seed] // p)
    P = subgroup_generated(G, [seed])
    while len(P) < target:
        N = normalizer(G, P)
        NG = N.as_group()
        pos = {g: i for i, g in enumerate(N.elements)}
        P_in_N = Subgroup(NG, [pos[g] for g in P.elements], validate=False)
        Q, proj = quotient_group(NG, P_in_N)
        qorders = Q.element_orders()
        q_elem = next(q for q in range(Q.order) if qorders[q] == p)
        lift = N.elements[proj.map.index(q_elem)]
        P = subgroup_generated(G, list(P.elements) + [lift])
    return P


def sylow_conjugates(G: Group, P: Subgroup) -> list:
    """Distinct conjugates of a subgroup (as frozensets)."""
    sub = np.fromiter(P.elements, dtype=np.int64)
    out = set()
    table, inv = G.table, G.inverse
    for g in range(G.order):
        out.add(frozenset(int(v) for v in table[table[g, sub], inv[g]]))
    return sorted(out, key=sorted)


# -- quotients and homomorphisms ---------------------------------------------


class Homomorphism:
    """A verified homomorphism given by an index map."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source: Group, target: Group, index_map: Sequence[int], *,
                 validate: bool = True):
        self.source = source
        self.target = target
        self.map = list(int(x) for x in index_map)
        if validate:
            self.verify()

    def verify(self) -> None:
        if len(self.map) != self.source.order:
            raise NotAGroup("homomorphism map has wrong length")
        if self.map[0] != 0:
            raise NotAGroup("homomorphism does not fix the identity")
        m = np.fromiter(self.map, dtype=np.int64)
        if m.min() < 0 or m.max() >= self.target.order:
            raise NotAGroup("homomorphism image out of range")
        lhs = m[self.source.table]
        rhs = self.target.table[np.ix_(m, m)]
        if not np.array_equal(lhs, rhs):
            i, j = np.argwhere(lhs != rhs)[0]
            raise NotAGroup("map is not multiplicative", (int(i), int(j)))

    def __call__(self, g: int) -> int:
        return self.map[g]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, [g for g, h in enumerate(self.map) if h == 0],
                        validate=False)

    def is_bijective(self) -> bool:
        return (self.source.order == self.target.order
                and len(set(self.map)) == self.source.order)

    def inverse_map(self) -> "Homomorphism":
        if not self.is_bijective():
            raise NotAGroup("homomorphism is not bijective")
        inv = [0] * self.target.order
        for g, h in enumerate(self.map):
            inv[h] = g
        return Homomorphism(self.target, self.source, inv, validate=False)


def quotient_group(G: Group, N: Subgroup) -> tuple:
    """(G/N, canonical projection).  Raises NotNormal if N is not normal."""
    if N.parent is not G:
        raise NotNormal("subgroup bound to a different parent")
    if not N.is_normal():
        raise NotNormal("subgroup is not normal")
    sub = np.fromiter(N.elements, dtype=np.int64)
    n = G.order
    rep = np.full(n, -1, dtype=np.int64)
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for g in range(n):
        if rep[g] >= 0:
            continue
        coset = G.table[g, sub]
        rep[coset] = g
        coset_of[coset] = len(reps)
        reps.append(g)
    reps_arr = np.fromiter(reps, dtype=np.int64)
    table = coset_of[G.table[np.ix_(reps_arr, reps_arr)]]
    labels = [G.label(r) for r in reps] if G.labels else None
    Q = Group(table, labels=labels, origin=f"quotient({G.origin}/{len(N)})")
    proj = Homomorphism(G, Q, [int(c) for c in coset_of])
    return Q, proj


# -- isomorphism testing ------------------------------------------------------


def generating_sequence(G: Group) -> list:
    """A short generating sequence, greedily maximizing subgroup growth."""
    if G.order == 1:
        return []
    orders = G.element_orders()
    by_order = sorted(range(1, G.order), key=lambda g: -orders[g])
    gens = []
    current = {0}
    while len(current) < G.order:
        best, best_closure = None, None
        scanned = 0
        for g in by_order:
            if g in current:
                continue
            closure = mulclose(G, gens + [g])
            if len(closure) == G.order:
                best, best_closure = g, closure
                break
            if best_closure is None or len(closure) > len(best_closure):
                best, best_closure = g, closure
            scanned += 1
            if scanned >= 40:
                break
        gens.append(best)
        current = set(best_closure)
    return gens


def _close_with_map(G: Group, H: Group, genpairs: list) -> Optional[dict]:
    """Extend {0:0} multiplicatively along genpairs; None on conflict."""
    m = {0: 0}
    frontier = [0]
    grows, hrows = G.rows, H.rows
    while frontier:
        new = []
        for x in frontier:
            hx = m[x]
            grow, hrow = grows[x], hrows[hx]
            for g, h in genpairs:
                y = grow[g]
                hy = hrow[h]
                known = m.get(y)
                if known is None:
                    m[y] = hy
                    new.append(y)
                elif known != hy:
                    return None
        frontier = new
    return m


def is_isomorphic(G: Group, H: Group, *,
                  deadline: Optional[Deadline] = None) -> Optional[Homomorphism]:
    """An isomorphism witness, or None.  Absence of a witness is a value."""
    if G.order != H.order:
        return None
    if G.order == 1:
        return Homomorphism(G, H, [0])
    if G.fingerprint() != H.fingerprint():
        return None
    gens = generating_sequence(G)
    gorders = G.element_orders()
    horders = H.element_orders()
    hclasses = H.conjugacy_classes()
    g_inv = [(gorders[g], len(G.class_of(g))) for g in gens]
    candidates = []
    for inv in g_inv:
        cand = [h for cls in hclasses
                for h in cls
                if (horders[h], len(cls)) == inv]
        candidates.append(cand)

    assignment = [None] * len(gens)

    def backtrack(i: int) -> Optional[dict]:
        _check_deadline(deadline)
        if i == len(gens):
            m = _close_with_map(G, H, list(zip(gens, assignment)))
            if m and len(m) == G.order and len(set(m.values())) == G.order:
                return m
            return None
        for h in candidates[i]:
            assignment[i] = h
            m = _close_with_map(G, H, list(zip(gens[: i + 1], assignment[: i + 1])))
            if m is not None and len(set(m.values())) == len(m):
                result = backtrack(i + 1)
                if result is not None:
                    return result
        assignment[i] = None
        return None

    m = backtrack(0)
    if m is None:
        return None
    index_map = [m[g] for g in range(G.order)]
    return Homomorphism(G, H, index_map)


# -- Frobenius counting --------------------------------------------------------


def count_nth_roots(G: Group, C: Iterable[int], n: int) -> int:
    """|{x : x^n in C}| for a conjugation-closed C; a multiple of gcd(n|C|,|G|)."""
    cset = frozenset(int(x) for x in C)
    if not cset:
        return 0
    table, inv = G.table, G.inverse
    sub = np.fromiter(cset, dtype=np.int64)
    all_g = np.arange(G.order)
    conj = table[table[np.ix_(all_g, sub)], inv[all_g, None]]
    mask = np.zeros(G.order, dtype=bool)
    mask[sub] = True
    if not mask[conj].all():
        raise NotConjugationClosed("set is not closed under conjugation")
    if n < 1:
        raise NotAGroup("n must be positive")
    count = sum(1 for x in range(G.order) if G.power(x, n) in cset)
    assert count % gcd(n * len(cset), G.order) == 0, "Frobenius divisibility violated"
    return count
