"""Structural classification: Sylow profiles, odd core O(G), MCC subgroup,
solvable cycloidal types via G/O(G), semiprime-cyclic scan, and the
freely-representable verdict with independently checkable witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .errors import NotCycloidal, NotSylowCyclic
from .groups import (
    Group,
    Subgroup,
    centralizer,
    center,
    commutator_subgroup,
    cyclic_subgroups,
    is_isomorphic,
    is_solvable,
    mulclose,
    normal_closure,
    perfect_core,
    quotient_group,
    subgroup_generated,
    sylow_subgroup,
    trivial_subgroup,
)

FERMAT_PRIMES = (3, 5, 17, 257, 65537)

_canonical_cache: dict = {}


def _canonical(name: str) -> Group:
    """Reference models for isomorphism matching (2T, 2O, SL2(5))."""
    if name not in _canonical_cache:
        from .constructors import binary_polyhedral
        from .sl2census import sl2_group

        if name == "2T":
            _canonical_cache[name] = sl2_group(3)
        elif name == "2O":
            _canonical_cache[name] = binary_polyhedral("2O")
        elif name == "SL2(5)":
            _canonical_cache[name] = sl2_group(5)
        elif name == "SL2(17)":
            _canonical_cache[name] = sl2_group(17)
        else:
            raise KeyError(name)
    return _canonical_cache[name]


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


# -- Sylow profile ---------------------------------------------------------------


@dataclass(frozen=True)
class SylowClass:
    prime: int
    order: int
    kind: str  # cyclic | generalized_quaternion | other


def sylow_profile(G: Group) -> dict:
    """One Sylow subgroup per prime, classified by shape."""
    profile = {}
    orders = G.element_orders()
    for p in _prime_factors(G.order):
        P = sylow_subgroup(G, p)
        size = len(P)
        if any(orders[g] == size for g in P.elements):
            kind = "cyclic"
        elif p == 2 and size >= 8 and \
                sum(1 for g in P.elements if orders[g] == 2) == 1:
            from .constructors import generalized_quaternion

            match = is_isomorphic(P.as_group(), generalized_quaternion(size))
            kind = "generalized_quaternion" if match is not None else "other"
        else:
            kind = "other"
        profile[p] = SylowClass(p, size, kind)
    return profile


def is_sylow_cyclic(G: Group, profile: Optional[dict] = None) -> bool:
    profile = profile if profile is not None else sylow_profile(G)
    return all(c.kind == "cyclic" for c in profile.values())


def is_sylow_cycloidal(G: Group, profile: Optional[dict] = None) -> bool:
    profile = profile if profile is not None else sylow_profile(G)
    return all(
        c.kind == "cyclic" or (c.prime == 2 and c.kind == "generalized_quaternion")
        for c in profile.values()
    )


# -- odd core ---------------------------------------------------------------------


def odd_core(G: Group) -> Subgroup:
    """O(G): the maximum normal subgroup of odd order.

    Computed as the join of the normal closures of odd-order elements whose
    closure stays odd; every normal odd-order subgroup is such a join, so the
    result provably contains them all.
    """
    orders = G.element_orders()
    seen = set()
    odd_closures = []
    for g in range(1, G.order):
        if orders[g] % 2 == 0:
            continue
        C = frozenset(mulclose(G, [g]))
        if C in seen:
            continue
        seen.add(C)
        N = normal_closure(G, [g])
        if len(N) % 2 == 1:
            odd_closures.append(N)
    core = trivial_subgroup(G)
    for N in odd_closures:
        if N.elset <= core.elset:
            continue
        core = subgroup_generated(G, list(core.elements) + list(N.elements))
        assert len(core) % 2 == 1, "join of odd normal subgroups must stay odd"
    assert core.is_normal()
    return core


# -- cycloidal type ----------------------------------------------------------------


SYLOW_CYCLIC = "sylow_cyclic"
QUATERNION_TYPE = "quaternion"
BINARY_TETRAHEDRAL_TYPE = "binary_tetrahedral"
BINARY_OCTAHEDRAL_TYPE = "binary_octahedral"
NON_SOLVABLE = "non_solvable"
NOT_CYCLOIDAL = "not_cycloidal"


def cycloidal_type(G: Group, profile: Optional[dict] = None) -> str:
    """Which of the four solvable types (or non-solvable) G belongs to.

    The solvable types are keyed by G/O(G): cyclic 2-group, generalized
    quaternion, 2T, or 2O.
    """
    profile = profile if profile is not None else sylow_profile(G)
    if not is_sylow_cycloidal(G, profile):
        raise NotCycloidal(f"{G.origin} is not Sylow-cycloidal")
    if not is_solvable(G):
        return NON_SOLVABLE
    Q, _ = quotient_group(G, odd_core(G))
    n = Q.order
    if n & (n - 1) == 0 and Q.is_cyclic():
        return SYLOW_CYCLIC
    if n & (n - 1) == 0 and n >= 8:
        from .constructors import generalized_quaternion

        assert is_isomorphic(Q, generalized_quaternion(n)) is not None, \
            "2-group quotient is neither cyclic nor generalized quaternion"
        return QUATERNION_TYPE
    if n == 24 and is_isomorphic(Q, _canonical("2T")) is not None:
        return BINARY_TETRAHEDRAL_TYPE
    if n == 48 and is_isomorphic(Q, _canonical("2O")) is not None:
        return BINARY_OCTAHEDRAL_TYPE
    raise NotCycloidal(f"G/O(G) of order {n} matches no cycloidal type")


# -- MCC subgroup -------------------------------------------------------------------


def mcc_subgroup(G: Group) -> Subgroup:
    """mu(G) for Sylow-cyclic G: the maximum cyclic characteristic subgroup,
    computed as the centralizer of G' and cross-checked against G'Z(G)."""
    if not is_sylow_cyclic(G):
        raise NotSylowCyclic(f"{G.origin} is not Sylow-cyclic")
    A = commutator_subgroup(G)
    mu = centralizer(G, A.elements)
    orders = G.element_orders()
    assert any(orders[g] == len(mu) for g in mu.elements), "mu(G) must be cyclic"
    assert mu.is_normal(), "mu(G) must be normal (hence unique of its order)"
    Z = center(G)
    product = {G.mul(a, z) for a in A.elements for z in Z.elements}
    assert product == set(mu.elements), "mu(G) != G'Z(G)"
    assert G.order == 1 or len(mu) > G.order // len(mu), \
        "|mu(G)| must exceed its index"
    return mu


# -- semiprime-cyclic scan -----------------------------------------------------------


def is_semiprime_cyclic(G: Group) -> tuple:
    """(True, None) or (False, witness): scans subgroups generated by two
    prime-order elements; any noncyclic order-pq subgroup arises this way."""
    primes = [C for C in cyclic_subgroups(G) if _is_prime(len(C))]
    orders = G.element_orders()
    for i, C1 in enumerate(primes):
        g1 = C1.elements[1]
        p = len(C1)
        for C2 in primes[i + 1:]:
            g2 = C2.elements[1]
            q = len(C2)
            bound = p * q
            closure = mulclose(G, [g1, g2], cap=bound)
            if closure is None or len(closure) != bound:
                continue
            if not any(orders[g] == bound for g in closure):
                return False, Subgroup(G, closure)
    return True, None


# -- the freely-representable verdict -------------------------------------------------


@dataclass
class FreelyRepresentableVerdict:
    answer: bool
    criterion: str
    witness: Optional[Subgroup] = None
    fermat_prime: Optional[int] = None
    supporting: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"answer": "yes" if self.answer else "no",
               "criterion": self.criterion}
        if self.witness is not None:
            out["witness_order"] = len(self.witness)
            out["witness_elements"] = list(self.witness.elements)
        if self.fermat_prime is not None:
            out["fermat_prime"] = self.fermat_prime
        if self.supporting:
            out["supporting"] = {k: len(v) for k, v in self.supporting.items()}
        return out


def _index2_subgroups(G: Group) -> list:
    """Index-2 subgroups, via the abelianization (no full enumeration)."""
    from .groups import all_subgroups

    A = commutator_subgroup(G)
    if (G.order // len(A)) % 2:
        return []
    Q, proj = quotient_group(G, A)
    out = []
    for H in all_subgroups(Q):
        if 2 * len(H) == Q.order:
            lifted = [g for g in G.elements() if proj(g) in H.elset]
            out.append(Subgroup(G, lifted, validate=False))
    return out


def _odd_part_of_centralizer(HG: Group, E: Subgroup) -> Subgroup:
    cent = centralizer(HG, E.elements)
    orders = HG.element_orders()
    odd = [g for g in cent.elements if orders[g] % 2 == 1]
    return Subgroup(HG, odd)


def _suzuki_zassenhaus_structure(G: Group) -> Optional[dict]:
    """Find H of index <= 2 with H = E x M, E iso SL2(F5), M odd order
    prime to 30 and freely representable.  Subgroups come back in G's
    own index space."""
    candidates = [None] + _index2_subgroups(G)  # None stands for G itself
    for H in candidates:
        HG = G if H is None else H.as_group()
        if HG.order % 120:
            continue
        E = perfect_core(HG)
        if len(E) != 120:
            continue
        if is_isomorphic(E.as_group(), _canonical("SL2(5)")) is None:
            continue
        M = _odd_part_of_centralizer(HG, E)
        if len(E) * len(M) != HG.order:
            continue
        if E.elset & M.elset != {0}:
            continue
        if gcd(len(M), 30) != 1:
            continue
        if not is_freely_representable(M.as_group()).answer:
            continue
        if H is not None:  # translate back into G's element indices
            E = Subgroup(G, [H.elements[i] for i in E.elements], validate=False)
            M = Subgroup(G, [H.elements[i] for i in M.elements], validate=False)
        out = {"sl2f5_factor": E, "odd_factor": M}
        if H is not None:
            out["index2_subgroup"] = H
        return out
    return None


def _embedded_fermat_sl2(G: Group) -> Optional[tuple]:
    """Search for an SL2(F_p) with Fermat p >= 17 inside G.

    Under the order cap only |G| = |SL2(F_17)| = 4896 is reachable, in which
    case the embedding must be an isomorphism.
    """
    for p in FERMAT_PRIMES:
        if p < 17:
            continue
        size = (p - 1) * p * (p + 1)
        if size > G.order:
            break
        if size == G.order:
            if is_isomorphic(G, _canonical(f"SL2({p})")) is not None:
                from .groups import full_subgroup

                return p, full_subgroup(G)
    return None


def is_freely_representable(G: Group, *,
                            _semiprime: Optional[tuple] = None
                            ) -> FreelyRepresentableVerdict:
    """Uniform decision: semiprime-cyclic scan, then the Fermat poison pill,
    then solvable yes / Suzuki-Zassenhaus structure for non-solvable yes."""
    ok, witness = _semiprime if _semiprime is not None else is_semiprime_cyclic(G)
    if not ok:
        return FreelyRepresentableVerdict(
            False, "noncyclic_semiprime_subgroup", witness=witness)
    if G.order >= 4896:
        hit = _embedded_fermat_sl2(G)
        if hit is not None:
            p, sub = hit
            return FreelyRepresentableVerdict(
                False, "embedded_sl2_fermat", witness=sub, fermat_prime=p)
    if is_solvable(G):
        return FreelyRepresentableVerdict(True, "solvable_semiprime_cyclic")
    structure = _suzuki_zassenhaus_structure(G)
    if structure is None:
        raise NotCycloidal(
            "non-solvable semiprime-cyclic group without Suzuki-Zassenhaus "
            "structure; this contradicts the classification")
    supporting = {k: v for k, v in structure.items() if v is not None}
    return FreelyRepresentableVerdict(
        True, "suzuki_zassenhaus_structure", supporting=supporting)


# -- aggregate report -----------------------------------------------------------------


@dataclass
class ClassificationReport:
    group: Group
    sylow_profile: dict
    is_sylow_cyclic: bool
    is_sylow_cycloidal: bool
    odd_core: Subgroup
    cycloidal_type: str
    mcc: Optional[Subgroup]
    unique_involution: Optional[int]
    semiprime_cyclic: bool
    semiprime_witness: Optional[Subgroup]
    fr_verdict: FreelyRepresentableVerdict

    def to_json(self) -> dict:
        return {
            "origin": self.group.origin,
            "order": self.group.order,
            "sylow_profile": {
                str(p): {"kind": c.kind, "order": c.order}
                for p, c in self.sylow_profile.items()
            },
            "is_sylow_cyclic": self.is_sylow_cyclic,
            "is_sylow_cycloidal": self.is_sylow_cycloidal,
            "odd_core_order": len(self.odd_core),
            "cycloidal_type": self.cycloidal_type,
            "mcc_order": len(self.mcc) if self.mcc is not None else None,
            "unique_involution": self.unique_involution,
            "normal_order2_subgroup":
                [0, self.unique_involution]
                if self.unique_involution is not None else None,
            "semiprime_cyclic": self.semiprime_cyclic,
            "semiprime_witness_order":
                len(self.semiprime_witness) if self.semiprime_witness else None,
            "freely_representable": self.fr_verdict.to_json(),
        }


def classify(G: Group) -> ClassificationReport:
    profile = sylow_profile(G)
    sc = is_sylow_cyclic(G, profile)
    scq = is_sylow_cycloidal(G, profile)
    core = odd_core(G)
    ctype = cycloidal_type(G, profile) if scq else NOT_CYCLOIDAL
    mu = mcc_subgroup(G) if sc else None
    orders = G.element_orders()
    involutions = [g for g in G.elements() if orders[g] == 2]
    unique_inv = involutions[0] if len(involutions) == 1 else None
    ok, witness = is_semiprime_cyclic(G)
    verdict = is_freely_representable(G, _semiprime=(ok, witness))

    # internal cross-checks
    if verdict.answer:
        assert ok, "freely representable groups must be semiprime-cyclic"
        assert scq, "freely representable groups must be Sylow-cycloidal"
        if G.order % 2 == 0:
            assert unique_inv is not None, \
                "even freely representable groups have a unique involution"
    if scq and not sc:
        assert unique_inv is not None, \
            "non-Sylow-cyclic cycloidal groups have a unique involution"
    if sc:
        primes = _prime_factors(G.order)
        expected = all(len(mu) % p == 0 for p in primes)
        assert verdict.answer == expected, \
            "Sylow-cyclic verdict disagrees with the mu(G) divisibility criterion"

    return ClassificationReport(
        group=G,
        sylow_profile=profile,
        is_sylow_cyclic=sc,
        is_sylow_cycloidal=scq,
        odd_core=core,
        cycloidal_type=ctype,
        mcc=mu,
        unique_involution=unique_inv,
        semiprime_cyclic=ok,
        semiprime_witness=witness,
        fr_verdict=verdict,
    )
