"""Exact rational group-algebra arithmetic and norm-relation-of-unity
certificates: decide whether 1 lies in the left ideal of Q[G] generated by
nontrivial subgroup norms, and emit machine-verifiable witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CapExceeded, NotAPartition, ParentMismatch
from .groups import Deadline, Group, Subgroup, cyclic_subgroups, full_subgroup

NORM_RELATION_CAP = 256

ZERO = Fraction(0)
ONE = Fraction(1)


class GroupAlgebraElement:
    """Element of Q[G] as a dense length-|G| vector of exact rationals."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: Group, coeffs=None):
        self.parent = parent
        if coeffs is None:
            self.coeffs = [ZERO] * parent.order
        else:
            self.coeffs = [Fraction(c) for c in coeffs]
            if len(self.coeffs) != parent.order:
                raise ParentMismatch("coefficient vector has wrong length")

    @staticmethod
    def unit(parent: Group) -> "GroupAlgebraElement":
        x = GroupAlgebraElement(parent)
        x.coeffs[0] = ONE
        return x

    @staticmethod
    def of_element(parent: Group, g: int, coeff=ONE) -> "GroupAlgebraElement":
        x = GroupAlgebraElement(parent)
        x.coeffs[g] = Fraction(coeff)
        return x

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.parent is not other.parent:
            raise ParentMismatch("elements of different group algebras")

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.parent, [c * a for a in self.coeffs])

    def __mul__(self, other):
        """Convolution product: sum of x_g y_h on gh."""
        self._check(other)
        rows = self.parent.rows
        out = [ZERO] * self.parent.order
        support = [(g, c) for g, c in enumerate(self.coeffs) if c]
        other_support = [(h, c) for h, c in enumerate(other.coeffs) if c]
        for g, cg in support:
            row = rows[g]
            for h, ch in other_support:
                out[row[h]] += cg * ch
        return GroupAlgebraElement(self.parent, out)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.parent is other.parent
                and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def support(self) -> list:
        return [g for g, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        terms = [f"{c}*{self.parent.label(g)}"
                 for g, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def norm_element(H: Subgroup) -> GroupAlgebraElement:
    """N(H): coefficient 1 on each element of H, 0 elsewhere."""
    x = GroupAlgebraElement(H.parent)
    for g in H.elements:
        x.coeffs[g] = ONE
    return x


@dataclass
class NormRelationCertificate:
    """1 = sum of left_coefficient * N(subgroup), re-verified exactly."""

    group: Group
    terms: list  # of (Subgroup, GroupAlgebraElement)
    verified: bool = False

    def verify(self) -> bool:
        total = GroupAlgebraElement(self.group)
        for sub, coeff in self.terms:
            if sub.parent is not self.group or coeff.parent is not self.group:
                raise ParentMismatch("certificate term bound to wrong group")
            if len(sub) == 1:
                self.verified = False
                return False
            total = total + coeff * norm_element(sub)
        self.verified = total == GroupAlgebraElement.unit(self.group)
        return self.verified

    def to_json(self, group_spec: str | None = None) -> dict:
        return {
            "group_spec": group_spec or self.group.origin,
            "terms": [
                {
                    "subgroup_elements": list(sub.elements),
                    "coefficient": [
                        [g, f"{coeff.coeffs[g].numerator}/"
                            f"{coeff.coeffs[g].denominator}"]
                        for g in coeff.support()
                    ],
                }
                for sub, coeff in self.terms
            ],
            "verified": self.verified,
        }


def verify_certificate(cert: NormRelationCertificate) -> bool:
    return cert.verify()


@dataclass
class NormRelationOutcome:
    """find_norm_relation result: a certificate or absence + ideal dimension."""

    certificate: Optional[NormRelationCertificate]
    ideal_dimension: int


class _Row:
    __slots__ = ("vec", "pivot", "combo")

    def __init__(self, vec, pivot, combo):
        self.vec = vec
        self.pivot = pivot
        self.combo = combo


class NormIdealBasis:
    """Reduced echelon basis of the left ideal spanned by {g * N(C)} with C
    ranging over the prime-order cyclic subgroups, with provenance tracking."""

    def __init__(self, G: Group):
        self.group = G
        self.subgroups = [C for C in cyclic_subgroups(G) if _is_prime(len(C))]
        self.rows: list[_Row] = []
        self.generators: list = []  # (subgroup_index, coset_rep)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: list, combo: dict) -> tuple:
        for row in self.rows:
            c = vec[row.pivot]
            if c:
                rvec = row.vec
                vec = [a - c * b for a, b in zip(vec, rvec)]
                for j, rc in row.combo.items():
                    combo[j] = combo.get(j, ZERO) - c * rc
        return vec, combo

    def _insert(self, vec: list, combo: dict) -> bool:
        """Insert a reduced nonzero vector; returns False if it was zero."""
        support = [(abs(c.numerator) + c.denominator, g)
                   for g, c in enumerate(vec) if c]
        if not support:
            return False
        _, pivot = min(support)  # smallest-numerator pivot limits blowup
        inv = ONE / vec[pivot]
        vec = [inv * c for c in vec]
        combo = {j: inv * c for j, c in combo.items() if c}
        new = _Row(vec, pivot, combo)
        for row in self.rows:
            c = row.vec[pivot]
            if c:
                row.vec = [a - c * b for a, b in zip(row.vec, vec)]
                for j, rc in combo.items():
                    row.combo[j] = row.combo.get(j, ZERO) - c * rc
        self.rows.append(new)
        return True

    def reduce_vector(self, coeffs: list) -> tuple:
        """Reduce an arbitrary vector; returns (residue, combo over generators)."""
        return self._reduce([Fraction(c) for c in coeffs], {})

    def contains(self, x: GroupAlgebraElement) -> bool:
        residue, _ = self.reduce_vector(x.coeffs)
        return all(c == 0 for c in residue)

    def feed_all(self, *, stop_at_unit: bool = False,
                 deadline: Optional[Deadline] = None) -> Optional[dict]:
        """Feed every generator g*N(C); optionally stop once 1 is in the span.

        Returns the unit's generator combination when found, else None.
        """
        G = self.group
        rows_tbl = G.rows
        n = G.order
        unit_red = [ONE] + [ZERO] * (n - 1)
        unit_combo: dict = {}
        unit_found = False

        gen_streams = []
        for ci, C in enumerate(self.subgroups):
            seen = [False] * n
            reps = []
            for g in range(n):
                if not seen[g]:
                    for h in C.elements:
                        seen[rows_tbl[g][h]] = True
                    reps.append(g)
            gen_streams.append((ci, C, reps))

        # round-robin across subgroups so the rank grows quickly
        order = []
        depth = 0
        remaining = sum(len(reps) for _, _, reps in gen_streams)
        while len(order) < remaining:
            for ci, C, reps in gen_streams:
                if depth < len(reps):
                    order.append((ci, C, reps[depth]))
            depth += 1

        for ci, C, g in order:
            if deadline is not None:
                deadline.check()
            vec = [ZERO] * n
            row = rows_tbl[g]
            for h in C.elements:
                vec[row[h]] = ONE
            gen_index = len(self.generators)
            self.generators.append((ci, g))
            vec, combo = self._reduce(vec, {gen_index: ONE})
            if self._insert(vec, combo):
                if not unit_found:
                    new = self.rows[-1]
                    c = unit_red[new.pivot]
                    if c:
                        unit_red = [a - c * b for a, b in zip(unit_red, new.vec)]
                        for j, rc in new.combo.items():
                            unit_combo[j] = unit_combo.get(j, ZERO) - c * rc
                    if all(v == 0 for v in unit_red):
                        unit_found = True
                        if stop_at_unit:
                            break
        if unit_found:
            return {j: -c for j, c in unit_combo.items() if c}
        return None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def norm_ideal(G: Group, *, deadline: Optional[Deadline] = None) -> NormIdealBasis:
    """Full echelon basis of the subgroup-norm left ideal (no early stop)."""
    basis = NormIdealBasis(G)
    basis.feed_all(stop_at_unit=False, deadline=deadline)
    return basis


def find_norm_relation(G: Group, *, cap: int = NORM_RELATION_CAP,
                       deadline: Optional[Deadline] = None) -> NormRelationOutcome:
    """A verified norm-relation-of-unity certificate, or absence + dimension.

    The left ideal is spanned by {g*N(C)} over prime-order cyclic C only;
    this is lossless because N(H) = (sum of coset reps) * N(C) for any
    prime-order C <= H.
    """
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds norm-relation cap {cap}")
    basis = NormIdealBasis(G)
    combo = basis.feed_all(stop_at_unit=True, deadline=deadline)
    if combo is None:
        return NormRelationOutcome(None, basis.dimension)
    per_subgroup: dict = {}
    for gen_index, coeff in combo.items():
        ci, g = basis.generators[gen_index]
        bucket = per_subgroup.setdefault(ci, GroupAlgebraElement(G))
        bucket.coeffs[g] += coeff
    terms = [(basis.subgroups[ci], coeff) for ci, coeff in per_subgroup.items()
             if not coeff.is_zero()]
    cert = NormRelationCertificate(G, terms)
    assert cert.verify(), "norm-relation certificate failed re-multiplication"
    return NormRelationOutcome(cert, basis.dimension)


def partition_relation(G: Group, parts: list) -> NormRelationCertificate:
    """Certificate from subgroups whose nonidentity parts partition G - {1}:
    sum N(C_i) = (k-1)*1 + N(G), so 1 = (sum N(C_i) - N(G)) / (k-1)."""
    if len(parts) < 2:
        raise NotAPartition("need at least two parts")
    covered: dict = {}
    for P in parts:
        if P.parent is not G:
            raise ParentMismatch("part bound to a different group")
        if len(P) == 1 or len(P) == G.order:
            raise NotAPartition("parts must be proper and nontrivial")
        for g in P.elements:
            if g == 0:
                continue
            if g in covered:
                raise NotAPartition(f"element {g} covered twice")
            covered[g] = True
    if len(covered) != G.order - 1:
        raise NotAPartition("parts do not cover the group")
    k = len(parts)
    c = Fraction(1, k - 1)
    terms = [(P, GroupAlgebraElement.of_element(G, 0, c)) for P in parts]
    terms.append((full_subgroup(G), GroupAlgebraElement.of_element(G, 0, -c)))
    cert = NormRelationCertificate(G, terms)
    assert cert.verify(), "partition relation failed verification"
    return cert
