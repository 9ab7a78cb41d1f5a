"""Command-line front end: group-spec mini-language, analysis commands,
JSON/text reports, and the order-210 survey."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from . import groups as groups_mod
from .errors import (
    BadConductor,
    BadParams,
    BadSize,
    CapExceeded,
    DeadlineExceeded,
    FreerepError,
    NotAGroup,
    NotFreelyRepresentable,
    ParseError,
)
from .groups import Deadline, Group, is_isomorphic
from .classify import classify, mcc_subgroup
from .normrel import NORM_RELATION_CAP, find_norm_relation
from .represent import build_free_representation, verify_free
from .sl2census import census_report


# -- group-spec grammar -------------------------------------------------------
#
#   spec := atom | "prod(" spec "," spec ")" | "sd(" int "," int "," int ")"
#   atom := "C" int | "D" int | "Q" int | "SL2(" prime ")"
#         | "2T" | "2O" | "2I" | "2D" int | "quat(" qlist ")"
#
# Case-insensitive.  Quaternion literals: q(w,x,y,z) with components
# a, a/b, a/b*r2, a/b*r5 (r2 = sqrt 2, r5 = sqrt 5).


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple = ()
    children: tuple = ()

    def canonical(self) -> str:
        if self.kind == "prod":
            return f"prod({self.children[0].canonical()},{self.children[1].canonical()})"
        if self.kind == "sd":
            return "sd({},{},{})".format(*self.params)
        if self.kind in ("C", "D", "Q", "2D"):
            return f"{self.kind}{self.params[0]}"
        if self.kind == "SL2":
            return f"SL2({self.params[0]})"
        if self.kind in ("2T", "2O", "2I"):
            return self.kind
        if self.kind == "quat":
            return "quat({})".format(",".join(_quat_literal(q)
                                              for q in self.params))
        raise ParseError(f"unknown spec kind {self.kind}", 0)

    def build(self) -> Group:
        from . import constructors as cons

        if self.kind == "prod":
            return cons.direct_product(self.children[0].build(),
                                       self.children[1].build())
        if self.kind == "sd":
            return cons.sd(*self.params)
        if self.kind == "C":
            return cons.cyclic(self.params[0])
        if self.kind == "D":
            return cons.dihedral(self.params[0])
        if self.kind == "Q":
            return cons.generalized_quaternion(self.params[0])
        if self.kind == "SL2":
            return cons.sl2(self.params[0])
        if self.kind in ("2T", "2O", "2I"):
            return cons.binary_polyhedral(self.kind)
        if self.kind == "2D":
            return cons.binary_polyhedral("2D", self.params[0])
        if self.kind == "quat":
            from .quaternions import finite_quaternion_group

            return finite_quaternion_group(list(self.params))
        raise ParseError(f"unknown spec kind {self.kind}", 0)


def _quat_component(c) -> str:
    parts = []
    if c.a:
        parts.append(str(c.a))
    if c.b:
        parts.append(f"{c.b}*r{c.d}")
    if not parts:
        return "0"
    return "+".join(parts)


def _quat_literal(q) -> str:
    return "q({},{},{},{})".format(*(_quat_component(c)
                                     for c in (q.w, q.x, q.y, q.z)))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.peek().isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek().lower() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.peek().isalnum():
            self.pos += 1
        return self.text[start:self.pos].lower()

    def spec(self) -> GroupSpec:
        self.skip_ws()
        rest = self.text[self.pos:].lower()
        if rest.startswith("prod("):
            self.pos += 5
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return GroupSpec("prod", children=(a, b))
        if rest.startswith("sd("):
            self.pos += 3
            m = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return GroupSpec("sd", params=(m, n, r))
        if rest.startswith("sl2("):
            self.pos += 4
            p = self.integer()
            self.expect(")")
            return GroupSpec("SL2", params=(p,))
        if rest.startswith("quat("):
            self.pos += 5
            quats = [self.quaternion()]
            self.skip_ws()
            while self.peek() == ",":
                self.pos += 1
                quats.append(self.quaternion())
                self.skip_ws()
            self.expect(")")
            return GroupSpec("quat", params=tuple(quats))
        if rest.startswith("2t"):
            self.pos += 2
            return GroupSpec("2T")
        if rest.startswith("2o"):
            self.pos += 2
            return GroupSpec("2O")
        if rest.startswith("2i"):
            self.pos += 2
            return GroupSpec("2I")
        if rest.startswith("2d"):
            self.pos += 2
            return GroupSpec("2D", params=(self.integer(),))
        head = self.peek().lower()
        if head in ("c", "d", "q"):
            self.pos += 1
            n = self.integer()
            if head == "q" and (n < 8 or n & (n - 1)):
                raise self.error("Q requires a power of 2 that is >= 8")
            return GroupSpec(head.upper(), params=(n,))
        raise self.error("expected a group spec")

    def quaternion(self):
        from .quaternions import Quaternion

        self.skip_ws()
        if self.word() != "q":
            raise self.error("expected quaternion literal q(w,x,y,z)")
        self.expect("(")
        comps = [self.component()]
        for _ in range(3):
            self.expect(",")
            comps.append(self.component())
        self.expect(")")
        d = 1
        for c in comps:
            if c.d != 1:
                if d not in (1, c.d):
                    raise self.error("mixed quadratic fields in quaternion")
                d = c.d
        return Quaternion.of(*comps, d=d)

    def component(self):
        from .quaternions import QuadFieldElement

        self.skip_ws()
        value = self._signed_fraction()
        self.skip_ws()
        if self.peek() == "*":
            self.pos += 1
            tag = self.word()
            if tag not in ("r2", "r5"):
                raise self.error("expected r2 or r5")
            d = int(tag[1])
            return QuadFieldElement.of(0, d, value)
        return QuadFieldElement.of(value)

    def _signed_fraction(self) -> Fraction:
        num = self.integer()
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                raise self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def finish(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")


def parse_group_spec(text: str) -> GroupSpec:
    parser = _Parser(text)
    spec = parser.spec()
    parser.finish()
    return spec


# -- the order-210 survey -----------------------------------------------------

# expected mu-orders per (A-order, canonical class representative r)
_SURVEY_EXPECTED = {
    (1, 1): 210, (3, 2): 105, (5, 4): 105, (7, 6): 105, (7, 2): 70,
    (7, 3): 35, (15, 14): 105, (21, 20): 105, (35, 34): 105, (35, 4): 35,
    (35, 19): 35, (105, 104): 105,
}


def survey210() -> dict:
    """Reproduce the classification of the 12 groups of order 210."""
    from .constructors import cyclic, sd

    cases = []  # (m, sorted tuple of merged r values)
    for m in (1, 3, 5, 7, 15, 21, 35, 105):
        n = 210 // m
        if m == 1:
            cases.append((1, (1,)))
            continue
        valid = [r for r in range(2, m)
                 if gcd(r, m) == 1 and pow(r, n, m) == 1 and gcd(r - 1, m) == 1]
        merged = []
        seen = set()
        for r in valid:
            if r in seen:
                continue
            rinv = pow(r, -1, m)
            cls = tuple(sorted({r, rinv}))
            seen.update(cls)
            merged.append(cls)
        cases.extend((m, cls) for cls in merged)

    rows = []
    built = {}
    for m, cls in cases:
        G = cyclic(210) if m == 1 else sd(m, 210 // m, cls[0])
        built[(m, cls)] = G
        mu = mcc_subgroup(G)
        from .classify import is_freely_representable

        fr = is_freely_representable(G)
        expected = _SURVEY_EXPECTED.get((m, cls[0]))
        # duplicates merged by r <-> r^-1 really are isomorphic
        if len(cls) == 2:
            twin = sd(m, 210 // m, cls[1])
            assert is_isomorphic(G, twin) is not None, (m, cls)
        rows.append({
            "A_order": m,
            "r_class": list(cls),
            "mu_order": len(mu),
            "freely_representable": fr.answer,
            "expected_mu_order": expected,
            "matches_expected": expected == len(mu),
        })

    fingerprints = [built[key].fingerprint() for key in built]
    distinct = len(set(fingerprints))
    return {
        "class_count": len(rows),
        "distinct_fingerprints": distinct,
        "rows": rows,
        "all_match": all(r["matches_expected"] for r in rows)
        and len(rows) == 12 and distinct == 12
        and sum(r["freely_representable"] for r in rows) == 1,
    }


# -- commands -------------------------------------------------------------------


def cmd_analyze(spec_text: str, as_json: bool, deadline=None) -> tuple:
    spec = parse_group_spec(spec_text)
    G = spec.build()
    report = classify(G)
    data = report.to_json()
    data["group_spec"] = spec.canonical()
    if as_json:
        return 0, json.dumps(data, indent=2)
    lines = [
        f"group {spec.canonical()} of order {G.order}",
        "sylow profile: " + ", ".join(
            f"{p}: {c.kind}({c.order})"
            for p, c in sorted(report.sylow_profile.items())),
        f"sylow-cyclic: {report.is_sylow_cyclic}; "
        f"sylow-cycloidal: {report.is_sylow_cycloidal}",
        f"odd core order: {len(report.odd_core)}",
        f"cycloidal type: {report.cycloidal_type}",
        f"mu(G) order: {len(report.mcc) if report.mcc else '-'}",
        f"unique involution: {report.unique_involution}",
        f"semiprime-cyclic: {report.semiprime_cyclic}",
        "freely representable: "
        + ("yes" if report.fr_verdict.answer else "no")
        + f" ({report.fr_verdict.criterion})",
    ]
    if report.fr_verdict.witness is not None:
        lines.append(f"witness subgroup of order {len(report.fr_verdict.witness)}")
    return 0, "\n".join(lines)


def cmd_norm_relation(spec_text: str, as_json: bool, cap: Optional[int],
                      deadline=None) -> tuple:
    spec = parse_group_spec(spec_text)
    G = spec.build()
    out = find_norm_relation(G, cap=cap or NORM_RELATION_CAP, deadline=deadline)
    if out.certificate is None:
        if as_json:
            return 0, json.dumps({
                "group_spec": spec.canonical(),
                "certificate": None,
                "ideal_dimension": out.ideal_dimension,
                "freely_representable": True,
            }, indent=2)
        return 0, (f"none (freely representable); "
                   f"norm ideal has dimension {out.ideal_dimension} < {G.order}")
    cert = out.certificate
    if as_json:
        return 0, json.dumps(cert.to_json(spec.canonical()), indent=2)
    lines = [f"norm relation of unity for {spec.canonical()} "
             f"({len(cert.terms)} terms, verified={cert.verified}):"]
    for sub, coeff in cert.terms:
        lines.append(f"  [{coeff!r}] * N(subgroup of order {len(sub)})")
    return 0, "\n".join(lines)


def cmd_represent(spec_text: str, as_json: bool, deadline=None) -> tuple:
    spec = parse_group_spec(spec_text)
    G = spec.build()
    try:
        rep = build_free_representation(G)
    except NotFreelyRepresentable as exc:
        if as_json:
            return 0, json.dumps({"group_spec": spec.canonical(),
                                  "representation": None,
                                  "reason": str(exc)}, indent=2)
        return 0, f"not freely representable: {exc}"
    if rep is None:
        if as_json:
            return 0, json.dumps({"group_spec": spec.canonical(),
                                  "representation": None,
                                  "reason": "unsupported shape"}, indent=2)
        return 0, "freely representable, but no constructive route (unsupported shape)"
    report = verify_free(rep)
    assert report.free
    if as_json:
        data = rep.to_json(spec.canonical())
        data["verified_free"] = report.free
        return 0, json.dumps(data, indent=2)
    return 0, (f"free representation of degree {rep.degree} over "
               f"Q(zeta_{rep.conductor}); all det(rho(g)-I) nonzero, "
               f"all subgroup norm sums vanish")


def cmd_census(p: int, as_json: bool, cap: Optional[int]) -> tuple:
    limit = cap if cap is not None else 2200
    order = (p - 1) * p * (p + 1)
    if order > limit:
        raise CapExceeded(
            f"|SL2(F_{p})| = {order} exceeds cap {limit}; pass --cap to opt in")
    data = census_report(p)
    if as_json:
        return 0, json.dumps(data, indent=2)
    lines = [f"SL2(F_{p}): order {data['group_order']} "
             f"(formula holds: {data['order_formula_holds']}, "
             f"unique involution: {data['unique_involution']})",
             f"{'m':>4} {'predicted':>10} {'observed':>10} match"]
    for row in data["rows"]:
        lines.append(f"{row['m']:>4} {row['predicted']:>10} "
                     f"{row['observed']:>10} {str(row['match']).lower()}")
    lines.append(f"all match: {data['all_match']}")
    return 0, "\n".join(lines)


def cmd_survey210(as_json: bool) -> tuple:
    data = survey210()
    if as_json:
        return 0, json.dumps(data, indent=2)
    lines = [f"{'|A|':>4} {'r class':>10} {'mu order':>9} {'FR':>4} match"]
    for row in data["rows"]:
        lines.append(
            f"{row['A_order']:>4} {str(row['r_class']):>10} "
            f"{row['mu_order']:>9} {'yes' if row['freely_representable'] else 'no':>4} "
            f"{str(row['matches_expected']).lower()}")
    lines.append(f"classes: {data['class_count']}; all match: {data['all_match']}")
    return 0, "\n".join(lines)


def _structured_error(kind: str, exc: Exception, offending: str) -> str:
    return json.dumps({"kind": kind, "detail": str(exc),
                       "offending_input": offending})


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="freerep",
        description="Decide free representability, emit norm-relation "
                    "certificates, and build exact free representations.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--cap", type=int, default=None,
                        help="override enumeration caps")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for sampled associativity checks")
    parser.add_argument("--deadline", type=float, default=None,
                        help="soft time limit in seconds (enforced on the "
                             "norm-relation search and subgroup enumeration)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "norm-relation", "represent"):
        c = sub.add_parser(name)
        c.add_argument("spec")
    c = sub.add_parser("census")
    c.add_argument("p", type=int)
    sub.add_parser("survey210")

    args = parser.parse_args(argv)
    groups_mod.DEFAULT_SEED = args.seed
    deadline = Deadline(args.deadline) if args.deadline else None

    try:
        if args.command == "analyze":
            code, text = cmd_analyze(args.spec, args.json, deadline)
        elif args.command == "norm-relation":
            code, text = cmd_norm_relation(args.spec, args.json, args.cap,
                                           deadline)
        elif args.command == "represent":
            code, text = cmd_represent(args.spec, args.json, deadline)
        elif args.command == "census":
            code, text = cmd_census(args.p, args.json, args.cap)
        else:
            code, text = cmd_survey210(args.json)
    except (CapExceeded, DeadlineExceeded) as exc:
        print(_structured_error(type(exc).__name__, exc,
                                getattr(args, "spec", args.command)),
              file=sys.stderr)
        return 2
    except (ParseError, BadParams, BadSize, NotAGroup, BadConductor,
            FreerepError) as exc:
        print(_structured_error(type(exc).__name__, exc,
                                getattr(args, "spec", args.command)),
              file=sys.stderr)
        return 1
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
