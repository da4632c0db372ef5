"""Batch command-line front end.

Reports are canonically ordered and byte-stable: identical inputs and flags
produce identical bytes.  Exit codes: 0 clean, 1 when a property or axiom
failure was found (the report carries the witness), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional

from . import decomposition as dec
from . import snf as snfmod
from .classification import corpus, marin_class, prime_power_orders
from .errors import (
    OrderCapExceeded,
    RadicalNotTrivial,
    ReconstructionFailed,
    SpecdecError,
)
from .ggroups import GGroup, find_zero_divisor_pair, is_locally_g_indecomposable
from .groups import SUBGROUP_ENUM_CAP
from .io import load_ggroup, load_matrix, load_ring
from .rings import FiniteRing, p_prime_ideals, two_sided_ideals, verify_ring_topology
from .spectra import (
    Notion,
    domain_local_equivalence,
    radical,
    spectrum,
    verify_axioms,
)

DEFAULT_MAX_ORDER = 512


def _fmt_set(elements) -> str:
    return "{" + ",".join(str(e) for e in elements) + "}"


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _notions(args) -> list[Notion]:
    if getattr(args, "all", False):
        return [Notion.INTERSECTION, Notion.QUOTIENT_DOMAIN]
    return [Notion.parse(args.notion)]


def _inputs_to_ggroups(paths: list[str]) -> list[tuple[str, GGroup]]:
    out = []
    for p in paths:
        if p.startswith("corpus:"):
            n = int(p.split(":", 1)[1])
            for entry in corpus(n):
                out.append((entry.name, GGroup.with_trivial_base(entry.group)))
        else:
            x = load_ggroup(p)
            out.append((x.carrier.name, x))
    return out


def cmd_group(args) -> int:
    for name, x in _inputs_to_ggroups(args.inputs):
        g = x.carrier
        normals = g.normal_subgroups(cap=args.max_order)
        if args.json:
            _emit(json.dumps({
                "name": name, "order": g.order, "abelian": g.is_abelian,
                "base_order": x.base.order,
                "element_orders": list(g.element_orders),
                "normal_subgroups": [list(s.elements) for s in normals]}))
        else:
            _emit(f"group {name}: order {g.order}, "
                  f"{'abelian' if g.is_abelian else 'nonabelian'}, "
                  f"{len(normals)} normal subgroups")
    return 0


def cmd_spectrum(args) -> int:
    for name, x in _inputs_to_ggroups(args.inputs):
        for notion in _notions(args):
            spec = spectrum(x, notion, cap=args.max_order)
            rad = radical(x, notion, cap=args.max_order)
            if args.json:
                _emit(json.dumps({
                    "name": name, "notion": notion.value,
                    "primes": [list(p.elements) for p in spec.primes],
                    "radical": list(rad.elements)}))
            else:
                sets = " ".join(_fmt_set(p.elements) for p in spec.primes)
                _emit(f"spectrum {name} [{notion.value}]: {len(spec.primes)} primes: {sets}")
                _emit(f"  radical: {_fmt_set(rad.elements)}")
    return 0


def cmd_radical(args) -> int:
    for name, x in _inputs_to_ggroups(args.inputs):
        for notion in _notions(args):
            rad = radical(x, notion, cap=args.max_order)
            if args.json:
                _emit(json.dumps({"name": name, "notion": notion.value,
                                  "radical": list(rad.elements)}))
            else:
                _emit(f"radical {name} [{notion.value}]: {_fmt_set(rad.elements)}")
    return 0


def cmd_decompose(args) -> int:
    code = 0
    notion = Notion.parse(args.notion)
    for name, x in _inputs_to_ggroups(args.inputs):
        try:
            cert = dec.decompose(x, notion, cap=args.max_order)
        except RadicalNotTrivial as exc:
            code = max(code, 1)
            if args.json:
                _emit(json.dumps({"name": name, "error": "radical-not-trivial",
                                  "radical": list(exc.radical.elements)}))
            else:
                _emit(f"decompose {name}: radical not trivial "
                      f"{_fmt_set(exc.radical.elements)}")
            continue
        except ReconstructionFailed as exc:
            code = max(code, 1)
            if args.json:
                _emit(json.dumps({"name": name, "error": "reconstruction-failed",
                                  "step": exc.step, "transcript": exc.transcript}))
            else:
                _emit(f"decompose {name}: reconstruction failed at {exc.step}")
            continue
        if args.oracle:
            if x.carrier.order <= dec.ORACLE_CAP:
                facs = dec.brute_force_decompositions(x.carrier)
                cert.oracle_match = dec.oracle_factor_types_match(cert, facs)
                if cert.oracle_match is not True:
                    code = max(code, 1)
            else:
                cert.oracle_match = "skipped"
        if args.json:
            _emit(json.dumps({"name": name, **cert.to_json()}))
        else:
            orders = ",".join(str(f.order) for f in cert.factors)
            _emit(f"decompose {name}: {cert.n} factor(s) of orders [{orders}], verified"
                  + (f", oracle {cert.oracle_match}" if args.oracle else ""))
    return code


def cmd_marin(args) -> int:
    for name, x in _inputs_to_ggroups(args.inputs):
        g = x.carrier
        cls = marin_class(g, cap=args.max_order)
        if args.json:
            payload = cls.to_json()
            _emit(json.dumps({"name": name, "order": g.order, **payload}))
        else:
            _emit(f"marin {name}: {cls.describe()}")
    return 0


def cmd_domain_check(args) -> int:
    code = 0
    for name, x in _inputs_to_ggroups(args.inputs):
        w = find_zero_divisor_pair(x, cap=args.max_order)
        if x.carrier.order <= SUBGROUP_ENUM_CAP:
            loc, _ = is_locally_g_indecomposable(x)
            agree = (w is None) == loc
            loc_out: object = loc
        else:
            agree = "skipped"
            loc_out = "skipped"
        if agree is False:
            code = max(code, 1)
        if args.json:
            _emit(json.dumps({"name": name, "domain": w is None,
                              "witness": w.to_json() if w else None,
                              "locally_indecomposable": loc_out, "agree": agree}))
        else:
            verdict = "domain" if w is None else f"zero divisors ({w.x},{w.y})"
            _emit(f"domain-check {name}: {verdict}, locally-indecomposable {loc_out}, "
                  f"agree {agree}")
    return code


def cmd_snf(args) -> int:
    code = 0
    if args.random:
        rng = random.Random(args.seed)
        failures = []
        for t in range(args.random):
            rows = rng.randint(1, 8)
            cols = rng.randint(1, 8)
            A = [[rng.randint(-1000, 1000) for _ in range(cols)] for _ in range(rows)]
            try:
                snfmod.smith_normal_form(A)
            except AssertionError as exc:
                failures.append({"trial": t, "matrix": A, "error": str(exc)})
        if args.json:
            _emit(json.dumps({"count": args.random, "seed": args.seed,
                              "failures": failures}))
        else:
            _emit(f"snf random batch: {args.random} matrices, "
                  f"{len(failures)} failures (seed {args.seed})")
        return 1 if failures else 0
    for path in args.inputs:
        A = load_matrix(path)
        d = snfmod.smith_normal_form(A)
        if args.json:
            _emit(json.dumps({"U": d.U, "D": d.D, "V": d.V,
                              "diagonal": d.diagonal(),
                              "det_U": snfmod.determinant(d.U),
                              "det_V": snfmod.determinant(d.V),
                              "verified": True}))
        else:
            _emit(f"snf {path}: diagonal {d.diagonal()}")
    return code


def cmd_zspec(args) -> int:
    ideals = snfmod.spec_of_integers(args.n)
    if args.json:
        payload = ideals if isinstance(ideals, str) else [list(t) for t in ideals]
        _emit(json.dumps({"n": args.n, "ideals": payload}))
    else:
        if isinstance(ideals, str):
            _emit(f"zspec {args.n}: all prime-power ideals")
        else:
            body = " ".join(f"({p}^{a})" for p, a in ideals)
            _emit(f"zspec {args.n}: {body if body else '(none)'}")
    return 0


def _inputs_to_rings(paths: list[str]) -> list[FiniteRing]:
    out = []
    for p in paths:
        if p.startswith("mod:"):
            out.append(FiniteRing.modular(int(p.split(":", 1)[1])))
        else:
            out.append(load_ring(p))
    return out


def cmd_ring(args) -> int:
    code = 0
    for ring in _inputs_to_rings(args.inputs):
        ideals = two_sided_ideals(ring)
        primes = p_prime_ideals(ring)
        reports = verify_ring_topology(ring)
        if any(not r.passed for r in reports):
            code = max(code, 1)
        if args.json:
            _emit(json.dumps({
                "name": ring.name, "order": ring.order,
                "ideals": [list(i.elements) for i in ideals],
                "p_primes": [list(i.elements) for i in primes],
                "axioms": [r.to_json() for r in reports]}))
        else:
            _emit(f"ring {ring.name}: {len(ideals)} ideals, {len(primes)} p-primes, "
                  f"axioms {'pass' if code == 0 else 'FAIL'}")
    return code


def cmd_verify(args) -> int:
    code = 0
    for name, x in _inputs_to_ggroups(args.inputs):
        for notion in _notions(args):
            spec = spectrum(x, notion, cap=args.max_order)
            rad = radical(x, notion, cap=args.max_order)
            reports = verify_axioms(x, notion, cap=args.max_order)
            if x.carrier.order <= SUBGROUP_ENUM_CAP:
                reports.append(domain_local_equivalence(x))
            if any(not r.passed for r in reports):
                code = max(code, 1)
            if args.json:
                _emit(json.dumps({
                    "name": name, "notion": notion.value,
                    "primes": [list(p.elements) for p in spec.primes],
                    "radical": list(rad.elements),
                    "axioms": [r.to_json() for r in reports]}))
            else:
                bad = [r for r in reports if not r.passed]
                verdict = "pass" if not bad else "FAIL " + ",".join(r.tag for r in bad)
                _emit(f"verify {name} [{notion.value}]: {verdict}")
                for r in bad:
                    _emit(f"  {r.tag} witness: {json.dumps(r.witness)}")
    return code


def cmd_corpus(args) -> int:
    for entry in corpus(args.n):
        if args.json:
            _emit(json.dumps({"name": entry.name, "order": entry.group.order,
                              "tags": list(entry.tags)}))
        else:
            _emit(f"{entry.name} order {entry.group.order} [{','.join(entry.tags)}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specdec",
        description="Spectra, radicals and direct-product decompositions of "
                    "finite groups and rings, with brute-force verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True, notion=True, allflag=False):
        p.add_argument("--json", action="store_true", help="emit JSON lines")
        p.add_argument("--max-order", type=int,
                       default=int(os.environ.get("SPECDEC_MAX_ORDER", DEFAULT_MAX_ORDER)),
                       help="largest carrier order to process")
        if notion:
            p.add_argument("--notion", choices=[n.value for n in Notion],
                           default=Notion.INTERSECTION.value)
        if allflag:
            p.add_argument("--all", action="store_true",
                           help="run every notion, not just --notion")
        if inputs:
            p.add_argument("inputs", nargs="+",
                           help="JSON files, or corpus:<max_order>")

    p = sub.add_parser("group", help="validate and summarize group inputs")
    common(p, notion=False)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("spectrum", help="prime ideals and radical")
    common(p, allflag=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("radical", help="intersection of all primes")
    common(p, allflag=True)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("decompose", help="direct-product decomposition certificate")
    common(p)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the brute-force factorization oracle")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("marin", help="classify strongly indecomposable groups")
    common(p, notion=False)
    p.set_defaults(func=cmd_marin)

    p = sub.add_parser("domain-check", help="zero-divisor scan and local splitting")
    common(p, notion=False)
    p.set_defaults(func=cmd_domain_check)

    p = sub.add_parser("snf", help="Smith normal form of integer matrices")
    p.add_argument("--json", action="store_true")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="run a randomized verification batch instead of reading files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("inputs", nargs="*", help="JSON matrix files")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("zspec", help="prime-power ideals of the integers containing (n)")
    p.add_argument("--json", action="store_true")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_zspec)

    p = sub.add_parser("ring", help="ideals, p-primes and topology of a finite ring")
    p.add_argument("--json", action="store_true")
    p.add_argument("inputs", nargs="+", help="ring JSON files or mod:<m>")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("verify", help="run the axiom verifier")
    common(p, allflag=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list the built-in group corpus")
    p.add_argument("--json", action="store_true")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (SpecdecError, OrderCapExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BrokenPipeError:
        return 0
    return code


if __name__ == "__main__":
    sys.exit(main())
