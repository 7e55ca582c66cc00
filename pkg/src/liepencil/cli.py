"""Command-line front end tying the engine together.

Subcommands: classify, derive, pencil, index, torsion, nijenhuis-check,
exp-check, pc-check, example, report.  All file formats are the JSON
interchange of the io module; reports print as "key: value" text or as a JSON
document with deterministic field order.  Exit codes: 0 all checks pass,
1 a mathematical check failed (witness in the report), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import constructions as cons
from . import io as iomod
from . import nijenhuis as nij
from . import poisson as pois
from .analysis import lie_centre, lie_index, lower_central_series
from .exact import RatMatrix, format_rat, parse_rat
from .tensors import (IrrationalEigenvalues, TAG_DERIVATION, TAG_NEAR,
                      TAG_NOT_NEAR, TAG_QUASI, TAG_SCALAR, check_jacobi,
                      check_skew, classify_operator, derived, derived_iter,
                      is_lie, normalize_pencil)

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_INPUT = 2

SEED_ENV = "LIEPENCIL_SEED"

# fixed pencil sample points (alpha, beta) used by `pencil` and `report`
MEMBER_SAMPLES = ((1, 1), (1, 2), (2, 1), (1, -1), (3, 5))


class InputProblem(Exception):
    pass


class CheckProblem(Exception):
    """A mathematical check failed; carries the partial report."""

    def __init__(self, message, doc=None):
        self.doc = doc
        super().__init__(message)


def _emit(doc, args):
    if getattr(args, "json", False):
        print(json.dumps(doc, indent=2))
    else:
        _print_text(doc)


def _print_text(doc, indent=0):
    pad = "  " * indent
    for key, value in doc.items():
        if isinstance(value, dict):
            print("%s%s:" % (pad, key))
            _print_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print("%s%s:" % (pad, key))
            for item in value:
                _print_text(item, indent + 1)
                if item is not value[-1]:
                    print("%s  -" % pad)
        else:
            print("%s%s: %s" % (pad, key, _scalar_text(value)))


def _scalar_text(value):
    if isinstance(value, list):
        return "[" + ", ".join(str(x) for x in value) + "]"
    if value is None:
        return "-"
    return str(value)


def _load_algebra(path):
    tensor, meta = iomod.load_algebra(path)
    return tensor, meta


def _load_operator(path, dim):
    op = iomod.load_operator(path)
    if op.nrows != dim:
        raise InputProblem("operator dimension %d does not match algebra dimension %d"
                           % (op.nrows, dim))
    return op


def _parse_rationals(text, what):
    try:
        return [parse_rat(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputProblem("cannot parse %s %r" % (what, text))


def _parse_ints(text, what):
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputProblem("cannot parse %s %r" % (what, text))


def _env_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputProblem("%s must be an integer, got %r" % (SEED_ENV, raw))


def _classify_doc(tensor, op):
    act = classify_operator(tensor, op)
    doc = {
        "tag": act.tag,
        "a": format_rat(act.a) if act.a is not None else None,
        "b": format_rat(act.b) if act.b is not None else None,
        "mode": None,
        "degenerate_lines": None,
    }
    if act.tag == TAG_SCALAR:
        doc["scalar"] = format_rat(act.scalar)
    norm = None
    if act.tag in (TAG_QUASI, TAG_NEAR):
        try:
            norm = normalize_pencil(act)
            doc["mode"] = norm.mode
            doc["degenerate_lines"] = len(norm.degenerate_lines)
        except IrrationalEigenvalues as exc:
            doc["mode"] = "irrational-eigenvalues"
            doc["note"] = str(exc)
    sk, _ = check_skew(tensor)
    jc, _ = check_jacobi(tensor)
    checks = {"input_skew": sk, "input_jacobi": jc}
    if not act.derived.is_zero():
        checks["derived_skew"] = check_skew(act.derived)[0]
        checks["derived_jacobi"] = check_jacobi(act.derived)[0]
    doc["jacobi_checks"] = checks
    return act, norm, doc


def cmd_classify(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    _, _, doc = _classify_doc(tensor, op)
    _emit(doc, args)
    return EXIT_OK


def cmd_derive(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    result = derived_iter(tensor, op, args.power)
    doc = {
        "power": args.power,
        "zero": result.is_zero(),
        "skew": result.is_skew(),
        "lie": is_lie(result),
        "entries": [[i, j, k, format_rat(c)] for i, j, k, c in result.support()
                    if not result.is_skew() or i < j],
    }
    if args.out:
        if not result.is_skew():
            raise InputProblem("derived tensor is not skew; cannot write an algebra file")
        iomod.save_algebra(result, args.out,
                           metadata={"derived_power": args.power})
        doc["written"] = args.out
    _emit(doc, args)
    return EXIT_OK


def cmd_pencil(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    act, norm, doc = _classify_doc(tensor, op)
    if act.tag == TAG_NOT_NEAR:
        doc["error"] = "second derived bracket leaves the pencil"
        _emit(doc, args)
        return EXIT_CHECK
    if act.tag in (TAG_DERIVATION, TAG_SCALAR):
        doc["note"] = "pencil is a single line; nothing to normalize"
        _emit(doc, args)
        return EXIT_OK
    if norm is None:
        _emit(doc, args)    # irrational eigenvalues: honest refusal
        return EXIT_CHECK
    doc["shift"] = format_rat(norm.shift)
    doc["eigenvalues"] = [format_rat(v) for v in norm.eigenvalues]
    doc["normalized_b"] = format_rat(norm.b)
    members = []
    all_ok = True
    for alpha, beta in MEMBER_SAMPLES:
        member = tensor.scale(Fraction(alpha)) + norm.derived.scale(Fraction(beta))
        ok = is_lie(member)
        all_ok = all_ok and ok
        members.append({"alpha": alpha, "beta": beta, "lie": ok})
    lines_ok = all(is_lie(line) for line in norm.degenerate_lines)
    doc["members"] = members
    doc["degenerate_lines_lie"] = lines_ok
    _emit(doc, args)
    return EXIT_OK if all_ok and lines_ok else EXIT_CHECK


def cmd_index(args):
    tensor, _ = _load_algebra(args.algebra)
    if not is_lie(tensor):
        raise InputProblem("index needs a Lie algebra file")
    rep = lie_index(tensor, mode=args.mode, samples=args.samples,
                    seed=_env_seed(args), max_exact_dim=args.max_exact_dim)
    doc = {
        "dim": rep.dim,
        "rank": rep.rank,
        "index": rep.index,
        "method": rep.method,
    }
    if rep.method == "probabilistic":
        doc["samples"] = rep.samples
        doc["note"] = rep.note
    _emit(doc, args)
    return EXIT_OK


def cmd_torsion(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    tors = nij.torsion(tensor, op)
    doc = {
        "zero": tors.is_zero(),
        "entries": [[i, j, k, format_rat(c)] for i, j, k, c in tors.support()
                    if not tors.is_skew() or i < j],
    }
    if op.is_diagonal():
        doc["eigenvalue_witnesses"] = [
            [i, j, k, format_rat(c)]
            for i, j, k, c in nij.diagonal_torsion_witnesses(tensor, op)]
    if args.out:
        if not tors.is_skew():
            raise InputProblem("torsion tensor is not skew; cannot write an algebra file")
        iomod.save_algebra(tors, args.out, metadata={"torsion": "true"})
        doc["written"] = args.out
    _emit(doc, args)
    return EXIT_OK


def cmd_nijenhuis_check(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    flat, witness = nij.is_nijenhuis(tensor, op)
    doc = {"nijenhuis": flat, "witness": list(witness) if witness else None}
    if not flat and op.is_diagonal():
        doc["eigenvalue_witnesses"] = [
            [i, j, k, format_rat(c)]
            for i, j, k, c in nij.diagonal_torsion_witnesses(tensor, op)]
    if flat:
        rep = nij.check_N_properties(tensor, op, depth=args.depth)
        doc["depth"] = args.depth
        doc["powers"] = [{
            "k": st.k,
            "power_is_nijenhuis": st.power_is_nijenhuis,
            "iterate_matches_power": st.iterate_matches_power,
            "iterate_is_lie": st.iterate_is_lie,
        } for st in rep.steps]
        doc["pairwise_compatible"] = rep.pairwise_compatible
        doc["ok"] = rep.ok
        _emit(doc, args)
        return EXIT_OK if rep.ok else EXIT_CHECK
    _emit(doc, args)
    return EXIT_CHECK


def cmd_exp_check(args):
    tensor, _ = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    points = (_parse_rationals(args.points, "points") if args.points else None)
    if args.kind == "nijenhuis":
        if args.certified:
            rep = nij.certified_exp_identity_nijenhuis(tensor, op, points)
        else:
            if not points:
                raise InputProblem("give --points or --certified")
            rep = None
            checked = []
            for s in points:
                rep = nij.exp_identity_nijenhuis(tensor, op, s)
                checked.append(s)
                if not rep.ok:
                    break
            rep.points = checked
    else:
        if args.m is None:
            raise InputProblem("--kind near requires --m")
        if not points:
            raise InputProblem("--kind near requires --points")
        rep = None
        checked = []
        for v in points:
            rep = nij.exp_identity_near(tensor, op, args.m, v)
            checked.append(v)
            if not rep.ok:
                break
        rep.points = checked
    doc = {
        "kind": args.kind,
        "ok": rep.ok,
        "precondition_ok": rep.precondition_ok,
        "points_checked": [format_rat(Fraction(p)) for p in rep.points],
        "witness": list(rep.witness) if rep.witness else None,
    }
    _emit(doc, args)
    return EXIT_OK if rep.ok and rep.precondition_ok else EXIT_CHECK


def _pc_parts(args, tensor):
    struct = pois.from_tensor(tensor)
    if args.gamma:
        gamma = _parse_rationals(args.gamma, "covector")
        if len(gamma) != tensor.dim:
            raise InputProblem("covector length mismatch")
        operator = pois.directional(gamma)
        op_desc = "directional"
    else:
        if not args.operator:
            raise InputProblem("pc-check needs --operator or --gamma")
        op = _load_operator(args.operator, tensor.dim)
        operator = pois.lifted(op)
        op_desc = "lifted"
    if args.seed_file:
        seeds = iomod.load_seeds(args.seed_file, tensor.dim)
        seed_desc = args.seed_file
    else:
        seeds = pois.centre_candidates(struct, args.degree_bound)
        seed_desc = "centre candidates up to degree %d" % args.degree_bound
    if not seeds:
        raise InputProblem("no seeds: empty centre up to degree %d" % args.degree_bound)
    return struct, operator, op_desc, seeds, seed_desc


def cmd_pc_check(args):
    tensor, _ = _load_algebra(args.algebra)
    if not is_lie(tensor):
        raise InputProblem("pc-check needs a Lie algebra file")
    struct, operator, op_desc, seeds, seed_desc = _pc_parts(args, tensor)
    try:
        family = pois.pc_generate(struct, operator, seeds)
    except pois.SeedNotCentral as exc:
        doc = {
            "operator": op_desc,
            "seeds": seed_desc,
            "error": str(exc),
            "seed_index": exc.seed_index,
            "witness_generator": exc.var_index,
        }
        _emit(doc, args)
        return EXIT_CHECK
    cert = pois.pc_verify(family, struct)
    doc = {
        "operator": op_desc,
        "seeds": seed_desc,
        "family_size": len(family.generators),
        "provenance": family.provenance,
        "generators": [str(g) for g in family.generators],
        "commutes": cert.ok,
        "witness": list(cert.witness) if cert.witness else None,
    }
    _emit(doc, args)
    return EXIT_OK if cert.ok else EXIT_CHECK


def _write_example(args, written, name, saver):
    path = os.path.join(args.out_dir, name)
    saver(path)
    written.append(path)


def cmd_example(args):
    name = args.name
    params = list(args.params)
    written = []
    os.makedirs(args.out_dir, exist_ok=True)

    def take_family_n():
        if len(params) < 2:
            raise InputProblem("expected FAMILY N")
        family = params[0]
        try:
            n = int(params[1])
        except ValueError:
            raise InputProblem("N must be an integer, got %r" % params[1])
        return family, n

    try:
        if name in ("gl", "sl", "so", "sp"):
            if len(params) != 1:
                raise InputProblem("expected: example %s N" % name)
            n = int(params[0])
            tensor = cons.build_classical(name, n)
            _write_example(args, written, "%s%d.json" % (name, n),
                          lambda p: iomod.save_algebra(tensor, p,
                                                       metadata={"family": name}))
        elif name == "grading":
            family, n = take_family_n()
            if not args.weights or args.modulus is None:
                raise InputProblem("grading needs --weights and --modulus")
            weights = _parse_ints(args.weights, "weights")
            tensor = cons.build_classical(family, n)
            spec = cons.GradingSpec(weights=tuple(weights), kind="periodic",
                                    modulus=args.modulus)
            ok, witness = spec.validate(tensor)
            if not ok:
                raise InputProblem("weights do not grade the algebra (witness %r)"
                                   % (witness,))
            op = cons.grading_operator(spec)
            meta = {"family": family, "modulus": str(args.modulus),
                    "weights": ",".join(str(w) for w in weights)}
            _write_example(args, written, "%s%d.json" % (family, n),
                          lambda p: iomod.save_algebra(tensor, p, metadata=meta))
            _write_example(args, written, "%s%d-grading-op.json" % (family, n),
                          lambda p: iomod.save_operator(op, p))
        elif name == "nilpotent-square":
            family, n = take_family_n()
            if not args.partition:
                raise InputProblem("nilpotent-square needs --partition")
            partition = tuple(_parse_ints(args.partition, "partition"))
            tensor = cons.build_classical(family, n)
            triple = cons.sl2_complete(family, n, partition)
            op, report = cons.nilpotent_square(tensor, triple.e)
            _write_example(args, written, "%s%d.json" % (family, n),
                          lambda p: iomod.save_algebra(tensor, p,
                                                       metadata={"family": family}))
            _write_example(args, written, "%s%d-nilsquare-op.json" % (family, n),
                          lambda p: iomod.save_operator(op, p))
            _write_example(args, written, "%s%d-nilsquare-derived.json" % (family, n),
                          lambda p: iomod.save_algebra(report.derived, p))
            diag = {
                "ad_e_cubed_zero": report.ad_e_cubed_zero,
                "d_squared_zero": report.d_squared_zero,
                "image_bracket_zero": report.image_bracket_zero,
                "image_in_kernel": report.image_in_kernel,
                "formula_check": report.formula_check,
            }
            doc = {"written": written, "diagnostics": diag}
            _emit(doc, args)
            return EXIT_OK
        elif name == "splitting":
            family, n = take_family_n()
            if not args.sub or not args.complement:
                raise InputProblem("splitting needs --sub and --complement index lists")
            part_a = _parse_ints(args.sub, "sub indices")
            part_b = _parse_ints(args.complement, "complement indices")
            tensor = cons.build_classical(family, n)
            d1, d2 = cons.splitting_operators(tensor, part_a, part_b)
            _write_example(args, written, "%s%d.json" % (family, n),
                          lambda p: iomod.save_algebra(tensor, p,
                                                       metadata={"family": family}))
            _write_example(args, written, "%s%d-proj-sub.json" % (family, n),
                          lambda p: iomod.save_operator(d1, p))
            _write_example(args, written, "%s%d-proj-complement.json" % (family, n),
                          lambda p: iomod.save_operator(d2, p))
        elif name == "quasi-grading":
            family, n = take_family_n()
            if not args.weights or args.modulus is None:
                raise InputProblem("quasi-grading needs --weights and --modulus")
            weights = _parse_ints(args.weights, "weights")
            tensor = cons.build_classical(family, n)
            spec = cons.GradingSpec(weights=tuple(weights), kind="periodic",
                                    modulus=args.modulus)
            ok, witness = spec.validate(tensor)
            if not ok:
                raise InputProblem("weights do not grade the algebra (witness %r)"
                                   % (witness,))
            ext, ext_spec, op = cons.quasi_grading_extension(tensor, spec)
            meta = {"family": family,
                    "weights": ",".join(str(w) for w in ext_spec.weights)}
            _write_example(args, written, "%s%d-quasi-extension.json" % (family, n),
                          lambda p: iomod.save_algebra(ext, p, metadata=meta))
            _write_example(args, written, "%s%d-quasi-weight-op.json" % (family, n),
                          lambda p: iomod.save_operator(op, p))
        else:
            raise InputProblem("unknown example %r" % name)
    except ValueError as exc:
        raise InputProblem(str(exc))
    _emit({"written": written}, args)
    return EXIT_OK


def cmd_report(args):
    tensor, meta = _load_algebra(args.algebra)
    op = _load_operator(args.operator, tensor.dim)
    checks = []
    diagnostics = {}

    def gate(name, ok, **detail):
        entry = {"name": name, "ok": ok}
        entry.update(detail)
        checks.append(entry)
        return ok

    sk, skw = check_skew(tensor)
    jc, jcw = check_jacobi(tensor)
    gate("input-lie", sk and jc,
         witness=list(skw or jcw) if not (sk and jc) else None)

    act, norm, class_doc = _classify_doc(tensor, op)
    gate("classification", act.tag != TAG_NOT_NEAR, tag=act.tag,
         a=class_doc["a"], b=class_doc["b"], mode=class_doc["mode"])

    if act.tag in (TAG_QUASI, TAG_NEAR):
        members_ok = True
        witness = None
        source = norm.derived if norm is not None else act.derived
        for alpha, beta in MEMBER_SAMPLES:
            member = tensor.scale(Fraction(alpha)) + source.scale(Fraction(beta))
            if not is_lie(member):
                members_ok = False
                witness = [alpha, beta]
                break
        gate("pencil-members-lie", members_ok, witness=witness)
        if norm is not None:
            gate("degenerate-lines-lie",
                 all(is_lie(line) for line in norm.degenerate_lines),
                 count=len(norm.degenerate_lines))

    if sk and jc:
        seed = _env_seed(args)
        rep_p = lie_index(tensor, mode="prob", seed=seed)
        detail = {"dim": rep_p.dim, "index": rep_p.index, "method": rep_p.method}
        if tensor.dim <= args.max_exact_dim:
            rep_e = lie_index(tensor, mode="exact", max_exact_dim=args.max_exact_dim)
            detail["index_exact"] = rep_e.index
            gate("index-modes-agree", rep_p.index == rep_e.index, **detail)
        else:
            gate("index-probabilistic", True, **detail)

    split = nij.torsion_decomposition(tensor, op)
    gate("torsion-decomposition", split.ok)

    flat, wit = nij.is_nijenhuis(tensor, op)
    diagnostics["nijenhuis"] = flat
    if not flat:
        diagnostics["nijenhuis_witness"] = list(wit)

    if act.tag in (TAG_QUASI, TAG_NEAR) and is_lie(act.derived):
        series = lower_central_series(act.derived)
        diagnostics["derived_lower_central_series"] = series
        centre_dim = len(lie_centre(act.derived))
        diagnostics["derived_centre_dim"] = centre_dim
        if series[-1] == 0 and not act.derived.is_zero():
            di = lie_index(act.derived, mode="prob", seed=_env_seed(args))
            diagnostics["derived_index"] = di.index
            diagnostics["derived_index_equals_centre"] = di.index == centre_dim

    if sk and jc and (args.seed_file or args.pc):
        try:
            struct, operator, op_desc, seeds, seed_desc = _pc_parts(args, tensor)
            family = pois.pc_generate(struct, operator, seeds)
            cert = pois.pc_verify(family, struct)
            gate("pc-family-commutes", cert.ok, operator=op_desc,
                 size=len(family.generators),
                 witness=list(cert.witness) if cert.witness else None)
            diagnostics["pc_generators"] = [str(g) for g in family.generators]
        except pois.SeedNotCentral as exc:
            gate("pc-family-commutes", False, error=str(exc))

    all_ok = all(c["ok"] for c in checks)
    doc = {
        "algebra": args.algebra,
        "operator": args.operator,
        "ok": all_ok,
        "checks": checks,
        "diagnostics": diagnostics,
    }
    _emit(doc, args)
    return EXIT_OK if all_ok else EXIT_CHECK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liepencil",
        description="Exact engine for derived brackets, pencils, and torsion "
                    "on finite-dimensional algebras.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, operator=True):
        p.add_argument("--algebra", required=True, help="algebra JSON file")
        if operator:
            p.add_argument("--operator", required=True, help="operator JSON file")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("classify", help="classify an operator against a bracket")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("derive", help="k-fold derived bracket")
    common(p)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--out", help="write the result as an algebra file")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("pencil", help="normalize the pencil of a near-derivation")
    common(p)
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("index", help="index of a Lie algebra")
    common(p, operator=False)
    p.add_argument("--mode", choices=("prob", "exact"), default="prob")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed (default: %s env var)" % SEED_ENV)
    p.add_argument("--max-exact-dim", type=int, default=12)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("torsion", help="torsion tensor of an operator")
    common(p)
    p.add_argument("--out", help="write the torsion as an algebra file")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("nijenhuis-check", help="vanishing torsion and power properties")
    common(p)
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_nijenhuis_check)

    p = sub.add_parser("exp-check", help="exponential deformation identities")
    common(p)
    p.add_argument("--kind", choices=("nijenhuis", "near"), required=True)
    p.add_argument("--m", type=int, default=None,
                   help="proportionality scalar for --kind near")
    p.add_argument("--points", help="comma-separated rational evaluation points")
    p.add_argument("--certified", action="store_true",
                   help="nijenhuis kind: check enough points to certify")
    p.set_defaults(func=cmd_exp_check)

    p = sub.add_parser("pc-check", help="generate and verify a commutative family")
    p.add_argument("--algebra", required=True)
    p.add_argument("--operator", help="operator file; its lift drives the orbit")
    p.add_argument("--gamma", help="comma-separated covector for the directional orbit")
    p.add_argument("--seed-file", help="seed polynomials JSON")
    p.add_argument("--degree-bound", type=int, default=2,
                   help="centre search degree when no seed file is given")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pc_check)

    p = sub.add_parser("example", help="write bundled example files")
    p.add_argument("name", help="gl|sl|so|sp|grading|nilpotent-square|splitting|quasi-grading")
    p.add_argument("params", nargs="*", help="family and size arguments")
    p.add_argument("--weights", help="comma-separated grading weights")
    p.add_argument("--modulus", type=int)
    p.add_argument("--partition", help="comma-separated partition entries")
    p.add_argument("--sub", help="comma-separated basis indices of the subalgebra")
    p.add_argument("--complement", help="comma-separated indices of the complement")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("report", help="aggregate pipeline with one verdict per check")
    common(p)
    p.add_argument("--mode", choices=("prob", "exact"), default="prob")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-exact-dim", type=int, default=12)
    p.add_argument("--pc", action="store_true",
                   help="include the commutative-family check with centre seeds")
    p.add_argument("--gamma", help="covector for the directional family")
    p.add_argument("--seed-file", help="seed polynomials JSON")
    p.add_argument("--degree-bound", type=int, default=2)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputProblem as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except iomod.ParseError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
