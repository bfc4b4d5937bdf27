"""
Command-line front end.

Every command loads one group (a builtin name such as ``g4`` or a path to a
group-spec JSON file), runs the matching library operation and prints either a
short human summary or a JSON document.  JSON is emitted with sorted keys so
identical invocations produce byte-identical output.

Exit status: 0 when everything certifies, 2 when a certification step fails,
1 for usage errors (unknown group, malformed word, unreadable spec file).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .center import (CenterBasis, build_center, class_coeffs, commutant_center,
                     span_compare, verify_representations)
from .groupdata import load_group
from .hecke import ValidationError, parse_word, verify_relations, word_to_element
from .trace import (CertificationError, dual_basis, gram, mm_condition_check,
                    trace_property_check)

COMMANDS = ("validate", "eval", "gram", "dual", "mm-check", "center", "compare", "report")

EXIT_OK, EXIT_USAGE, EXIT_CERT = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str = "g4"
    word: str = None
    output: str = "text"
    seed: int = 0
    samples: int = 20
    method: str = "commutant"
    reps: str = None


@dataclass
class Outcome:
    status: int
    payload: dict
    lines: list


# -- individual commands --------------------------------------------------

def _validate(spec, cfg):
    rep = verify_relations(spec, raise_on_failure=False)
    payload = {"relations": rep.to_json()}
    lines = [f"{'ok ' if ok else 'FAIL'} {name}" for name, ok in rep.checks]
    ok = rep.ok
    if spec.representations:
        try:
            verify_representations(spec, spec.representations)
            payload["representations"] = {"ok": True}
            lines.append("ok  irreducible representations satisfy all relations")
        except ValueError as exc:
            payload["representations"] = {"ok": False, "error": str(exc)}
            lines.append(f"FAIL representations: {exc}")
            ok = False
    return Outcome(EXIT_OK if ok else EXIT_CERT, payload, lines)


def _eval(spec, cfg):
    if not cfg.word:
        raise UsageError("eval needs --word")
    try:
        word = parse_word(cfg.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bad = [g for g, _ in word if g >= spec.generator_count]
    if bad:
        raise UsageError(f"{spec.name} has only {spec.generator_count} generators")
    h = word_to_element(spec, word)
    return Outcome(EXIT_OK, {"word": cfg.word, "element": h.to_json()}, [h.to_string(spec)])


def _gram(spec, cfg):
    gd = gram(spec)
    names = spec.variable_names
    return Outcome(EXIT_OK, {"gram": gd.to_json()},
                   [f"Gram matrix {spec.dim}x{spec.dim}: symmetric",
                    f"det = {gd.det.to_string(names)} (a unit)",
                    f"det^-1 = {gd.det_inverse.to_string(names)}"])


def _dual(spec, cfg):
    db = dual_basis(spec)
    lines = [f"{spec.label(j)}^vee = {v.to_string(spec)}" for j, v in enumerate(db.vectors)]
    return Outcome(EXIT_OK, {"dual_basis": db.to_json()}, lines)


def _mm(spec, cfg):
    rep = mm_condition_check(spec)
    lines = [f"tau(pi) = {rep.tau_pi.to_string(spec.variable_names)}"]
    if rep.ok:
        lines.append(f"tau(x^-1 pi) = 0 for all {spec.dim - 1} non-identity basis words")
    else:
        lines.append("nonzero at " + ", ".join(spec.label(j) for j in rep.failures))
    return Outcome(EXIT_OK if rep.ok else EXIT_CERT, {"mm_condition": rep.to_json()}, lines)


def _compute_center(spec, cfg, duals=None):
    if cfg.method == "commutant":
        return commutant_center(spec)
    if not spec.representations:
        raise UsageError(f"method {cfg.method!r} needs irreducible representations; "
                         f"{spec.name} ships none")
    reps_name = cfg.reps or next(iter(spec.class_reps))
    if reps_name not in spec.class_reps:
        raise UsageError(f"unknown representative set {reps_name!r}; "
                         f"choose from {sorted(spec.class_reps)}")
    reps = spec.class_reps[reps_name]
    duals = duals or dual_basis(spec)
    if cfg.method == "y":
        coeffs = class_coeffs(spec, spec.representations, reps, "f_on_basis")
        return build_center(spec, coeffs, "y_from_duals", duals)
    coeffs = class_coeffs(spec, spec.representations, reps, "g_on_duals", duals)
    return build_center(spec, coeffs, "z_from_basis")


def _reference_check(spec, basis):
    """Span report against the shipped reference basis, or None."""
    if not spec.reference_center:
        return None
    ref = CenterBasis(list(spec.reference_center), "reference")
    return span_compare(spec, basis, ref)


def _center_payload(spec, basis):
    payload = {"center": basis.to_json()}
    rep = _reference_check(spec, basis)
    if rep is not None:
        payload["compare_reference"] = rep.to_json()
    return payload, rep


def _center(spec, cfg):
    basis = _compute_center(spec, cfg)
    payload, rep = _center_payload(spec, basis)
    lines = [f"center of dimension {len(basis)} ({basis.provenance})"]
    for i, (v, integral) in enumerate(zip(basis.vectors, basis.integral)):
        lines.append(f"  [{i + 1}] {'R' if integral else 'F'}: {v.to_string(spec)}")
    status = EXIT_OK
    if rep is not None:
        lines.append(f"reference comparison: {rep.to_json()}")
        if not (rep.equal_F_span and rep.Y_in_R_span_of_X):
            status = EXIT_CERT
    return Outcome(status, payload, lines)


def _compare(spec, cfg):
    """Commutant basis against the reference and against every theorem basis."""
    comm = commutant_center(spec)
    results, lines = {}, []
    ok = True
    rep = _reference_check(spec, comm)
    if rep is not None:
        results["commutant_vs_reference"] = rep.to_json()
        ok &= rep.equal_F_span and rep.Y_in_R_span_of_X
    if spec.representations:
        duals = dual_basis(spec)
        for method in ("y", "z"):
            for reps_name in sorted(spec.class_reps):
                cfg_m = RunConfig(cfg.command, method=method, reps=reps_name)
                other = _compute_center(spec, cfg_m, duals)
                r = span_compare(spec, comm, other)
                results[f"commutant_vs_{method}_{reps_name}"] = r.to_json()
                ok &= r.equal_F_span
    for key in sorted(results):
        lines.append(f"{key}: {results[key]}")
    return Outcome(EXIT_OK if ok else EXIT_CERT, {"comparisons": results}, lines)


def _report(spec, cfg):
    """validate, gram, dual, mm-check, center, compare as one document."""
    doc, lines, status = {"group": spec.name}, [], EXIT_OK
    val = _validate(spec, cfg)
    doc["validate"] = val.payload
    lines.append(f"validate: {'ok' if val.status == EXIT_OK else 'FAILED'}")
    if val.status != EXIT_OK:
        return Outcome(EXIT_CERT, doc, lines)
    try:
        gd = gram(spec)
        doc["gram"] = {"det": gd.det.to_json(), "det_inverse": gd.det_inverse.to_json(),
                       "symmetric": True, "det_is_unit": True}
        lines.append(f"gram: det = {gd.det.to_string(spec.variable_names)}")
        duals = dual_basis(spec, gd)
        doc["dual_basis"] = duals.to_json()
        lines.append("dual basis: tau(b_i b_j^vee) = delta_ij verified")
    except CertificationError as exc:
        doc["gram"] = {"error": str(exc)}
        lines.append(f"gram: FAILED {exc}")
        return Outcome(EXIT_CERT, doc, lines)
    tr = trace_property_check(spec, cfg.samples, cfg.seed)
    doc["trace_property"] = tr.to_json()
    lines.append(f"trace property on {tr.samples} random pairs: {'ok' if tr.ok else 'FAILED'}")
    if not tr.ok:
        status = EXIT_CERT
    if spec.pi_word is not None:
        mm = _mm(spec, cfg)
        doc.update(mm.payload)
        lines.extend("mm-check: " + s for s in mm.lines)
        status = max(status, mm.status)
    comm = commutant_center(spec)
    doc["center"] = comm.to_json()
    lines.append(f"center: dimension {len(comm)}, all integral: {all(comm.integral)}")
    cmp_out = _compare(spec, cfg)
    doc.update(cmp_out.payload)
    lines.extend("compare " + s for s in cmp_out.lines)
    status = max(status, cmp_out.status)
    return Outcome(status, doc, lines)


HANDLERS = {"validate": _validate, "eval": _eval, "gram": _gram, "dual": _dual,
            "mm-check": _mm, "center": _center, "compare": _compare, "report": _report}


# -- entry points ---------------------------------------------------------

def run(cfg, out=None, err=None):
    """Execute one configuration; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if cfg.command not in HANDLERS:
            raise UsageError(f"unknown command {cfg.command!r}")
        try:
            spec = load_group(cfg.group)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot load group {cfg.group!r}: {exc}") from None
        outcome = HANDLERS[cfg.command](spec, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ValidationError, CertificationError, ArithmeticError) as exc:
        print(f"certification failed: {exc}", file=err)
        return EXIT_CERT
    if cfg.output == "json":
        doc = dict(outcome.payload, command=cfg.command, group=spec.name,
                   exit_status=outcome.status)
        out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        for line in outcome.lines:
            print(line, file=out)
    return outcome.status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", "-g", default="g4",
                        help="builtin group (a2, g4) or path to a group-spec JSON file")
    common.add_argument("--output", "-o", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser = argparse.ArgumentParser(
        prog="heckecenter",
        description="Exact computations in generic Hecke algebras and their centers.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "validate": "prove braid and Hecke relations of the matrix model",
        "eval": "expand a braid word in the basis",
        "gram": "Gram matrix of the trace, certified symmetric with unit determinant",
        "dual": "dual basis with respect to the trace",
        "mm-check": "check tau(x^-1 pi) = 0 for all non-identity basis words",
        "center": "compute a basis of the center",
        "compare": "compare center bases from every available method",
        "report": "run the whole pipeline and emit one document",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "eval":
            p.add_argument("--word", "-w", required=True,
                           help='braid word such as "s1^2 s2^-1 s1"')
        if name == "center":
            p.add_argument("--method", choices=("commutant", "y", "z"), default="commutant",
                           help="commutant nullspace, y_C from dual basis, or z_C on the basis")
            p.add_argument("--reps", help="name of the class representative set")
        if name == "report":
            p.add_argument("--samples", type=int, default=20,
                           help="random pairs for the trace property check")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(command=args.command, group=args.group, output=args.output,
                    seed=args.seed, word=getattr(args, "word", None),
                    samples=getattr(args, "samples", 20),
                    method=getattr(args, "method", "commutant"),
                    reps=getattr(args, "reps", None))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
