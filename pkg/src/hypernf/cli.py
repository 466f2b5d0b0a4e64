"""Command-line front end: normalize, verify and rank."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from types import SimpleNamespace
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .errors import HyperNFError
from .liealg import ComplexVF, GElement, SystemPR, basis, linear_part_A, parse_term
from .scalars import ScalarError, format_rational, format_scalar, parse_rational, parse_scalar

Level = Union[int, str]
MonoKey = Tuple[Tuple[int, int, int, int], int]


class InputError(ValueError):
    """Schema or coefficient error, located by a JSON path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Options:
    grade: int = 4
    level: Level = 2
    style: str = "paper"
    force: bool = False
    override: Optional[str] = None


@dataclass(frozen=True)
class InputSpec:
    mode: str
    terms: Tuple[Tuple[Any, str], ...] = ()
    frequencies: Tuple[str, str] = ("omega1", "omega2")
    options: Options = field(default_factory=Options)

    def system(self) -> SystemPR:
        body = GElement({parse_term(name): parse_rational(c) for name, c in self.terms})
        return SystemPR(body, True, *self.frequencies)

    def field(self) -> ComplexVF:
        v = ComplexVF({key: parse_scalar(c) for key, c in self.terms})
        if not v.degree_part(1):
            v = v + linear_part_A()
        return v


def _expect(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise InputError(path, msg)


def _parse_level(raw: Any, path: str) -> Level:
    if isinstance(raw, str) and raw.lower() in ("inf", "infinite", "infinity"):
        return "inf"
    if isinstance(raw, bool):
        raise InputError(path, "level must be a positive integer or \"inf\"")
    try:
        lv = int(raw)
    except (TypeError, ValueError):
        raise InputError(path, "level must be a positive integer or \"inf\"") from None
    _expect(lv >= 1 and str(lv) == str(raw).strip(), path, "level must be a positive integer or \"inf\"")
    return lv


def _parse_options(raw: Any, path: str) -> Options:
    if raw is None:
        return Options()
    _expect(isinstance(raw, dict), path, "expected an object")
    known = {"grade", "level", "style", "force", "override"}
    for k in raw:
        _expect(k in known, f"{path}.{k}", "unknown option")
    grade = raw.get("grade", 4)
    _expect(isinstance(grade, int) and not isinstance(grade, bool) and grade >= 1, f"{path}.grade", "expected a positive integer")
    level = _parse_level(raw.get("level", 2), f"{path}.level")
    style = raw.get("style", "paper")
    _expect(style in ("paper", "lex"), f"{path}.style", "expected \"paper\" or \"lex\"")
    force = raw.get("force", False)
    _expect(isinstance(force, bool), f"{path}.force", "expected a boolean")
    override = raw.get("override")
    _expect(override is None or isinstance(override, str), f"{path}.override", "expected a string")
    return Options(grade, level, style, force, override)


def _coeff(raw: Any, path: str, rational: bool) -> str:
    _expect(isinstance(raw, str), path, "coefficients must be strings")
    try:
        if rational:
            return format_rational(parse_rational(raw))
        return format_scalar(parse_scalar(raw))
    except (ScalarError, ZeroDivisionError) as exc:
        raise InputError(path, f"bad coefficient {raw!r}: {exc}") from None


def parse_input(text: Union[str, Dict[str, Any]]) -> InputSpec:
    """Validate a JSON input document.  Coefficients are kept as canonical strings."""
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("$", f"invalid JSON: {exc}") from None
    else:
        doc = text
    _expect(isinstance(doc, dict), "$", "expected an object")
    for k in doc:
        _expect(k in ("mode", "terms", "monomials", "frequencies", "options"), f"$.{k}", "unknown key")
    mode = doc.get("mode")
    _expect(mode in ("pr", "complex"), "$.mode", "expected \"pr\" or \"complex\"")
    freqs = doc.get("frequencies", ["omega1", "omega2"])
    _expect(
        isinstance(freqs, list) and len(freqs) == 2 and all(isinstance(f, str) and f for f in freqs),
        "$.frequencies",
        "expected two labels",
    )
    opts = _parse_options(doc.get("options"), "$.options")
    acc: Dict[Any, Any] = {}
    if mode == "pr":
        _expect("monomials" not in doc, "$.monomials", "not allowed in pr mode")
        items = doc.get("terms", [])
        _expect(isinstance(items, list), "$.terms", "expected a list")
        for i, it in enumerate(items):
            p = f"$.terms[{i}]"
            _expect(isinstance(it, dict) and set(it) == {"term", "coeff"}, p, "expected {\"term\", \"coeff\"}")
            try:
                t = parse_term(it["term"]) if isinstance(it["term"], str) else None
            except ValueError:
                t = None
            _expect(t is not None, f"{p}.term", f"unknown term {it['term']!r}")
            _expect(t.grade >= 1, f"{p}.term", "grade-0 terms are represented by Theta")
            c = parse_rational(_coeff(it["coeff"], f"{p}.coeff", True))
            acc[t.name()] = acc.get(t.name(), Fraction(0)) + c
        terms = tuple((k, format_rational(v)) for k, v in sorted(acc.items(), key=lambda kv: parse_term(kv[0]).sort_key()) if v)
    else:
        _expect("terms" not in doc, "$.terms", "not allowed in complex mode")
        items = doc.get("monomials", [])
        _expect(isinstance(items, list), "$.monomials", "expected a list")
        for i, it in enumerate(items):
            p = f"$.monomials[{i}]"
            _expect(isinstance(it, dict) and set(it) == {"exps", "component", "coeff"}, p, "expected {\"exps\", \"component\", \"coeff\"}")
            e = it["exps"]
            _expect(
                isinstance(e, list) and len(e) == 4 and all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in e),
                f"{p}.exps",
                "expected four non-negative integers",
            )
            j = it["component"]
            _expect(j in (1, 2, 3, 4) and not isinstance(j, bool), f"{p}.component", "expected 1..4")
            c = parse_scalar(_coeff(it["coeff"], f"{p}.coeff", False))
            key = (tuple(e), j)
            acc[key] = acc[key] + c if key in acc else c
        terms = tuple((k, format_scalar(v)) for k, v in ComplexVF(acc).items())
    return InputSpec(mode, terms, (freqs[0], freqs[1]), opts)


def emit(spec: InputSpec) -> str:
    """Serialize an InputSpec; parse_input(emit(s)) == s."""
    o = spec.options
    opts: Dict[str, Any] = {"grade": o.grade, "level": o.level, "style": o.style, "force": o.force}
    if o.override is not None:
        opts["override"] = o.override
    doc: Dict[str, Any] = {"mode": spec.mode, "frequencies": list(spec.frequencies), "options": opts}
    if spec.mode == "pr":
        doc["terms"] = [{"term": n, "coeff": c} for n, c in spec.terms]
    else:
        doc["monomials"] = [{"exps": list(k[0]), "component": k[1], "coeff": c} for k, c in spec.terms]
    return json.dumps(doc, indent=2, sort_keys=True)


def run_pipeline(spec: InputSpec):
    """First level (complex mode), then the requested level, then verification."""
    from .hyper import s_level_normalize
    from .hyper.report import NormalFormReport
    from .poincare import first_level_normalize
    from .verify import verify_run

    o = spec.options
    fl = None
    if spec.mode == "complex":
        inp: Any = spec.field()
        fl = first_level_normalize(inp, o.grade)
        system = fl.normal_form
        system = SystemPR(system.body, system.includes_theta, *spec.frequencies)
    else:
        inp = system = spec.system()
    if o.level == 1:
        report = NormalFormReport(input=system, max_grade=o.grade, level=1, style=o.style)
        report.final = system.with_body(system.body.truncate(o.grade))
    else:
        report = s_level_normalize(system, o.grade, o.level, o.style, force=o.force, override=o.override)
    report.input = inp
    report.first_level = fl
    report.verification = verify_run(inp, report)
    return report


# ---------------------------------------------------------------- report loading


def _gel(items: Sequence[Dict[str, str]]) -> GElement:
    return GElement({parse_term(d["term"]): parse_rational(d["coeff"]) for d in items})


def _sys(doc: Dict[str, Any]) -> SystemPR:
    return SystemPR(_gel(doc["terms"]), "theta" in doc)


def _vf(items) -> ComplexVF:
    return ComplexVF({(tuple(d["exps"]), d["component"]): parse_scalar(d["coeff"]) for d in items})


def load_report(doc: Dict[str, Any]):
    """Rebuild what verify_run needs from a serialized report."""
    chain = []
    for rec in doc["records"]:
        X = GElement()
        for comp in rec["generator"]:
            X = X + _gel(comp)
        chain.append(X)
    fl = None
    if doc.get("first_level"):
        f = doc["first_level"]
        fl = SimpleNamespace(
            chain=[_vf(g["field"]) for g in f["generators"]],
            complex_form=_vf(f["complex_form"]),
            normal_form=_sys(f["normal_form"]) if f["normal_form"] is not None else None,
        )
    return SimpleNamespace(
        chain=chain,
        final=_sys(doc["final"]),
        max_grade=doc["max_grade"],
        first_level=fl,
    )


# ---------------------------------------------------------------- commands


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_normalize(args) -> int:
    spec = parse_input(_read(args.input))
    o = spec.options
    over = {}
    if args.level is not None:
        over["level"] = _parse_level(args.level, "--level")
    if args.grade is not None:
        over["grade"] = args.grade
    if args.style is not None:
        over["style"] = args.style
    if args.force:
        over["force"] = True
    if over:
        spec = InputSpec(spec.mode, spec.terms, spec.frequencies, Options(**{**o.__dict__, **over}))
    report = run_pipeline(spec)
    text = report.dumps() + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    ok = report.verification.status == "pass"
    if not ok:
        sys.stderr.write("verification failed:\n" + "\n".join(report.verification.mismatches) + "\n")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    from .verify import verify_run

    spec = parse_input(_read(args.input))
    rep = load_report(json.loads(_read(args.report)))
    inp = spec.field() if spec.mode == "complex" else spec.system()
    verdict = verify_run(inp, rep)
    sys.stdout.write(json.dumps(verdict.to_json(), indent=2, sort_keys=True) + "\n")
    return 0 if verdict.status == "pass" else 1


def _cmd_rank(args) -> int:
    from .errors import UncoveredCase
    from .hyper import assemble_A, classify_case, partition_classify, predicted_rank, rank_exact

    try:
        coeffs = [parse_rational(c) for c in args.coeffs.split(",")]
    except ScalarError as exc:
        raise InputError("--coeffs", str(exc)) from None
    if len(coeffs) != 4:
        raise InputError("--coeffs", "expected four comma-separated rationals")
    rot = [Fraction(0)] * 4
    if args.rot:
        rot = [parse_rational(c) for c in args.rot.split(",")]
        if len(rot) != 4:
            raise InputError("--rot", "expected four comma-separated rationals")
    from .liealg import P, R

    names = [(1, 0, 1), (2, 0, 1), (1, 1, 0), (2, 1, 0)]
    body = {P(k, m, n): c for (k, m, n), c in zip(names, coeffs)}
    body.update({R(k, m, n): c for (k, m, n), c in zip(names, rot)})
    system = SystemPR(GElement(body))
    tag = classify_case(*coeffs, force=args.force, rot=rot)
    out: Dict[str, Any] = {
        "n": args.n,
        "coeffs": [format_rational(c) for c in coeffs],
        "dim": len(basis(args.n)),
        "rank": rank_exact(assemble_A(args.n, system).dense()),
        "case": tag.to_json(),
    }
    for key, literal in (("predicted_rank", False), ("stated_rank", True)):
        try:
            out[key] = predicted_rank(tag, args.n, system, literal=literal)
        except UncoveredCase:
            out[key] = None
    if tag.variant == "I" and args.n >= 1:
        out["partition"] = partition_classify(args.n, *tag.params).to_json()
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypernf", description="Exact hypernormal forms for double Hopf vector fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    n = sub.add_parser("normalize", help="normalize an input system and print the report")
    n.add_argument("--input", required=True, help="input JSON file ('-' for stdin)")
    n.add_argument("--level", help="1, 2, 3, ... or inf (overrides the input options)")
    n.add_argument("--grade", type=int, help="maximal grade N")
    n.add_argument("--style", choices=("paper", "lex"))
    n.add_argument("--force", action="store_true", help="allow an all-zero cubic part")
    n.add_argument("--output", help="write the report here instead of stdout")
    n.set_defaults(func=_cmd_normalize)

    v = sub.add_parser("verify", help="replay a report's generators on its input")
    v.add_argument("--input", required=True)
    v.add_argument("--report", required=True)
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("rank", help="exact rank of the grade-n homological matrix")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--coeffs", required=True, help="a01_1,a01_2,a10_1,a10_2")
    r.add_argument("--rot", help="b01_1,b01_2,b10_1,b10_2 (default zeros)")
    r.add_argument("--force", action="store_true")
    r.set_defaults(func=_cmd_rank)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error at {exc}\n")
        return 2
    except (HyperNFError, ValueError, OSError, KeyError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
