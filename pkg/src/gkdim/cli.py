"""Command-line front end.

Parses JSON problem specs, dispatches to the analysis pipelines, and emits
deterministic machine-readable JSON reports (or flattened text summaries).
Every numeric field in the JSON output is an exact integer or a
[numerator, denominator] pair; the only float is the explicitly labeled
gamma_estimate diagnostic.

Exit codes: 0 success, 1 inconclusive classification (report still
emitted), 2 unreadable or malformed JSON input, 3 schema violation (the
error message names the offending field path).
"""

import argparse
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import catalog
from .axioms import (HolonomyCatalog, SESSpec, chain_bound_check,
                     check_multiplicity_axioms, holonomic_defect,
                     torsion_check_cyclic)
from .exactnum import Polynomial
from .hilbert import (DimensionSequence, algebra_dim_sequence,
                      hilbert_series_monomial_quotient, module_dim_sequence)
from .poincare import (RationalSeries, denominator_analysis,
                       fit_quasi_polynomial, minimal_recurrence,
                       series_from_recurrence)
from .presentations import (AlgebraSpec, ModuleSpec, RefilterError, SpecError,
                            Summand, refilter, validate_algebra,
                            validate_module)
from .samuel import classify_growth, detect_polynomial

TOOL_VERSION = "0.1.0"

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_BAD_INPUT = 2
EXIT_BAD_SCHEMA = 3

COMMANDS = ("analyze", "hilbert", "poincare", "check-ses", "chain",
            "refilter", "classify")

# commands whose pipeline runs the exact difference-tower detector and so
# need max_degree >= 2 * window + 4 samples
_DETECTION_COMMANDS = ("analyze", "check-ses", "chain", "classify")

# the fixed warning catalog: reports carry symbolic flags, output carries
# exactly these strings
WARNINGS = {
    "sampled_agreement":
        "polynomial fit verified on sampled degrees only; raise --max-degree "
        "for a longer confirmation window",
    "mixed_cyclotomic":
        "denominator mixes distinct cyclotomic orders; quasi-polynomial "
        "period taken as their least common multiple",
    "gamma_diagnostic_only":
        "gamma estimate is a floating-point diagnostic, not an exact claim",
    "expected_inconclusive":
        "catalog entry is known to grow faster than any polynomial and "
        "slower than any exponential; inconclusive is the honest verdict",
    "residual_not_certified":
        "denominator has a non-cyclotomic factor whose root locations could "
        "not be certified",
    "branch_multiplicity_disagreement":
        "quasi-polynomial branches have different leading coefficients; "
        "multiplicity reported as their maximum",
}


class CliError(Exception):
    """Input/environment failure carrying its exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


@dataclass
class RunConfig:
    command: str
    input_path: str
    max_degree: int = 30
    window: int = 6
    confirm: int = 8
    output: Optional[str] = None
    fmt: str = "json"
    h_override: Optional[int] = None


@dataclass
class ParsedInput:
    algebra: Optional[AlgebraSpec] = None
    catalog_id: Optional[str] = None
    module: Optional[ModuleSpec] = None
    sub_ideals: Optional[tuple] = None
    chain: Optional[tuple] = None  # tuple of ideals (tuples of monomials)
    sequence: Optional[tuple] = None
    sequence_meaning: str = "cumulative"
    weight: Optional[tuple] = None


# ---------------------------------------------------------------------------
# JSON spec parsing


def _require(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SpecError(path, message)


def _parse_fraction(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise SpecError(path, "expected an integer or a [numerator, denominator] pair")
    if isinstance(value, int):
        return Fraction(value)
    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        _require(value[1] != 0, path, "denominator must be nonzero")
        return Fraction(value[0], value[1])
    raise SpecError(path, "expected an integer or a [numerator, denominator] pair")


def _parse_natural(value, path: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(path, "expected an integer")
    _require(value >= minimum, path, f"expected an integer >= {minimum}")
    return value


def parse_monomial(text, names, path: str) -> tuple:
    """Parse "x1^2*x2" style monomial syntax into an exponent tuple; "1" is
    the unit monomial."""
    _require(isinstance(text, str), path, "monomial must be a string")
    stripped = text.strip()
    if stripped == "1":
        return (0,) * len(names)
    _require(bool(stripped), path, "monomial must not be empty")
    index = {n: i for i, n in enumerate(names)}
    expo = [0] * len(names)
    for factor in stripped.split("*"):
        factor = factor.strip()
        name, caret, exp_text = factor.partition("^")
        name = name.strip()
        _require(name in index, path, f"unknown generator {name!r}")
        if caret:
            try:
                exp = int(exp_text.strip())
            except ValueError:
                raise SpecError(path, f"bad exponent {exp_text.strip()!r}") from None
            _require(exp >= 0, path, "exponents must be naturals")
        else:
            exp = 1
        expo[index[name]] += exp
    return tuple(expo)


def _parse_ideal(doc, names, path: str) -> tuple:
    _require(isinstance(doc, list), path, "expected a list of monomial strings")
    return tuple(parse_monomial(m, names, f"{path}[{j+1}]") for j, m in enumerate(doc))


def _parse_generators(doc, path: str):
    _require(isinstance(doc, list) and doc, path,
             "expected a nonempty list of {name, degree} objects")
    names, degrees = [], []
    for i, g in enumerate(doc):
        gpath = f"{path}[{i+1}]"
        _require(isinstance(g, dict), gpath, "expected a {name, degree} object")
        name = g.get("name")
        _require(isinstance(name, str) and name, f"{gpath}.name",
                 "expected a nonempty string")
        names.append(name)
        deg = g.get("degree", [1])
        _require(isinstance(deg, list) and deg, f"{gpath}.degree",
                 "expected a nonempty list of naturals")
        degrees.append(tuple(
            _parse_natural(v, f"{gpath}.degree[{j+1}]") for j, v in enumerate(deg)))
    return tuple(names), tuple(degrees)


def parse_algebra(doc, path: str = "algebra"):
    """Returns an AlgebraSpec, or a catalog id string for kind "catalog"."""
    _require(isinstance(doc, dict), path, "expected an object")
    kind = doc.get("kind")
    kinds = ("polynomial", "quantum_affine", "weyl", "pbw_weighted", "catalog")
    _require(kind in kinds, f"{path}.kind", f"kind must be one of {', '.join(kinds)}")
    if kind == "catalog":
        entry_id = doc.get("catalog_id")
        _require(isinstance(entry_id, str), f"{path}.catalog_id", "expected a string")
        try:
            catalog.catalog_entry(entry_id)
        except ValueError as e:
            raise SpecError(f"{path}.catalog_id", str(e)) from None
        return entry_id
    if kind == "weyl":
        rank = _parse_natural(doc.get("weyl_rank"), f"{path}.weyl_rank", minimum=1)
        a = AlgebraSpec.weyl(rank)
    else:
        names, degrees = _parse_generators(doc.get("generators"), f"{path}.generators")
        if kind == "polynomial":
            a = AlgebraSpec.polynomial(len(names), degrees=degrees, names=names)
        elif kind == "quantum_affine":
            lam_doc = doc.get("lambda")
            n = len(names)
            _require(isinstance(lam_doc, list) and len(lam_doc) == n,
                     f"{path}.lambda", f"expected an {n} x {n} matrix")
            lam = []
            for i, row in enumerate(lam_doc):
                _require(isinstance(row, list) and len(row) == n,
                         f"{path}.lambda[{i+1}]", f"expected a row of {n} entries")
                lam.append(tuple(_parse_fraction(v, f"{path}.lambda[{i+1}][{j+1}]")
                                 for j, v in enumerate(row)))
            a = AlgebraSpec.quantum_affine(tuple(lam), degrees=degrees, names=names)
        else:  # pbw_weighted: the JSON format carries weights only
            a = AlgebraSpec.pbw_weighted(degrees, relations=(), names=names)
    validate_algebra(a)
    return a


def parse_module(doc, a: AlgebraSpec, path: str = "module") -> ModuleSpec:
    _require(isinstance(doc, dict), path, "expected an object")
    summands = []
    sdoc = doc.get("summands", [])
    _require(isinstance(sdoc, list), f"{path}.summands", "expected a list")
    for k, s in enumerate(sdoc):
        spath = f"{path}.summands[{k+1}]"
        _require(isinstance(s, dict), spath, "expected a {shift, ideal} object")
        shift = _parse_natural(s.get("shift", 0), f"{spath}.shift")
        ideal = _parse_ideal(s.get("ideal", []), a.names, f"{spath}.ideal")
        summands.append(Summand(shift, ideal))
    negative_shift = doc.get("negative_shift")
    if negative_shift is not None:
        negative_shift = _parse_natural(negative_shift, f"{path}.negative_shift",
                                        minimum=1)
    m = ModuleSpec(tuple(summands), negative_shift)
    validate_module(a, m)
    return m


def parse_spec(doc) -> ParsedInput:
    _require(isinstance(doc, dict), "spec", "top level must be an object")
    _require(doc.get("spec_version") == 1, "spec_version", "must be the integer 1")
    out = ParsedInput()
    if "algebra" in doc:
        parsed = parse_algebra(doc["algebra"])
        if isinstance(parsed, str):
            out.catalog_id = parsed
        else:
            out.algebra = parsed
    if "module" in doc:
        _require(out.algebra is not None, "algebra",
                 "an explicit algebra presentation is required with a module")
        out.module = parse_module(doc["module"], out.algebra)
    if "ses" in doc:
        _require(out.algebra is not None, "algebra",
                 "an explicit algebra presentation is required with an ses")
        sdoc = doc["ses"]
        _require(isinstance(sdoc, dict), "ses", "expected an object")
        if "sub_ideal" in sdoc:
            out.sub_ideals = (_parse_ideal(sdoc["sub_ideal"], out.algebra.names,
                                           "ses.sub_ideal"),)
        elif "sub_ideals" in sdoc:
            ldoc = sdoc["sub_ideals"]
            _require(isinstance(ldoc, list), "ses.sub_ideals", "expected a list")
            out.sub_ideals = tuple(
                _parse_ideal(ideal, out.algebra.names, f"ses.sub_ideals[{k+1}]")
                for k, ideal in enumerate(ldoc))
        else:
            raise SpecError("ses", "expected a sub_ideal or sub_ideals field")
    if "chain" in doc:
        _require(out.algebra is not None, "algebra",
                 "an explicit algebra presentation is required with a chain")
        cdoc = doc["chain"]
        _require(isinstance(cdoc, list) and cdoc, "chain",
                 "expected a nonempty list of ideals")
        out.chain = tuple(_parse_ideal(ideal, out.algebra.names, f"chain[{k+1}]")
                          for k, ideal in enumerate(cdoc))
    if "sequence" in doc:
        sq = doc["sequence"]
        _require(isinstance(sq, list) and sq, "sequence",
                 "expected a nonempty list of naturals")
        out.sequence = tuple(_parse_natural(v, f"sequence[{j+1}]")
                             for j, v in enumerate(sq))
        meaning = doc.get("sequence_meaning", "cumulative")
        _require(meaning in ("cumulative", "graded_piece"), "sequence_meaning",
                 'must be "cumulative" or "graded_piece"')
        out.sequence_meaning = meaning
    if "weight" in doc:
        w = doc["weight"]
        _require(isinstance(w, list) and w, "weight",
                 "expected a nonempty list of integers")
        out.weight = tuple(_parse_natural(v, f"weight[{j+1}]") for j, v in enumerate(w))
    return out


# ---------------------------------------------------------------------------
# exact-value serialization


def _frac(x) -> list:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def _frac_or_none(x):
    return None if x is None else _frac(x)


def _poly(p: Polynomial) -> list:
    return [_frac(c) for c in p.coeffs]


def _series_payload(s: RationalSeries) -> dict:
    return {"numerator": _poly(s.numerator), "denominator": _poly(s.denominator)}


def _recurrence_payload(rec) -> dict:
    return {"order": rec.order, "coefficients": [_frac(c) for c in rec.coefficients],
            "onset": rec.onset}


def _denominator_payload(an) -> dict:
    return {
        "radius_class": an.radius_class,
        "s": an.s,
        "d": an.d,
        "cyclotomic_multiplicities": [[k, an.cyclotomic_multiplicities[k]]
                                      for k in sorted(an.cyclotomic_multiplicities)],
        "linear_factors": [_poly(f) for f in an.linear_factors],
        "residual": _poly(an.residual),
        "notes": list(an.notes),
    }


def _quasi_payload(qp) -> dict:
    return {"period": qp.period, "onset": qp.onset,
            "branches": [_poly(b) for b in qp.branches]}


def _fit_payload(fit) -> dict:
    return {"binomial_coefficients": [_frac(c) for c in fit.form.coeffs],
            "stabilization_index": fit.stabilization_index}


def _growth_payload(g) -> dict:
    return {
        "classification": g.classification,
        "gk": g.gk,
        "multiplicity": _frac_or_none(g.multiplicity),
        "evidence": g.evidence,
        "gamma_estimate": (None if g.gamma is None else
                           {"value": g.gamma.value, "trend": g.gamma.trend}),
        "hilbert_samuel": None if g.hilbert_samuel is None else _fit_payload(g.hilbert_samuel),
        "recurrence": None if g.recurrence is None else _recurrence_payload(g.recurrence),
        "series": None if g.series is None else _series_payload(g.series),
        "denominator": None if g.denominator is None else _denominator_payload(g.denominator),
        "quasi": None if g.quasi is None else _quasi_payload(g.quasi),
    }


# ---------------------------------------------------------------------------
# command dispatch


def _check_config(config: RunConfig) -> None:
    if config.command not in COMMANDS:
        raise SpecError("config.command",
                        f"command must be one of {', '.join(COMMANDS)}")
    _require(config.window >= 2, "config.window", "window must be at least 2")
    _require(config.confirm >= 1, "config.confirm", "confirm must be at least 1")
    _require(config.max_degree >= 1, "config.max_degree",
             "max_degree must be at least 1")
    if config.command in _DETECTION_COMMANDS:
        need = 2 * config.window + 4
        _require(config.max_degree >= need, "config.max_degree",
                 f"polynomial detection needs max_degree >= {need} "
                 f"(2 * window + 4)")
    _require(config.fmt in ("json", "text"), "config.format",
             'format must be "json" or "text"')


def _need_algebra(parsed: ParsedInput) -> AlgebraSpec:
    if parsed.algebra is None:
        raise SpecError("algebra", "this command needs an explicit algebra "
                                   "presentation (not a catalog entry)")
    return parsed.algebra


def _cumulative_input(parsed: ParsedInput, top: int):
    """Cumulative dimension sequence for analyze/classify, from a raw
    sequence, a catalog entry, or a module presentation."""
    if parsed.sequence is not None:
        seq = DimensionSequence(parsed.sequence, parsed.sequence_meaning)
        return seq.cumulative()
    if parsed.catalog_id is not None:
        return catalog.cumulative_sequence(parsed.catalog_id, top)
    a = _need_algebra(parsed)
    m = parsed.module if parsed.module is not None else ModuleSpec.regular()
    return module_dim_sequence(a, m, top)


def _catalog_flags(parsed: ParsedInput) -> tuple:
    if parsed.catalog_id is None:
        return ()
    entry = catalog.catalog_entry(parsed.catalog_id)
    return ("expected_inconclusive",) if entry.expected_inconclusive else ()


def _cmd_analyze(config: RunConfig, parsed: ParsedInput):
    top = config.max_degree
    seq = _cumulative_input(parsed, top)
    growth = classify_growth(seq, config.window, config.confirm)
    flags = growth.flags + _catalog_flags(parsed)
    report = {
        "dimensions": {"cumulative": list(seq),
                       "graded": list(seq.graded())},
        "growth": _growth_payload(growth),
        "holonomy": None,
        "torsion": None,
    }
    a, m = parsed.algebra, parsed.module
    if a is not None and (a.kind in ("weyl", "polynomial")
                          or config.h_override is not None):
        hc = HolonomyCatalog(override=config.h_override)
        mod = m if m is not None else ModuleSpec.regular()
        try:
            hol = holonomic_defect(a, mod, hc, top, config.window)
        except ValueError:
            hol = None
        if hol is not None:
            report["holonomy"] = {"gk": hol.gk, "h": hol.h, "defect": hol.defect,
                                  "min_holonomic": hol.min_holonomic}
            if mod.negative_shift is None and len(mod.summands) == 1:
                afit = detect_polynomial(algebra_dim_sequence(a, top), config.window)
                if afit is not None:
                    gk_a = max(afit.form.degree, 0)
                    tor = torsion_check_cyclic(a, bool(mod.summands[0].ideal),
                                               gk_a, hol.h)
                    report["torsion"] = {"applicable": tor.applicable,
                                         "torsion": tor.torsion,
                                         "reason": tor.reason}
    code = EXIT_INCONCLUSIVE if growth.classification == "inconclusive" else EXIT_OK
    return code, report, flags


def _cmd_hilbert(config: RunConfig, parsed: ParsedInput):
    a = _need_algebra(parsed)
    m = parsed.module if parsed.module is not None else ModuleSpec.regular()
    if m.negative_shift is not None:
        raise SpecError("module.negative_shift",
                        "the hilbert command needs a summand presentation")
    combined = None
    for s in m.summands:
        piece = hilbert_series_monomial_quotient(a, s.ideal)
        shifted = Polynomial([0] * s.shift + [1]) * piece.numerator
        if combined is None:
            combined = RationalSeries(shifted, piece.denominator)
        else:
            combined = RationalSeries(combined.numerator + shifted,
                                      combined.denominator)
    reduced = combined.reduced()
    top = config.max_degree
    report = {
        "series": _series_payload(combined),
        "reduced": _series_payload(reduced),
        "graded_dimensions": [int(v) for v in combined.expand(top + 1)],
    }
    return EXIT_OK, report, ()


def _cmd_poincare(config: RunConfig, parsed: ParsedInput):
    top = config.max_degree
    if parsed.sequence is not None:
        values = list(parsed.sequence)
    elif parsed.catalog_id is not None:
        values = catalog.graded_values(parsed.catalog_id, top)
    else:
        a = _need_algebra(parsed)
        m = parsed.module if parsed.module is not None else ModuleSpec.regular()
        values = list(module_dim_sequence(a, m, top).graded())
    confirm = min(config.confirm, max(1, len(values) - 2))
    if (len(values) - confirm) // 2 < 1:
        raise SpecError("sequence", "too few terms for recurrence detection")
    rec = minimal_recurrence(values, confirm=confirm)
    flags = _catalog_flags(parsed)
    if rec is None:
        report = {"coefficients_analyzed": len(values), "recurrence": None,
                  "series": None, "denominator": None, "quasi": None}
        return EXIT_INCONCLUSIVE, report, flags
    series = series_from_recurrence(values, rec)
    analysis = denominator_analysis(series.denominator)
    quasi = None
    if analysis.radius_class == "all_roots_on_unit_circle":
        period = analysis.s
        if period is None:
            orders = analysis.cyclotomic_multiplicities
            period = math.lcm(*orders) if orders else 1
            flags = flags + ("mixed_cyclotomic",)
        qp = fit_quasi_polynomial(values, period, window=4)
        if qp is not None:
            quasi = _quasi_payload(qp)
    report = {
        "coefficients_analyzed": len(values),
        "recurrence": _recurrence_payload(rec),
        "series": _series_payload(series),
        "denominator": _denominator_payload(analysis),
        "quasi": quasi,
    }
    return EXIT_OK, report, flags


def _cmd_check_ses(config: RunConfig, parsed: ParsedInput):
    a = _need_algebra(parsed)
    if parsed.sub_ideals is None:
        raise SpecError("ses", "the check-ses command needs an ses field")
    m = parsed.module if parsed.module is not None else ModuleSpec.regular()
    if m.negative_shift is None and len(parsed.sub_ideals) != len(m.summands):
        raise SpecError("ses.sub_ideals",
                        "need exactly one sub-ideal per module summand")
    ses = SESSpec(a, m, parsed.sub_ideals)
    report = check_multiplicity_axioms(ses, config.max_degree, config.window)
    payload = {
        "gk_triple": list(report.gk_triple),
        "e_values": (None if report.e_values is None
                     else [_frac(e) for e in report.e_values]),
        "case": report.case,
        "exactness_ok": report.exactness_ok,
        "additivity_ok": report.additivity_ok,
        "notes": list(report.notes),
    }
    code = EXIT_INCONCLUSIVE if report.case == "inconclusive" else EXIT_OK
    return code, payload, ()


def _cmd_chain(config: RunConfig, parsed: ParsedInput):
    a = _need_algebra(parsed)
    if parsed.chain is None:
        raise SpecError("chain", "the chain command needs a chain field")
    modules = [ModuleSpec.cyclic(ideal) for ideal in parsed.chain]
    report = chain_bound_check(a, modules, config.max_degree, config.window)
    payload = {
        "n": report.n,
        "e_m": _frac_or_none(report.e_m),
        "gk_m": report.gk_m,
        "bound_ok": report.bound_ok,
        "quotients_full_gk": report.quotients_full_gk,
        "notes": list(report.notes),
    }
    code = EXIT_INCONCLUSIVE if report.bound_ok is None else EXIT_OK
    return code, payload, ()


def _cmd_refilter(config: RunConfig, parsed: ParsedInput):
    a = _need_algebra(parsed)
    if parsed.weight is None:
        raise SpecError("weight", "the refilter command needs a weight field")
    try:
        b = refilter(a, parsed.weight)
    except RefilterError as e:
        report = {"ok": False, "reason": str(e), "refiltered": None}
        return EXIT_OK, report, ()
    report = {
        "ok": True,
        "reason": None,
        "refiltered": {"kind": b.kind, "names": list(b.names),
                       "weights": [d[0] for d in b.degrees]},
    }
    return EXIT_OK, report, ()


def _cmd_classify(config: RunConfig, parsed: ParsedInput):
    top = config.max_degree
    seq = _cumulative_input(parsed, top)
    if len(seq) < 12:
        raise SpecError("sequence", "growth classification needs at least 12 terms")
    growth = classify_growth(seq, config.window, config.confirm)
    flags = growth.flags + _catalog_flags(parsed)
    report = {"growth": _growth_payload(growth)}
    code = EXIT_INCONCLUSIVE if growth.classification == "inconclusive" else EXIT_OK
    return code, report, flags


_DISPATCH = {
    "analyze": _cmd_analyze,
    "hilbert": _cmd_hilbert,
    "poincare": _cmd_poincare,
    "check-ses": _cmd_check_ses,
    "chain": _cmd_chain,
    "refilter": _cmd_refilter,
    "classify": _cmd_classify,
}


# ---------------------------------------------------------------------------
# rendering and orchestration


def _render_text(payload, prefix: str = "") -> list:
    """Flatten a JSON payload into deterministic 'key = value' lines."""
    lines = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            lines.extend(_render_text(payload[key], f"{prefix}{key}."))
    elif isinstance(payload, list) and any(isinstance(v, (dict, list)) for v in payload):
        for i, v in enumerate(payload):
            lines.extend(_render_text(v, f"{prefix}{i}."))
    else:
        value = json.dumps(payload, sort_keys=True)
        lines.append(f"{prefix[:-1]} = {value}")
    return lines


def render_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return "\n".join(_render_text(payload)) + "\n"


def run(config: RunConfig) -> int:
    """Execute one command; writes the report and returns the exit code."""
    try:
        try:
            with open(config.input_path, "rb") as fh:
                raw = fh.read()
        except OSError as e:
            raise CliError(EXIT_BAD_INPUT, f"cannot read input: {e}") from None
        try:
            doc = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise CliError(EXIT_BAD_INPUT, f"malformed JSON: {e}") from None
        _check_config(config)
        parsed = parse_spec(doc)
        code, report, flags = _DISPATCH[config.command](config, parsed)
        warnings = []
        for flag in flags:
            text = WARNINGS[flag]
            if text not in warnings:
                warnings.append(text)
        payload = {
            "tool_version": TOOL_VERSION,
            "spec_version": 1,
            "command": config.command,
            "input_digest": hashlib.sha256(raw).hexdigest(),
            "report": report,
            "warnings": warnings,
        }
        rendered = render_report(payload, config.fmt)
        if config.output:
            try:
                with open(config.output, "w", encoding="utf-8") as fh:
                    fh.write(rendered)
            except OSError as e:
                raise CliError(EXIT_BAD_INPUT, f"cannot write output: {e}") from None
        else:
            sys.stdout.write(rendered)
        return code
    except SpecError as e:
        print(f"error: {e.path}: {e.message}", file=sys.stderr)
        return EXIT_BAD_SCHEMA
    except CliError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.code
    except Exception as e:  # no raw traceback ever reaches the user
        print(f"error: internal: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_BAD_SCHEMA


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gkdim",
        description="Growth analysis of filtered algebras and modules from "
                    "JSON presentations: dimension sequences, eventual "
                    "polynomials, multiplicities, and rational generating "
                    "functions.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", help="path to a JSON problem spec")
    parser.add_argument("--max-degree", type=int, default=30, dest="max_degree",
                        help="largest filtration degree to sample (default 30)")
    parser.add_argument("--window", type=int, default=6,
                        help="constancy window for polynomial detection (default 6)")
    parser.add_argument("--confirm", type=int, default=8,
                        help="extra equations a recurrence must satisfy (default 8)")
    parser.add_argument("--format", choices=["json", "text"], default="json",
                        dest="fmt", help="report format (default json)")
    parser.add_argument("--output", default=None,
                        help="write the report to this path instead of stdout")
    parser.add_argument("--h-override", type=int, default=None, dest="h_override",
                        help="override the holonomy catalog's h value")
    args = parser.parse_args(argv)
    config = RunConfig(command=args.command, input_path=args.input,
                       max_degree=args.max_degree, window=args.window,
                       confirm=args.confirm, output=args.output,
                       fmt=args.fmt, h_override=args.h_override)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
