"""Command-line front end: one subcommand per operation, scenario files and the built-in checks.

Every operation is a function from a JSON-style ``inputs`` mapping to a
(value, details) pair.  Subcommands translate flags into such a mapping,
and scenario files name the operation and the inputs directly, so both
paths share one dispatcher.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

from gmpy2 import mpq

from . import __version__
from .corpus import A_GENS, B0_ELEMENT, B0_GENS, B0_JACOBIAN_GENS, BS_CORPUS, F_SIMPLE, FLAT_CORPUS, PUSHOUT_CORPUS, TENSOR_CORPUS, WEIL
from .flat import (AlgebraMorphism, flat_member_c1, flat_member_c2, prolong, pushout_injective, real_line,
                   tensor_kernel_report, weil_tensor)
from .jacobian import bs_exponent, family, jacobian_data
from .local import DEFAULT_DEGREE_CAP, EmptyIdeal, QuotientAlgebra, nilpotency_index, principal_ideal_dim, quotient
from .poly import ArityError, Polynomial, PolynomialSyntaxError, default_names, parse_poly
from .splitting import (BoxRegion, FIRST_MONOMIALS, certify_seeded, complex_root_count, count_real_roots,
                        first_splitting, h_sign_table, interpolation_analysis, min_root_gap, param_normal_form,
                        predicted_second_points, second_splitting, second_splitting_symbolic,
                        transversality_check)
from .splitting.count import DEFAULT_REFINEMENT_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    """Inputs that do not describe a valid request."""


# input helpers ---------------------------------------------------------------------

def _split_list(value) -> list[str]:
    if value is None:
        return []
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    text = str(value)
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read().replace("\n", ";")
    return [part.strip() for part in text.split(";") if part.strip()]


def _vars(inputs: dict, default_arity: int | None = None) -> list[str]:
    v = inputs.get("vars")
    if v is None:
        if default_arity is None:
            raise UsageError("missing variable list (vars)")
        return default_names(default_arity)
    if isinstance(v, str):
        return [s.strip() for s in v.split(",") if s.strip()]
    return list(v)


def _rational(value, name: str) -> mpq:
    try:
        return mpq(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{name}: {value!r} is not a rational number") from exc


def _rationals(value, name: str) -> list[mpq]:
    if isinstance(value, str):
        value = [s for s in value.split(",") if s.strip()]
    return [_rational(v, name) for v in value]


def _cap(inputs: dict) -> int:
    return int(inputs.get("degree_cap", DEFAULT_DEGREE_CAP))


def _algebra(inputs: dict, prefix: str = "") -> QuotientAlgebra:
    gens = _split_list(inputs.get(prefix + "gens"))
    names = _vars({"vars": inputs.get(prefix + "vars")}) if inputs.get(prefix + "vars") is not None else []
    if not names and not gens:
        return real_line()
    if not gens:
        raise UsageError(f"missing generators ({prefix}gens)")
    return quotient(gens, names, _cap(inputs))


def _subject(inputs: dict) -> tuple[Polynomial, list[str]]:
    """The polynomial an operation acts on: ``poly`` over ``vars`` or ``family`` n."""
    if inputs.get("family") is not None:
        n = int(inputs["family"])
        return family(n), default_names(n)
    if inputs.get("poly") is None:
        raise UsageError("missing polynomial (poly) or family index (family)")
    names = _vars(inputs)
    return parse_poly(str(inputs["poly"]), names), names


def _element_algebra(inputs: dict):
    """Algebra plus element: explicit generators, or the Milnor algebra of a family member."""
    if inputs.get("gens") is None and inputs.get("family") is not None:
        f, names = _subject(inputs)
        return jacobian_data(f, names, _cap(inputs)).milnor_algebra, f
    alg = _algebra(inputs)
    f, _ = _subject(inputs)
    return alg, f


def _box(inputs: dict, n: int, default) -> BoxRegion:
    text = inputs.get("box")
    if text is None:
        return BoxRegion.square(default[0], default[1], n)
    box = BoxRegion.parse(text) if isinstance(text, str) else BoxRegion(tuple(tuple(s) for s in text))
    if box.dimension != n:
        raise UsageError(f"box has dimension {box.dimension}, system has {n} variables")
    return box


def _system(inputs: dict, a: mpq):
    kind = inputs.get("system", "first")
    if kind == "first":
        return first_splitting(a)
    if kind == "second":
        return second_splitting(int(inputs.get("n", 2)), a)
    raise UsageError(f"unknown system {kind!r} (use first or second)")


def _fmt(q) -> str:
    return str(mpq(q))


# operations ------------------------------------------------------------------------

def op_quotient_dim(inputs):
    alg = _algebra(inputs)
    return alg.dim, alg.describe()


def op_normal_form(inputs):
    alg = _algebra(inputs)
    e = alg.element(parse_poly(str(inputs["poly"]), alg.variables))
    return e.format(), {"coordinates": [_fmt(c) for c in e.coordinates]}


def op_member(inputs):
    alg = _algebra(inputs)
    return alg.member(parse_poly(str(inputs["poly"]), alg.variables)), None


def op_nilpotency(inputs):
    alg, f = _element_algebra(inputs)
    return nilpotency_index(alg.normal_form(f)), {"dimension": alg.dim}


def op_principal_dim(inputs):
    alg, f = _element_algebra(inputs)
    return principal_ideal_dim(alg.normal_form(f)), {"dimension": alg.dim}


def op_jacobian(inputs):
    f, names = _subject(inputs)
    data = jacobian_data(f, names, _cap(inputs))
    return {"generators": [g.format(names) for g in data.delta.generators],
            "milnor_number": data.milnor_number}, None


def op_bs_exponent(inputs):
    f, names = _subject(inputs)
    return bs_exponent(f, _cap(inputs)), None


def op_family(inputs):
    n = int(inputs.get("n", inputs.get("family", 1)))
    return family(n).format(default_names(n)), None


def op_prolong(inputs):
    names = _vars(inputs)
    alg_ideal = quotient(_split_list(inputs.get("gens")), names, _cap(inputs)).ideal
    pro = prolong(alg_ideal)
    return ([g.format(pro.prolonged.variables) for g in pro.prolonged.generators],
            {"variables": list(pro.prolonged.variables)})


def op_flat_check(inputs):
    alg, f = _element_algebra(inputs)
    cond = inputs.get("condition", "both")
    if cond == "c1":
        return flat_member_c1(alg, f), None
    if cond == "c2":
        return flat_member_c2(alg, f, inputs.get("degree_budget")), None
    if cond == "both":
        c1, c2 = flat_member_c1(alg, f), flat_member_c2(alg, f, inputs.get("degree_budget"))
        return {"c1": c1, "c2": c2, "agree": c1 == c2}, None
    raise UsageError(f"unknown condition {cond!r} (use c1, c2 or both)")


def _weil(inputs: dict, prefix: str) -> QuotientAlgebra:
    name = inputs.get(prefix + "weil")
    if name is not None:
        if name not in WEIL:
            raise UsageError(f"unknown Weil algebra {name!r}; known: {', '.join(WEIL)}")
        gens, names = WEIL[name]
        return real_line() if not names else quotient(gens, names)
    return _algebra(inputs, prefix)


def op_tensor(inputs):
    a = _algebra(inputs)
    w = _weil(inputs, "weil_")
    t = weil_tensor(a, w)
    return t.dim, t.describe()


def _morphism(inputs) -> AlgebraMorphism:
    src = _weil(inputs, "source_")
    images = inputs.get("images", "augmentation")
    if images == "augmentation":
        return AlgebraMorphism.augmentation(src)
    if images == "identity":
        return AlgebraMorphism.identity(src)
    return AlgebraMorphism.from_strings(src, _weil(inputs, "target_"), _split_list(images))


def op_tensor_kernel(inputs):
    report = tensor_kernel_report(_algebra(inputs), _morphism(inputs))
    return report["equal"], report


def op_pushout(inputs):
    a = _algebra(inputs)
    b = _algebra(inputs, "b_")
    a0 = a.element(str(inputs["a0"]))
    b0 = b.element(str(inputs["b0"]))
    return pushout_injective(a, a0, b, b0), None


def op_split_count(inputs):
    a = _rational(inputs.get("a", "1/100"), "a")
    system = _system(inputs, a)
    budget = int(inputs.get("budget", DEFAULT_REFINEMENT_BUDGET))
    details: dict[str, Any] = {"system": system.describe()}
    if system.arity == 2:
        box = _box(inputs, 2, (mpq(-1, 2), mpq(1, 2)))
        count, encs = count_real_roots(system, box, budget)
        details["box"] = box.to_json()
        details["method"] = "resultant-sturm"
    else:
        radius = _rational(inputs.get("radius", a / 2), "radius")
        encs = certify_seeded(system, predicted_second_points(system.arity, a), radius)
        count = len(encs)
        details["method"] = "seeded-krawczyk"
    details["enclosures"] = [e.to_json() for e in encs]
    if inputs.get("transversal"):
        details["transversal"] = transversality_check(system, encs, budget)
    if inputs.get("complex"):
        details["complex_count"] = complex_root_count(system, _cap(inputs))
    return count, details


def op_split_enclosures(inputs):
    count, details = op_split_count(inputs)
    return details["enclosures"], {"count": count}


def op_axis_zeroes(inputs):
    """Zeroes on the coordinate axes, off the origin, plus the origin itself."""
    _, details = op_split_count(inputs)
    pts = [e.get("point") for e in details["enclosures"]]
    on_x0 = sum(1 for e in details["enclosures"] if _pinned(e, 0) and not _pinned(e, 1))
    on_y0 = sum(1 for e in details["enclosures"] if _pinned(e, 1) and not _pinned(e, 0))
    origin = sum(1 for p in pts if p is not None and all(mpq(v) == 0 for v in p))
    return {"x=0": on_x0, "y=0": on_y0, "origin": origin}, None


def _pinned(enclosure: dict, i: int) -> bool:
    lo, hi = enclosure["box"][i]
    return mpq(lo) == 0 == mpq(hi)


def op_complex_count(inputs):
    a = _rational(inputs.get("a", "1/100"), "a")
    return complex_root_count(_system(inputs, a), _cap(inputs)), None


def op_transversality(inputs):
    count, details = op_split_count({**inputs, "transversal": True})
    return details["transversal"], {"count": count}


def op_sign_table(inputs):
    rows = h_sign_table(_rational(inputs.get("a", "1/10"), "a"))
    return ["+" if s > 0 else "-" if s < 0 else "0" for _, _, s in rows], {
        "points": [_fmt(p) for p, _, _ in rows], "values": [_fmt(v) for _, v, _ in rows]}


def op_root_gap(inputs):
    samples = _rationals(inputs.get("samples", "1/100,1/1000,1/10000,1/100000"), "samples")
    return min_root_gap(samples), {"samples": [_fmt(a) for a in samples]}


def _second_monomials(n: int) -> list[tuple]:
    from itertools import product
    return [m for m in product(range(3 * n - 2), repeat=n)]


def op_param_nf(inputs):
    kind = inputs.get("system", "first")
    if kind == "first":
        gens, monos, names = None, None, ["x", "y", "a"]
    else:
        n = int(inputs.get("n", 2))
        gens = second_splitting_symbolic(n)
        monos = _second_monomials(n)
        names = default_names(n) + ["a"]
    names = _vars(inputs) if inputs.get("vars") is not None else names
    f = parse_poly(str(inputs["poly"]), names)
    r = param_normal_form(f, int(inputs.get("rounds", 1)), gens=gens, monomials=monos)
    coeffs = {Polynomial.monomial(s).format(names[:-1]): p.format(names)
              for s, p in r.coefficients.items() if not p.is_zero()}
    return r.verified, {"coefficients": coeffs, "rounds": r.rounds}


def op_interpolation(inputs):
    kind = inputs.get("system", "first")
    samples = _rationals(inputs.get("samples", "1/100"), "samples")
    if kind == "first":
        factory, monos = first_splitting, FIRST_MONOMIALS
        box = _box(inputs, 2, (mpq(-1, 4), mpq(1, 4)))
    else:
        n = int(inputs.get("n", 2))
        factory, monos = (lambda a: second_splitting(n, a)), _second_monomials(n)
        box = _box(inputs, n, (mpq(-1, 2), mpq(1, 2)))
    report = interpolation_analysis(factory, monos, samples, box)
    return report.certified(), report.to_json()


OPERATIONS: dict[str, Callable] = {
    "quotient-dim": op_quotient_dim,
    "normal-form": op_normal_form,
    "member": op_member,
    "nilpotency": op_nilpotency,
    "principal-dim": op_principal_dim,
    "jacobian": op_jacobian,
    "bs-exponent": op_bs_exponent,
    "family": op_family,
    "prolong": op_prolong,
    "flat-check": op_flat_check,
    "tensor": op_tensor,
    "tensor-kernel": op_tensor_kernel,
    "pushout": op_pushout,
    "split-count": op_split_count,
    "split-enclosures": op_split_enclosures,
    "axis-zeroes": op_axis_zeroes,
    "complex-count": op_complex_count,
    "transversality": op_transversality,
    "sign-table": op_sign_table,
    "root-gap": op_root_gap,
    "param-nf": op_param_nf,
    "interpolation": op_interpolation,
}

# scenarios and reports ---------------------------------------------------------------


def _matches(expected, value) -> bool:
    """Exact comparison, rationals compared by value; ``{"within": [lo, hi]}`` is a band."""
    if isinstance(expected, dict) and set(expected) == {"within"}:
        lo, hi = expected["within"]
        return isinstance(value, (int, float)) and float(lo) <= float(value) <= float(hi)
    if isinstance(expected, dict) and set(expected) == {"contains"}:
        return _contains(expected["contains"], value)
    if isinstance(expected, dict) and isinstance(value, dict):
        return set(expected) <= set(value) and all(_matches(v, value[k]) for k, v in expected.items())
    if isinstance(expected, list) and isinstance(value, list):
        return len(expected) == len(value) and all(_matches(e, v) for e, v in zip(expected, value))
    if isinstance(expected, bool) or isinstance(value, bool) or expected is None or value is None:
        return expected is value or expected == value and type(expected) is type(value)
    if isinstance(expected, str) and isinstance(value, str):
        try:
            return mpq(expected) == mpq(value)
        except ValueError:
            return expected == value
    return expected == value


def _contains(points, enclosures) -> bool:
    """Every expected point lies in some reported enclosure box (interval containment)."""
    boxes = [[(mpq(lo), mpq(hi)) for lo, hi in e["box"]] for e in enclosures]
    for pt in points:
        q = [mpq(str(v)) for v in pt]
        if not any(all(lo <= v <= hi for v, (lo, hi) in zip(q, b)) for b in boxes):
            return False
    return True


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


_USAGE_ERRORS = (UsageError, PolynomialSyntaxError, ArityError, EmptyIdeal, KeyError, TypeError)


def run_scenario(scenario: dict) -> dict:
    """Run one scenario and return its report entry; errors never propagate."""
    name = scenario.get("name", "") if isinstance(scenario, dict) else ""
    entry: dict[str, Any] = {"name": name, "operation": None, "outcome": "error",
                             "value": None, "expected": None, "details": None, "error": None,
                             "error_kind": None, "seconds": 0.0}
    start = time.perf_counter()
    try:
        if not isinstance(scenario, dict):
            raise UsageError("a scenario must be a JSON object")
        op = scenario.get("operation")
        entry["operation"] = op
        if op not in OPERATIONS:
            raise UsageError(f"unknown operation {op!r}")
        inputs = scenario.get("inputs", {})
        if not isinstance(inputs, dict):
            raise UsageError("inputs must be a JSON object")
        value, details = OPERATIONS[op](inputs)
        entry["value"] = _json_safe(value)
        entry["details"] = _json_safe(details)
        if "expected" in scenario:
            entry["expected"] = scenario["expected"]
            entry["outcome"] = "pass" if _matches(scenario["expected"], entry["value"]) else "fail"
        else:
            entry["outcome"] = "pass"
    except Exception as exc:  # reported per entry, siblings keep running
        entry["error"] = f"{type(exc).__name__}: {exc}"
        entry["error_kind"] = "usage" if isinstance(exc, _USAGE_ERRORS) else "computation"
    entry["seconds"] = round(time.perf_counter() - start, 4)
    return entry


def run_scenarios(scenarios: Sequence[dict], jobs: int = 1) -> dict:
    if jobs > 1 and len(scenarios) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(run_scenario, scenarios))
    else:
        entries = [run_scenario(s) for s in scenarios]
    status = "pass" if all(e["outcome"] == "pass" for e in entries) else "fail"
    return {"version": __version__, "scenarios": entries, "status": status}


def load_scenarios(path: str) -> list:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    data = json.loads(text) if text.strip() else []
    if not isinstance(data, list):
        raise UsageError("a scenario file must hold a top-level JSON array")
    return data


# built-in checks ---------------------------------------------------------------------

def _xy(gens) -> dict:
    return {"vars": "x,y", "gens": list(gens)}


def paper_scenarios(mutate: bool = False) -> list[dict]:
    """The acceptance checks as scenarios.  ``mutate`` perturbs one generator of A."""
    a_gens = list(A_GENS)
    if mutate:
        a_gens[0] = "5*x^4 + 2*x*y^3"
    out: list[dict] = [
        {"name": "c01 quotient dimension of A", "operation": "quotient-dim", "inputs": _xy(a_gens), "expected": 11},
        {"name": "c02 principal ideal of [f]", "operation": "principal-dim",
         "inputs": {**_xy(a_gens), "poly": F_SIMPLE}, "expected": 1},
        {"name": "c02 nilpotency of [f]", "operation": "nilpotency",
         "inputs": {**_xy(a_gens), "poly": F_SIMPLE}, "expected": 2},
        {"name": "c03 b0 nonzero in B0", "operation": "member",
         "inputs": {**_xy(B0_GENS), "poly": B0_ELEMENT}, "expected": False},
        {"name": "c03 b0 squared vanishes", "operation": "nilpotency",
         "inputs": {**_xy(B0_GENS), "poly": B0_ELEMENT}, "expected": 2},
        {"name": "c03 principal ideal of b0", "operation": "principal-dim",
         "inputs": {**_xy(B0_GENS), "poly": B0_ELEMENT}, "expected": 1},
        {"name": "c03 b0 flat in B0 as printed", "operation": "flat-check",
         "inputs": {**_xy(B0_GENS), "poly": B0_ELEMENT, "condition": "c2"}, "expected": True},
        {"name": "c03 b0 flat with Jacobian generators", "operation": "flat-check",
         "inputs": {**_xy(B0_JACOBIAN_GENS), "poly": B0_ELEMENT, "condition": "c2"}, "expected": True},
    ]
    for n in (1, 2, 3):
        out.append({"name": f"c04 nilpotency of f_{n}", "operation": "nilpotency",
                    "inputs": {"family": n}, "expected": n})
        out.append({"name": f"c04 Milnor number of f_{n}", "operation": "jacobian",
                    "inputs": {"family": n}, "expected": {"milnor_number": (3 * n - 2) ** n}})
    for p, names, homogeneous in BS_CORPUS:
        out.append({"name": f"c05 exponent {p}", "operation": "bs-exponent",
                    "inputs": {"vars": ",".join(names), "poly": p},
                    "expected": 1 if homogeneous else {"within": [1, 64]}})
    for gens, names, e in FLAT_CORPUS:
        out.append({"name": f"c06 conditions agree on {e} mod ({'; '.join(gens)})", "operation": "flat-check",
                    "inputs": {"vars": ",".join(names), "gens": list(gens), "poly": e, "condition": "both"},
                    "expected": {"agree": True}})
    for gens, names, src, tgt, images in TENSOR_CORPUS:
        out.append({"name": f"c07 tensor kernel {src}->{tgt} over ({'; '.join(gens)})", "operation": "tensor-kernel",
                    "inputs": {"vars": ",".join(names), "gens": list(gens), "source_weil": src, "target_weil": tgt,
                               "images": images if isinstance(images, str) else list(images)},
                    "expected": True})
    for w in ("eps2", "dual2", "r"):
        gens, names = WEIL[w]
        dim = {"eps2": 2, "dual2": 4, "r": 1}[w]
        out.append({"name": f"c07 tensor dimension A x {w}", "operation": "tensor",
                    "inputs": {**_xy(a_gens), "weil_weil": w}, "expected": 11 * dim})
    for ag, av, a0, bg, bv, b0 in PUSHOUT_CORPUS:
        out.append({"name": f"c08 pushout {a0} ~ {b0}", "operation": "pushout",
                    "inputs": {"vars": ",".join(av), "gens": list(ag), "a0": a0,
                               "b_vars": ",".join(bv), "b_gens": list(bg), "b0": b0},
                    "expected": True})
    for a in ("1/100", "1/1000"):
        q = mpq(a)
        first = {"system": "first", "a": a, "box": "-1/4:1/4,-1/4:1/4"}
        out += [
            {"name": f"c09 first splitting zeroes at a={a}", "operation": "split-count",
             "inputs": first, "expected": 11},
            {"name": f"c09 first splitting transversal at a={a}", "operation": "transversality",
             "inputs": first, "expected": True},
            {"name": f"c09 first splitting complex count at a={a}", "operation": "complex-count",
             "inputs": {"system": "first", "a": a}, "expected": 16},
            {"name": f"c09 axis zeroes at a={a}", "operation": "axis-zeroes",
             "inputs": first, "expected": {"x=0": 3, "y=0": 3, "origin": 1}},
            {"name": f"c09 exact zeroes enclosed at a={a}", "operation": "split-enclosures", "inputs": first,
             "expected": {"contains": [[str(sx * q * q), str(sy * q * q)] for sx in (1, -1) for sy in (1, -1)]}},
        ]
    for a in ("1/10", "1/100"):
        out.append({"name": f"c10 sign table at a={a}", "operation": "sign-table", "inputs": {"a": a},
                    "expected": ["-", "+", "-", "+"]})
    out.append({"name": "c11 root gap exponent", "operation": "root-gap",
                "inputs": {"samples": "1/100,1/1000,1/10000,1/100000"}, "expected": {"within": [1.4, 1.6]}})
    out.append({"name": "c12 second splitting zeroes at a=1/100", "operation": "split-count",
                "inputs": {"system": "second", "n": 2, "a": "1/100", "transversal": True}, "expected": 16})
    out.append({"name": "c12 second splitting interpolation at a=1/100", "operation": "interpolation",
                "inputs": {"system": "second", "n": 2, "samples": "1/100"}, "expected": True})
    # the same checks one decade further into the small-parameter regime
    out.append({"name": "c12 second splitting zeroes at a=1/1000", "operation": "split-count",
                "inputs": {"system": "second", "n": 2, "a": "1/1000", "transversal": True}, "expected": 16})
    out.append({"name": "c12 second splitting interpolation at a=1/1000", "operation": "interpolation",
                "inputs": {"system": "second", "n": 2, "samples": "1/1000"}, "expected": True})
    for f in ("x^4", "x^2*y^2", "1", "x^6 - 3*x^2*y^3*a + y^5 + a^2*x*y + 2*x^3*y"):
        for rounds in (1, 2, 3):
            out.append({"name": f"c13 parameterised normal form of {f}, N={rounds}", "operation": "param-nf",
                        "inputs": {"poly": f, "rounds": rounds}, "expected": True})
    return out


def paper_checks(mutate: bool = False, jobs: int = 1) -> dict:
    return run_scenarios(paper_scenarios(mutate), jobs)


# argument parsing ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names, e.g. x,y")
    common.add_argument("--gens", help="generators separated by ';', or a file with one per line")
    common.add_argument("--a", help="rational parameter value, e.g. 1/100")
    common.add_argument("--box", help="closed box lo:hi,lo:hi")
    common.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    common.add_argument("--json", metavar="OUT", help="also write the report to this file")

    parser = _Parser(prog="artinlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, *extra):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kwargs in extra:
            p.add_argument(flag, **kwargs)
        return p

    poly = ("--poly", {"help": "polynomial in the given variables"})
    fam = ("--family", {"type": int, "help": "use f_n of the example family (1 <= n <= 3)"})
    system = ("--system", {"choices": ["first", "second"], "default": "first"})
    n = ("--n", {"type": int, "default": 2})
    budget = ("--budget", {"type": int, "default": DEFAULT_REFINEMENT_BUDGET})
    add("quotient-dim", "dimension and basis of the local quotient")
    add("normal-form", "normal form of a polynomial", poly)
    add("member", "ideal membership", poly)
    add("nilpotency", "nilpotency index of a class", poly, fam)
    add("principal-dim", "dimension of the principal ideal of a class", poly, fam)
    add("jacobian", "Jacobian ideal and Milnor number", poly, fam)
    add("bs-exponent", "least k with f^k in the Jacobian ideal", poly, fam)
    add("family", "print f_n", ("--n", {"type": int, "required": True}))
    add("prolong", "prolonged ideal in doubled variables")
    add("flat-check", "flatness conditions", poly, fam,
        ("--condition", {"choices": ["c1", "c2", "both"], "default": "both"}),
        ("--degree-budget", {"type": int}))
    add("tensor", "tensor product with a Weil algebra",
        ("--weil", {"choices": sorted(WEIL)}), ("--weil-vars", {}), ("--weil-gens", {}))
    add("tensor-kernel", "kernel of id (x) phi against the ideal generated by ker phi",
        ("--source", {"choices": sorted(WEIL), "required": True}),
        ("--target", {"choices": sorted(WEIL)}),
        ("--images", {"default": "augmentation",
                      "help": "augmentation, identity, or images of the source variables separated by ';'"}))
    add("pushout", "injectivity of A -> A (x) B/(a0 - b0)",
        ("--a0", {"required": True}), ("--b-vars", {"required": True}),
        ("--b-gens", {"required": True}), ("--b0", {"required": True}))
    add("split-count", "certified real zeroes of a splitting system", system, n, budget,
        ("--complex", {"action": "store_true", "help": "also report the complex count"}),
        ("--transversal", {"action": "store_true", "help": "also certify transversality"}))
    add("transversality", "certify nonzero Jacobian at every zero", system, n, budget)
    add("sign-table", "signs of h at -2a, -a/2, 0, a")
    add("root-gap", "fitted exponent of the least root gap of y h(y)",
        ("--samples", {"default": "1/100,1/1000,1/10000,1/100000"}))
    add("param-nf", "normal form with coefficients polynomial in a", poly, system, n,
        ("--rounds", {"type": int, "default": 1}))
    add("interpolation", "certified interpolation determinants at the zeroes", system, n,
        ("--samples", {"default": "1/100"}))
    add("paper-checks", "run the built-in acceptance scenarios",
        ("--mutate", {"action": "store_true", "help": "perturb a generator (harness self-test)"}),
        ("--jobs", {"type": int, "default": 1}))
    add("run", "run a scenario file", ("scenarios", {"help": "JSON array of scenarios"}),
        ("--jobs", {"type": int, "default": 1}))
    return parser


_FLAG_KEYS = ("vars", "gens", "a", "box", "poly", "family", "condition", "degree_budget", "system", "n",
              "budget", "complex", "transversal", "samples", "rounds", "a0", "b_vars", "b_gens", "b0", "images")


def _inputs_from_args(args) -> dict:
    inputs = {k: getattr(args, k) for k in _FLAG_KEYS if getattr(args, k, None) not in (None, False)}
    inputs["degree_cap"] = args.degree_cap
    cmd = args.command
    if cmd == "tensor":
        if args.weil:
            inputs["weil_weil"] = args.weil
        else:
            inputs["weil_vars"], inputs["weil_gens"] = args.weil_vars, args.weil_gens
    if cmd == "tensor-kernel":
        inputs["source_weil"] = args.source
        if args.target:
            inputs["target_weil"] = args.target
    if cmd == "family":
        inputs = {"n": args.n}
    return inputs


def _emit(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, indent=2, ensure_ascii=False)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "paper-checks":
        report = paper_checks(args.mutate, args.jobs)
    elif args.command == "run":
        try:
            scenarios = load_scenarios(args.scenarios)
        except (OSError, ValueError) as exc:
            print(f"artinlab: {exc}", file=sys.stderr)
            return EXIT_USAGE
        report = run_scenarios(scenarios, args.jobs)
    else:
        entry = run_scenario({"name": args.command, "operation": args.command, "inputs": _inputs_from_args(args)})
        report = {"version": __version__, "scenarios": [entry], "status": "pass" if entry["outcome"] == "pass" else "fail"}
        _emit(report, args.json)
        if entry["outcome"] == "error":
            print(f"artinlab: {entry['error']}", file=sys.stderr)
            return EXIT_USAGE if entry["error_kind"] == "usage" else EXIT_FAIL
        return EXIT_OK
    _emit(report, args.json)
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
