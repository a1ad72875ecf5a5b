"""Compare the compiled and pure-Python kernel backends on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json OUT]

Each workload is timed with both backends (best of N runs) and the result
of every run is compared across backends, so the benchmark doubles as a
parity check.
"""
from __future__ import annotations

import argparse
import json
import time

from gmpy2 import mpq

from artinlab import bs_exponent, family, jacobian_data, parse_poly, quotient
from artinlab import kernels
from artinlab.corpus import A_GENS, BS_CORPUS, XY
from artinlab.splitting import BoxRegion, count_real_roots, first_splitting, param_normal_form


def _quotient_a():
    return quotient(A_GENS, XY).dim


def _dense_quotient():
    gens = ("x^5 + y^3*z + 2*x*y*z^2 + z^6", "y^5 + x^2*z^2 - x*y^3 + 3*z^5", "z^5 + x^3*y - y^2*z^2 + x^4")
    return quotient(gens, ("x", "y", "z")).dim


def _milnor_family3():
    return jacobian_data(family(3)).milnor_number


def _bs_corpus():
    return [bs_exponent(parse_poly(text, names)) for text, names, _ in BS_CORPUS]


def _first_splitting_count():
    count, _ = count_real_roots(first_splitting(mpq(1, 1000)), BoxRegion.square(mpq(-1, 4), mpq(1, 4)))
    return count


def _param_nf():
    return param_normal_form(parse_poly("x^4 + x^3*y^3", ["x", "y", "a"]), 3).verified


WORKLOADS = {
    "quotient A": _quotient_a,
    "Milnor algebra f_3": _milnor_family3,
    "exponent corpus": _bs_corpus,
    "first splitting count": _first_splitting_count,
    "normal form in a, 3 rounds": _param_nf,
    "dense quotient in 3 variables": _dense_quotient,
}


def time_workload(fn, repeat: int):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def run(repeat: int = 3) -> list[dict]:
    backends = kernels.available_backends()
    saved = kernels.BACKEND
    rows = []
    try:
        for name, fn in WORKLOADS.items():
            row = {"workload": name}
            values = {}
            for backend in backends:
                kernels.use_backend(backend)
                row[backend], values[backend] = time_workload(fn, repeat)
            row["agree"] = len({repr(v) for v in values.values()}) == 1
            if "cython" in row:
                row["speedup"] = row["python"] / row["cython"] if row["cython"] else None
            rows.append(row)
    finally:
        kernels.use_backend(saved)
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", metavar="OUT")
    args = parser.parse_args(argv)
    rows = run(args.repeat)
    print(f"{'workload':30s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}  agree")
    for r in rows:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'n/a':>10s}"
        sp = f"{r['speedup']:8.2f}" if r.get("speedup") else f"{'n/a':>8s}"
        print(f"{r['workload']:30s} {r['python']:10.4f} {cy} {sp}  {r['agree']}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
