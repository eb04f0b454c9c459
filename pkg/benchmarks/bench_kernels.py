"""Compare the compiled kernel backend against the pure-Python reference.

Both backends are imported directly, so this runs regardless of which one
the package selected. Micro benchmarks time the individual fixed-point
kernels at the default certified working precision (47 digits) and at a
deeper setting; the end-to-end row times a full sequence cell in a child
process per backend, since the backend is frozen at import time.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import os
import statistics
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ubenford.kernels import _pykernels  # noqa: E402

try:
    from ubenford.kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat, number):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(number):
            fn()
        times.append((time.perf_counter() - t0) / number)
    return min(times), statistics.median(times)


def micro_cases(impl):
    m47 = impl.pi_fixed(47)
    m300 = impl.pi_fixed(300)
    x47 = 123 * 10 ** 47 + m47  # ~53 decades
    big = 7 ** 5000
    return [
        ("dec_digits(7^5000)", 2000, lambda: impl.dec_digits(big)),
        ("ln_fixed p=47", 400, lambda: impl.ln_fixed(m47, 47)),
        ("ln_fixed p=300", 40, lambda: impl.ln_fixed(m300, 300)),
        ("exp_fixed p=47", 200, lambda: impl.exp_fixed(x47, 47)),
        ("pow_fixed n=1000 p=47", 200, lambda: impl.pow_fixed(m47, 47, 1000)),
        ("pi_fixed p=500", 10, lambda: impl.pi_fixed(500)),
    ]


def end_to_end(pure):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(Path(__file__).resolve().parents[1] / "src")
    if pure:
        env["UBENFORD_PURE_PYTHON"] = "1"
    else:
        env.pop("UBENFORD_PURE_PYTHON", None)
    code = (
        "import time\n"
        "from ubenford.kernels import BACKEND\n"
        "from ubenford.experiments import ks_cell\n"
        "from ubenford.transforms import LOGLOG\n"
        "ks_cell('factorial', LOGLOG, 100)\n"  # warm constant caches
        "t0 = time.perf_counter()\n"
        "cell = ks_cell('factorial', LOGLOG, 1000)\n"
        "print(BACKEND, time.perf_counter() - t0, cell.statistic)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    backend, seconds, stat = out.stdout.split()
    return backend, float(seconds), stat


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5,
                    help="timing repetitions per case (best is reported)")
    ap.add_argument("--quick", action="store_true",
                    help="skip the end-to-end sequence cell")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled backend not built; nothing to compare")
        return 1

    header = (f"{'kernel':<22} {'python':>12} {'compiled':>12} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    py_cases = micro_cases(_pykernels)
    c_cases = micro_cases(_ckernels)
    for (label, number, py_fn), (_, _, c_fn) in zip(py_cases, c_cases):
        py_best, _ = best_of(py_fn, args.repeat, number)
        c_best, _ = best_of(c_fn, args.repeat, number)
        print(f"{label:<22} {py_best * 1e6:>10.1f}us {c_best * 1e6:>10.1f}us "
              f"{py_best / c_best:>7.2f}x")

    if not args.quick:
        print()
        backend_py, secs_py, stat_py = end_to_end(pure=True)
        backend_c, secs_c, stat_c = end_to_end(pure=False)
        assert (backend_py, backend_c) == ("python", "compiled")
        assert stat_py == stat_c, "backends disagreed on the statistic"
        print(f"{'factorial loglog N=1000':<22} {secs_py:>11.2f}s "
              f"{secs_c:>11.2f}s {secs_py / secs_c:>7.2f}x")
        print(f"(identical KS statistic from both backends: {stat_py})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
