"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import cmath
import math
import timeit

from qbrach import kernels, stark

AC = stark.AcStarkParams(E=1.0, V=2.0, phi=0.3, omega_drive=1.0)


def _hfun(t):
    return stark.ac_hamiltonian(AC, t).ravel().tolist()


_COUPLING = AC.V * cmath.exp(-1j * AC.phi)


def _tuple_hfun(t):
    # same Hamiltonian as _hfun without the numpy round trip
    c = _COUPLING * math.cos(AC.omega_drive * t)
    return (AC.E, c, c.conjugate(), -AC.E)


def cases(impl):
    m = (0.3 + 0.1j, -0.2j, 0.7 + 0j, -0.3 + 0.4j)
    return {
        "expm2_entries x1e4": lambda: [impl.expm2_entries(*m) for _ in range(10_000)],
        "propagate AC, 10 periods": lambda: impl.propagate(_hfun, 0.0, 10 * AC.period, AC.period / 256, 1e-10, 10 ** 6),
        "propagate AC, light callback": lambda: impl.propagate(_tuple_hfun, 0.0, 10 * AC.period,
                                                               AC.period / 256, 1e-10, 10 ** 6),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (selected: {kernels.BACKEND})")
    table = {}
    for name, impl in backends.items():
        for label, fn in cases(impl).items():
            table.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    width = max(map(len, table))
    print(f"{'case':<{width}}  " + "  ".join(f"{n:>10s}" for n in backends) + "   speedup")
    for label, row in table.items():
        times = "  ".join(f"{row[n] * 1e3:8.1f}ms" for n in backends)
        speed = row["python"] / row["cython"] if "cython" in row else float("nan")
        print(f"{label:<{width}}  {times}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
