"""Time GF(p) row reduction: numba kernel against the numpy fallback.

    python benchmarks/bench_rref.py [--sizes 20 60 120] [--prime 32003] [--repeat 5]

Set ``QHALG_NUMBA=0`` to make the library itself use the numpy version; this
script times both directly regardless of that flag.
"""

import argparse
import time

import numpy as np

from qhalg import _kernels


def best_of(fn, m, p, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(m.copy(), p)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 120, 240])
    parser.add_argument("--prime", type=int, default=32003)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    impls = {"numpy": _kernels.rref_modp_numpy}
    if _kernels.HAVE_NUMBA:
        impls["numba"] = _kernels.rref_modp_numba
        _kernels.rref_modp_numba(np.eye(2, dtype=np.int64), args.prime)  # compile outside the timing
    else:
        print("numba unavailable or disabled; timing numpy only")

    print(f"{'size':>6} " + " ".join(f"{name:>12}" for name in impls))
    for n in args.sizes:
        m = rng.integers(0, args.prime, size=(n, n), dtype=np.int64)
        results = [best_of(fn, m, args.prime, args.repeat) for fn in impls.values()]
        ref = _kernels.rref_modp_numpy(m.copy(), args.prime)[0]
        for name, fn in impls.items():
            assert (fn(m.copy(), args.prime)[0] == ref).all(), name
        print(f"{n:>6} " + " ".join(f"{t * 1e3:>10.2f}ms" for t in results))


if __name__ == "__main__":
    main()
