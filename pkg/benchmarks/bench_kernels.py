"""Compare the compiled and pure-Python Jacobi kernels.

    python3 benchmarks/bench_kernels.py [--sizes 4,8,16,32,64] [--repeat 5]

Reports the best-of-``repeat`` time per call for random Hermitian matrices,
the speedup, and the largest eigenvalue difference between kernels. The
last row times one Wootters concurrence (a 4x4 and an 8x8 solve) through
the package with each kernel selected.
"""
import argparse
import timeit

import numpy as np

from dualmono import _backend, measures, sampler, states


def random_hermitian(rng, n):
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return x + x.conj().T


def best_time(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,16,32,64")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if _backend.jacobi_eigh_ext is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    py, ext = _backend.jacobi_eigh_py, _backend.jacobi_eigh_ext
    rng = np.random.default_rng(0)

    print(f"{'n':>6} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8} {'max |dw|':>10}")
    for n in (int(s) for s in args.sizes.split(",")):
        h = random_hermitian(rng, n)
        t_py = best_time(lambda: py(h), args.repeat)
        t_ext = best_time(lambda: ext(h), args.repeat)
        dw = np.max(np.abs(np.sort(py(h)[0]) - np.sort(ext(h)[0])))
        print(f"{n:>6} {1e3 * t_py:>12.4f} {1e3 * t_ext:>12.4f} {t_py / t_ext:>8.1f} {dw:>10.1e}")

    psi = next(sampler.haar_pure(sampler.SampleSpec(2, seed=1)))
    rho = states.density_of(psi)
    times = {}
    for name, kernel in (("python", py), ("cython", ext)):
        _backend.jacobi_eigh = kernel
        times[name] = best_time(lambda: measures.concurrence_2q_mixed(rho), args.repeat)
    print(f"{'C(rho)':>6} {1e3 * times['python']:>12.4f} {1e3 * times['cython']:>12.4f} "
          f"{times['python'] / times['cython']:>8.1f}")


if __name__ == "__main__":
    main()
