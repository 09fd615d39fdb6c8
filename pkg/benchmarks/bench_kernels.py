"""Time the jitted kernels against the vectorized numpy fallback.

Run:  python benchmarks/bench_kernels.py
"""

import timeit

import numpy as np

from semlink import _kernels as k
from semlink.laws import all_relation_masks
from semlink.sampling import make_rng, random_truth_tables


def bench(label, fn, number=5):
    best = min(timeit.repeat(fn, number=number, repeat=3)) / number
    print(f"{label:<44} {best * 1e3:9.2f} ms")
    return best


def main():
    rng = make_rng(0)
    tables4 = random_truth_tables(rng, 4, 10_000)
    tables6 = random_truth_tables(rng, 6, 2_000)
    masks = all_relation_masks(4, 2)

    if k.HAVE_NUMBA:
        k.warmup(backend="numba")
    else:
        print("numba not importable, fallback only")

    pairs = [
        ("faithfulness sweep, 10k tables arity 4",
         lambda b: k.faithfulness_sweep(tables4, 4, backend=b)),
        ("faithfulness sweep, 2k tables arity 6",
         lambda b: k.faithfulness_sweep(tables6, 6, backend=b)),
        ("majority polynomial, all inputs n=7",
         lambda b: k.majority_polynomial_all(7, backend=b)),
        ("relation biconditional, 65536 relations d=4",
         lambda b: k.relation_sweep(masks, 4, 2, backend=b)),
    ]

    for label, fn in pairs:
        t_np = bench(f"{label} [numpy]", lambda: fn("numpy"))
        if k.HAVE_NUMBA:
            t_nb = bench(f"{label} [numba]", lambda: fn("numba"))
            print(f"{'':<44} speedup x{t_np / t_nb:.1f}")

    # agreement spot check while we are here
    assert k.faithfulness_sweep(tables4, 4, backend="numpy") == -1
    if k.HAVE_NUMBA:
        assert k.faithfulness_sweep(tables4, 4, backend="numba") == -1
        assert np.array_equal(k.majority_polynomial_all(7, backend="numpy"),
                              k.majority_polynomial_all(7, backend="numba"))
    print("backends agree")


if __name__ == "__main__":
    main()
