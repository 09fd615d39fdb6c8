"""Hot loops behind the mass verification sweeps.

Two implementations of each kernel: a numba-jitted scalar loop and a
vectorized numpy fallback.  SEMLINK_KERNELS=numpy forces the fallback,
SEMLINK_KERNELS=numba insists on jit (raising if numba is absent), anything
else tries numba first.  Both paths do the honest arithmetic, including the
Kronecker folds and matrix products; nothing is shortcut to a table lookup.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


def active_backend(override: "str | None" = None) -> str:
    choice = (override or os.environ.get("SEMLINK_KERNELS", "auto")).lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("SEMLINK_KERNELS=numba but numba is not importable")
        return "numba"
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# operator faithfulness sweep
#
# For every table: synthesize the 2 x 2^n matrix, then for every input tuple
# fold the embedded bits into a basis vector, multiply, demand a one-hot
# result that projects back to the table's output bit.


@njit(cache=True)
def _faithfulness_nb(tables: np.ndarray, arity: int) -> int:  # pragma: no cover - jit
    m, dim = tables.shape
    mat = np.zeros((2, dim), dtype=np.int64)
    vec = np.zeros(dim, dtype=np.int64)
    for t in range(m):
        for j in range(dim):
            out = tables[t, j]
            mat[0, j] = out
            mat[1, j] = 1 - out
        for j in range(dim):
            for k in range(dim):
                vec[k] = 0
            vec[0] = 1
            size = 1
            for i in range(arity):
                bit = 1 - ((j >> (arity - 1 - i)) & 1)
                for k in range(size - 1, -1, -1):
                    val = vec[k]
                    vec[2 * k] = val * bit
                    vec[2 * k + 1] = val * (1 - bit)
                size *= 2
            r0 = 0
            r1 = 0
            for k in range(dim):
                r0 += mat[0, k] * vec[k]
                r1 += mat[1, k] * vec[k]
            if r0 + r1 != 1 or r0 * r1 != 0:
                return t
            if r0 != tables[t, j]:
                return t
    return -1


def _fold_basis(arity: int) -> np.ndarray:
    """Row j is the Kronecker fold of the embedded input bits of column j."""
    ncols = 1 << arity
    cols = np.arange(ncols, dtype=np.int64)
    fold = np.ones((ncols, 1), dtype=np.int64)
    for i in range(arity):
        bits = 1 - ((cols >> (arity - 1 - i)) & 1)
        embedded = np.stack([bits, 1 - bits], axis=1)
        fold = (fold[:, :, None] * embedded[:, None, :]).reshape(ncols, -1)
    return fold


def _faithfulness_np(tables: np.ndarray, arity: int) -> int:
    fold = _fold_basis(arity)
    t64 = tables.astype(np.int64)
    r0 = t64 @ fold.T
    r1 = (1 - t64) @ fold.T
    bad = (r0 + r1 != 1) | (r0 * r1 != 0) | (r0 != t64)
    hits = np.nonzero(bad.any(axis=1))[0]
    return int(hits[0]) if hits.size else -1


def faithfulness_sweep(tables: np.ndarray, arity: int,
                       backend: "str | None" = None) -> int:
    """Index of the first table violating project(apply(synth)) = table, or -1."""
    tb = np.ascontiguousarray(np.asarray(tables, dtype=np.int8))
    if tb.ndim != 2 or tb.shape[1] != (1 << arity):
        raise ValueError(f"expected (m, {1 << arity}) tables for arity {arity}")
    if active_backend(backend) == "numba":
        return int(_faithfulness_nb(tb, arity))
    return _faithfulness_np(tb, arity)


# ---------------------------------------------------------------------------
# majority polynomial, evaluated on every input tuple
#
# The polynomial is the disjoint sum over subsets of size above n/2 of the
# product of chosen inputs and complemented others.  Both paths really form
# those products; neither takes the popcount shortcut.


@njit(cache=True)
def _majority_poly_nb(n: int) -> np.ndarray:  # pragma: no cover - jit
    ncols = 1 << n
    out = np.zeros(ncols, dtype=np.int64)
    half = n // 2
    for j in range(ncols):
        acc = 0
        for mask in range(ncols):
            pc = 0
            mm = mask
            while mm:
                pc += mm & 1
                mm >>= 1
            if pc <= half:
                continue
            prod = 1
            for i in range(n):
                ti = 1 - ((j >> (n - 1 - i)) & 1)
                if (mask >> i) & 1:
                    prod *= ti
                else:
                    prod *= 1 - ti
            acc += prod
        out[j] = acc
    return out


def _majority_poly_np(n: int) -> np.ndarray:
    ncols = 1 << n
    cols = np.arange(ncols, dtype=np.int64)
    bits = np.stack([1 - ((cols >> (n - 1 - i)) & 1) for i in range(n)], axis=1)
    acc = np.zeros(ncols, dtype=np.int64)
    for mask in range(ncols):
        if bin(mask).count("1") <= n // 2:
            continue
        prod = np.ones(ncols, dtype=np.int64)
        for i in range(n):
            prod *= bits[:, i] if (mask >> i) & 1 else 1 - bits[:, i]
        acc += prod
    return acc


def majority_polynomial_all(n: int, backend: "str | None" = None) -> np.ndarray:
    """Polynomial value for every input tuple, in column order."""
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if active_backend(backend) == "numba":
        return np.asarray(_majority_poly_nb(n))
    return _majority_poly_np(n)


# ---------------------------------------------------------------------------
# relation biconditional sweep
#
# masks[r] is the membership table of relation r over all arity-tuples in
# lexicographic order.  For each tuple the kernel builds the one-hot vectors
# of its components, validates them, recovers the indices, and compares the
# lifted verdict with extensional membership, both directions.


@njit(cache=True)
def _relation_sweep_nb(masks: np.ndarray, d: int, arity: int) -> int:  # pragma: no cover - jit
    m, ntup = masks.shape
    vec = np.zeros(d, dtype=np.int64)
    for r in range(m):
        for tau in range(ntup):
            recon = 0
            ok = True
            rem = tau
            div = ntup // d
            for pos in range(arity):
                comp = rem // div
                rem = rem % div
                if pos < arity - 1:
                    div //= d
                for k in range(d):
                    vec[k] = 0
                vec[comp] = 1
                total = 0
                hot = -1
                for k in range(d):
                    if vec[k] == 1:
                        hot = k
                    total += vec[k]
                if total != 1:
                    ok = False
                    break
                recon = recon * d + hot
            if not ok:
                return r * ntup + tau
            lifted = masks[r, recon]
            direct = masks[r, tau]
            if lifted != direct:
                return r * ntup + tau
    return -1


def _relation_sweep_np(masks: np.ndarray, d: int, arity: int) -> int:
    m, ntup = masks.shape
    taus = np.arange(ntup, dtype=np.int64)
    recon = np.zeros(ntup, dtype=np.int64)
    rem = taus.copy()
    div = ntup // d
    for pos in range(arity):
        comp = rem // div
        rem = rem % div
        if pos < arity - 1:
            div //= d
        onehot = np.zeros((ntup, d), dtype=np.int64)
        onehot[taus, comp] = 1
        if not ((onehot.sum(axis=1) == 1).all()):
            return 0
        recon = recon * d + onehot.argmax(axis=1)
    lifted = masks[:, recon]
    bad = lifted != masks
    if bad.any():
        r, tau = np.argwhere(bad)[0]
        return int(r) * ntup + int(tau)
    return -1


def relation_sweep(masks: np.ndarray, d: int, arity: int,
                   backend: "str | None" = None) -> int:
    """First (relation, tuple) pair where the lifted verdict and extensional
    membership disagree, encoded as relation_index * n_tuples + tuple_index,
    or -1 when every pair agrees."""
    mk = np.ascontiguousarray(np.asarray(masks, dtype=np.int8))
    if mk.ndim != 2 or mk.shape[1] != d ** arity:
        raise ValueError(f"expected (m, {d ** arity}) masks for arity {arity} over {d} elements")
    if active_backend(backend) == "numba":
        return int(_relation_sweep_nb(mk, d, arity))
    return _relation_sweep_np(mk, d, arity)


def warmup(backend: "str | None" = None):
    """Compile the jitted kernels on tiny inputs so timing is honest later."""
    if active_backend(backend) != "numba":
        return
    faithfulness_sweep(np.array([[1, 0]], dtype=np.int8), 1, backend="numba")
    majority_polynomial_all(1, backend="numba")
    relation_sweep(np.array([[1, 0]], dtype=np.int8), 2, 1, backend="numba")
