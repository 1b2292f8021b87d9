"""Test-local oracles, kept independent of the library's code paths.

The rank routine uses fraction-free elimination on numpy arrays (no modular
inverses, no Gauss-Jordan); the structure tensors for matrix algebras are
rebuilt from numpy matrix products rather than the library's constructors.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np


def modp_rank(rows, p) -> int:
    """Rank over GF(p) by fraction-free forward elimination."""
    a = np.array([list(r) for r in rows], dtype=np.int64) % p
    if a.size == 0:
        return 0
    nr, nc = a.shape
    rank = 0
    for c in range(nc):
        piv = None
        for r in range(rank, nr):
            if a[r, c] % p:
                piv = r
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        below = a[rank + 1 :, c] % p != 0
        if below.any():
            a[rank + 1 :][below] = (
                a[rank + 1 :][below] * int(a[rank, c]) - np.outer(a[rank + 1 :, c][below], a[rank])
            ) % p
        rank += 1
        if rank == nr:
            break
    return rank


def matrix_unit_tensor(n, p):
    """Structure tensor of the n x n matrix algebra over GF(p), computed by
    multiplying numpy matrix units."""
    d = n * n
    units = []
    for r in range(n):
        for c in range(n):
            e = np.zeros((n, n), dtype=np.int64)
            e[r, c] = 1
            units.append(e)
    tensor = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            prod = (units[i] @ units[j]) % p
            tensor[i, j] = prod.reshape(d)
    return tensor


def derivation_nullity(tensor, p) -> int:
    """Dimension of the solution space of the product rule for the given
    structure tensor, assembled with einsum over all basis pairs."""
    d = tensor.shape[0]
    eye = np.eye(d, dtype=np.int64)
    block = (
        np.einsum("ijs,kr->ijkrs", tensor, eye)
        - np.einsum("rjk,si->ijkrs", tensor, eye)
        - np.einsum("irk,sj->ijkrs", tensor, eye)
    ) % p
    system = block.reshape(d * d * d, d * d)
    return d * d - modp_rank(system, p)


def all_gf_matrices(n, p):
    """Every n x n matrix over GF(p) as a numpy array."""
    for flat in itertools.product(range(p), repeat=n * n):
        yield np.array(flat, dtype=np.int64).reshape(n, n)


def center_size_brute(n, p) -> int:
    """Number of n x n matrices over GF(p) commuting with all matrices
    (checked against the n*n matrix units, which span)."""
    basis = []
    for r in range(n):
        for c in range(n):
            e = np.zeros((n, n), dtype=np.int64)
            e[r, c] = 1
            basis.append(e)
    count = 0
    for x in all_gf_matrices(n, p):
        if all(((x @ e - e @ x) % p == 0).all() for e in basis):
            count += 1
    return count


def idempotent_count_brute(n, p) -> int:
    return sum(1 for x in all_gf_matrices(n, p) if ((x @ x - x) % p == 0).all())


def random_fraction_matrix(rng: random.Random, rows, cols, span=6):
    return [
        [Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(cols)]
        for _ in range(rows)
    ]


def random_int_matrix(rng: random.Random, rows, cols, p):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
