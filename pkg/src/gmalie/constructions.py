"""Reusable builders for algebras, bimodules, and Morita contexts: matrix
and triangular algebras, small commutative algebras, trivial (zero-pairing)
contexts, and combinators (direct sums, pairing twists, transposes) used by
the bundled example library and the fuzzer."""

from __future__ import annotations

from .algebra import FDAlgebra
from .errors import DimensionMismatch
from .fields import Field
from .morita import Bimodule, MoritaContext

__all__ = [
    "field_algebra",
    "matrix_algebra",
    "upper_triangular_algebra",
    "dual_numbers",
    "split_pair_algebra",
    "truncated_polynomial_algebra",
    "two_nilpotents_algebra",
    "regular_bimodule",
    "left_regular_bimodule",
    "right_regular_bimodule",
    "zero_bimodule",
    "trivial_context",
    "triangular_context",
    "ambient_commutative_context",
    "direct_sum_context",
    "scale_pairings",
    "transpose_context",
]


# -- algebras --------------------------------------------------------------------


def field_algebra(f: Field) -> FDAlgebra:
    """The base field as a one-dimensional algebra."""
    return FDAlgebra(f, 1, (((f.one,),),), (f.one,))


def matrix_algebra(f: Field, n: int) -> FDAlgebra:
    """Full matrix algebra with matrix-unit basis e_(r,c) at index r*n + c."""
    if n < 1:
        raise DimensionMismatch("matrix algebra size must be positive")
    d = n * n
    z, o = f.zero, f.one
    tensor = [[[z] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        tensor[a * n + b][c * n + e][a * n + e] = o
    unit = [z] * d
    for r in range(n):
        unit[r * n + r] = o
    return FDAlgebra(f, d, tensor, unit)


def upper_triangular_algebra(f: Field, n: int) -> FDAlgebra:
    """Upper-triangular matrices; basis e_(r,c) for r <= c in row order."""
    pairs = [(r, c) for r in range(n) for c in range(r, n)]
    index = {rc: k for k, rc in enumerate(pairs)}
    d = len(pairs)
    z, o = f.zero, f.one
    tensor = [[[z] * d for _ in range(d)] for _ in range(d)]
    for (a, b), i in index.items():
        for (c, e), j in index.items():
            if b == c:
                tensor[i][j][index[(a, e)]] = o
    unit = [z] * d
    for r in range(n):
        unit[index[(r, r)]] = o
    return FDAlgebra(f, d, tensor, unit)


def dual_numbers(f: Field) -> FDAlgebra:
    """F[x] / (x^2) with basis (1, x)."""
    return truncated_polynomial_algebra(f, 2)


def truncated_polynomial_algebra(f: Field, k: int) -> FDAlgebra:
    """F[x] / (x^k) with basis (1, x, ..., x^(k-1))."""
    z, o = f.zero, f.one
    tensor = [[[z] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i + j < k:
                tensor[i][j][i + j] = o
    unit = [o] + [z] * (k - 1)
    return FDAlgebra(f, k, tensor, unit)


def split_pair_algebra(f: Field) -> FDAlgebra:
    """F x F with componentwise product; basis of the two idempotents."""
    z, o = f.zero, f.one
    tensor = (((o, z), (z, z)), ((z, z), (z, o)))
    return FDAlgebra(f, 2, tensor, (o, o))


def two_nilpotents_algebra(f: Field) -> FDAlgebra:
    """Commutative algebra with basis (1, x, y) where x and y square to zero
    and annihilate each other."""
    z, o = f.zero, f.one
    tensor = [[[z] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        tensor[0][i][i] = o
        tensor[i][0][i] = o
    return FDAlgebra(f, 3, tensor, (o, z, z))


# -- bimodules --------------------------------------------------------------------


def _mult_action(alg: FDAlgebra):
    """Action tensor of an algebra multiplying itself."""
    return alg.structure


def regular_bimodule(alg: FDAlgebra) -> Bimodule:
    """The algebra as a bimodule over itself by multiplication."""
    return Bimodule(alg, alg, alg.dim, _mult_action(alg), _mult_action(alg))


def left_regular_bimodule(alg: FDAlgebra, right: FDAlgebra) -> Bimodule:
    """The algebra as a left module over itself; the right algebra must be
    one-dimensional and acts by scalars (its unit acting as the identity)."""
    if right.dim != 1:
        raise DimensionMismatch("scalar right action needs a one-dimensional algebra")
    f = alg.field
    lam = f.inv(right.unit[0])
    right_action = tuple(
        (tuple(f.mul(lam, x) for x in alg.basis_vector(i)),) for i in range(alg.dim)
    )
    return Bimodule(alg, right, alg.dim, _mult_action(alg), right_action)


def right_regular_bimodule(left: FDAlgebra, alg: FDAlgebra) -> Bimodule:
    """The algebra as a right module over itself with a scalar left action."""
    if left.dim != 1:
        raise DimensionMismatch("scalar left action needs a one-dimensional algebra")
    f = alg.field
    lam = f.inv(left.unit[0])
    left_action = (
        tuple(tuple(f.mul(lam, x) for x in alg.basis_vector(j)) for j in range(alg.dim)),
    )
    return Bimodule(left, alg, alg.dim, left_action, _mult_action(alg))


def zero_bimodule(left: FDAlgebra, right: FDAlgebra) -> Bimodule:
    return Bimodule(left, right, 0, tuple(() for _ in range(left.dim)), ())


def _zero_pairing(f: Field, d1: int, d2: int, out: int):
    z = f.zero
    return tuple(tuple((z,) * out for _ in range(d2)) for _ in range(d1))


# -- contexts ---------------------------------------------------------------------


def trivial_context(a, b, m: Bimodule, n: Bimodule) -> MoritaContext:
    """Context with both pairings zero."""
    f = a.field
    return MoritaContext(
        a,
        b,
        m,
        n,
        _zero_pairing(f, m.dim, n.dim, a.dim),
        _zero_pairing(f, n.dim, m.dim, b.dim),
    )


def triangular_context(a, m: Bimodule, b) -> MoritaContext:
    """Upper-triangular context: lower module zero, pairings zero."""
    return trivial_context(a, b, m, zero_bimodule(b, a))


def ambient_commutative_context(f: Field) -> MoritaContext:
    """The trivial context built inside the two-nilpotents algebra: both
    diagonal algebras are two-dimensional subalgebras (spanned by the unit
    and one nilpotent each), both modules are the full three-dimensional
    ambient algebra with multiplication actions, and the pairings vanish."""
    z, o = f.zero, f.one
    amb = two_nilpotents_algebra(f)
    # subalgebra bases inside the ambient coordinates
    a_basis = ((o, z, z), (z, o, z))
    b_basis = ((o, z, z), (z, z, o))

    def subalgebra(basis):
        tensor = []
        for x in basis:
            plane = []
            for y in basis:
                prod = amb.multiply(x, y)
                plane.append(_ambient_coords(prod, basis))
            tensor.append(tuple(plane))
        # (r + s*nil)^2 = r^2 + 2rs*nil forces r in {0,1} and s = 0, so the
        # idempotents are exactly 0 and 1 over any two-torsion free field
        return FDAlgebra(
            f,
            len(basis),
            tuple(tensor),
            _ambient_coords(amb.unit, basis),
            idempotents_complete=f.characteristic != 2,
        )

    def _ambient_coords(vec, basis):
        # bases here are subsets of the ambient basis; read coordinates off
        out = []
        for b in basis:
            idx = b.index(o)
            out.append(vec[idx])
        return tuple(out)

    alg_a = subalgebra(a_basis)
    alg_b = subalgebra(b_basis)

    def action_left(basis_left):
        return tuple(
            tuple(amb.multiply(x, amb.basis_vector(j)) for j in range(3))
            for x in basis_left
        )

    def action_right(basis_right):
        return tuple(
            tuple(amb.multiply(amb.basis_vector(i), y) for y in basis_right)
            for i in range(3)
        )

    mod_m = Bimodule(alg_a, alg_b, 3, action_left(a_basis), action_right(b_basis))
    mod_n = Bimodule(alg_b, alg_a, 3, action_left(b_basis), action_right(a_basis))
    return trivial_context(alg_a, alg_b, mod_m, mod_n)


def direct_sum_context(c1: MoritaContext, c2: MoritaContext) -> MoritaContext:
    """Blockwise direct sum; every axiom holds componentwise."""
    if c1.field != c2.field:
        raise DimensionMismatch("direct sum needs a common field")
    f = c1.field
    a = _direct_sum_algebra(c1.a, c2.a)
    b = _direct_sum_algebra(c1.b, c2.b)
    m = _direct_sum_bimodule(a, b, c1.m, c2.m)
    n = _direct_sum_bimodule(b, a, c1.n, c2.n)
    pair_mn = _direct_sum_pairing(f, c1.pair_mn, c2.pair_mn,
                                  (c1.m.dim, c2.m.dim), (c1.n.dim, c2.n.dim),
                                  (c1.a.dim, c2.a.dim))
    pair_nm = _direct_sum_pairing(f, c1.pair_nm, c2.pair_nm,
                                  (c1.n.dim, c2.n.dim), (c1.m.dim, c2.m.dim),
                                  (c1.b.dim, c2.b.dim))
    return MoritaContext(a, b, m, n, pair_mn, pair_nm)


def _direct_sum_algebra(x: FDAlgebra, y: FDAlgebra) -> FDAlgebra:
    f = x.field
    z = f.zero
    d = x.dim + y.dim
    tensor = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(x.dim):
        for j in range(x.dim):
            for k in range(x.dim):
                tensor[i][j][k] = x.structure[i][j][k]
    for i in range(y.dim):
        for j in range(y.dim):
            for k in range(y.dim):
                tensor[x.dim + i][x.dim + j][x.dim + k] = y.structure[i][j][k]
    unit = tuple(x.unit) + tuple(y.unit)
    return FDAlgebra(f, d, tensor, unit)


def _direct_sum_bimodule(left, right, m1: Bimodule, m2: Bimodule) -> Bimodule:
    f = left.field
    z = f.zero
    dl1, dl2 = m1.left.dim, m2.left.dim
    dr1, dr2 = m1.right.dim, m2.right.dim
    dm = m1.dim + m2.dim
    la = [[[z] * dm for _ in range(dm)] for _ in range(dl1 + dl2)]
    for i in range(dl1):
        for j in range(m1.dim):
            for k in range(m1.dim):
                la[i][j][k] = m1.left_action[i][j][k]
    for i in range(dl2):
        for j in range(m2.dim):
            for k in range(m2.dim):
                la[dl1 + i][m1.dim + j][m1.dim + k] = m2.left_action[i][j][k]
    ra = [[[z] * dm for _ in range(dr1 + dr2)] for _ in range(dm)]
    for i in range(m1.dim):
        for j in range(dr1):
            for k in range(m1.dim):
                ra[i][j][k] = m1.right_action[i][j][k]
    for i in range(m2.dim):
        for j in range(dr2):
            for k in range(m2.dim):
                ra[m1.dim + i][dr1 + j][m1.dim + k] = m2.right_action[i][j][k]
    return Bimodule(left, right, dm, la, ra)


def _direct_sum_pairing(f, t1, t2, dims1, dims2, out_dims):
    z = f.zero
    d1 = dims1[0] + dims1[1]
    d2 = dims2[0] + dims2[1]
    out = out_dims[0] + out_dims[1]
    tensor = [[[z] * out for _ in range(d2)] for _ in range(d1)]
    for i in range(dims1[0]):
        for j in range(dims2[0]):
            for k in range(out_dims[0]):
                tensor[i][j][k] = t1[i][j][k]
    for i in range(dims1[1]):
        for j in range(dims2[1]):
            for k in range(out_dims[1]):
                tensor[dims1[0] + i][dims2[0] + j][out_dims[0] + k] = t2[i][j][k]
    return tensor


def scale_pairings(c: MoritaContext, factor) -> MoritaContext:
    """Scale both pairings by the same factor; the axioms are preserved
    because each appearance of a pairing is linear."""
    f = c.field
    factor = f.of(factor)

    def scaled(tensor):
        return tuple(
            tuple(tuple(f.mul(factor, x) for x in row) for row in plane)
            for plane in tensor
        )

    return MoritaContext(c.a, c.b, c.m, c.n, scaled(c.pair_mn), scaled(c.pair_nm))


def transpose_context(c: MoritaContext) -> MoritaContext:
    """Swap the roles of the two diagonal algebras and the two modules."""
    return MoritaContext(c.b, c.a, c.n, c.m, c.pair_nm, c.pair_mn)
