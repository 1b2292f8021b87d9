"""Finite-dimensional unital associative algebras from structure constants,
and the structural analyses every hypothesis check quantifies over: center,
commutator span, central ideals, zero divisors, idempotents, and the
subalgebra generated by commutators and idempotents.

Elements are coordinate columns (tuples) in the fixed basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, ValidationFailure, Violation
from .fields import Field
from .linalg import Matrix, Subspace, kernel
from .tristate import TriState

DEFAULT_BUDGET = 10**6

__all__ = [
    "FDAlgebra",
    "IdempotentScan",
    "GeneratedSubalgebra",
    "StructureReport",
    "structure_violations",
    "commutation_operator",
    "center",
    "commutator_span",
    "central_ideal_subspace",
    "central_ideal_free",
    "domain_scan",
    "enumerate_idempotents",
    "subalgebra_closure",
    "commutator_idempotent_subalgebra",
    "analyze_algebra",
    "DEFAULT_BUDGET",
]


def _canonical_tensor(field, tensor, shape):
    """Coerce a rank-3 tensor to canonical nested tuples, checking its shape."""
    d0, d1, d2 = shape
    if len(tensor) != d0:
        raise DimensionMismatch(f"tensor has {len(tensor)} slices, expected {d0}")
    out = []
    for i, plane in enumerate(tensor):
        if len(plane) != d1:
            raise DimensionMismatch(f"tensor slice {i} has {len(plane)} rows, expected {d1}")
        rows = []
        for j, row in enumerate(plane):
            if len(row) != d2:
                raise DimensionMismatch(
                    f"tensor entry [{i}][{j}] has length {len(row)}, expected {d2}"
                )
            rows.append(tuple(field.of(x) for x in row))
        out.append(tuple(rows))
    return tuple(out)


@dataclass(frozen=True)
class FDAlgebra:
    """Unital associative algebra: e_i * e_j = sum_k structure[i][j][k] e_k.

    Associativity and the unit laws are validated at construction; an
    invalid tensor raises :class:`ValidationFailure` naming the indices.
    ``declared_idempotents`` feed the enumeration over infinite fields;
    ``idempotents_complete`` is a caller assertion that the declared list
    (plus 0 and 1) is exhaustive.
    """

    field: Field
    dim: int
    structure: tuple
    unit: tuple
    declared_idempotents: tuple = ()
    idempotents_complete: bool = False

    def __post_init__(self):
        f = self.field
        d = self.dim
        if d < 1:
            raise DimensionMismatch("algebra dimension must be positive")
        object.__setattr__(
            self, "structure", _canonical_tensor(f, self.structure, (d, d, d))
        )
        if len(self.unit) != d:
            raise DimensionMismatch("unit coordinate length mismatch")
        object.__setattr__(self, "unit", tuple(f.of(x) for x in self.unit))
        object.__setattr__(
            self,
            "declared_idempotents",
            tuple(tuple(f.of(x) for x in e) for e in self.declared_idempotents),
        )
        bad = structure_violations(f, d, self.structure, self.unit)
        for e in self.declared_idempotents:
            if len(e) != d:
                raise DimensionMismatch("declared idempotent length mismatch")
            if self.multiply(e, e) != e:
                bad.append(Violation("declared_idempotent", (e,), "e*e != e"))
        if bad:
            raise ValidationFailure("invalid algebra", bad)

    @classmethod
    def from_tensor(cls, field, structure, unit, **kw):
        return cls(field, len(structure), structure, unit, **kw)

    # -- element operations ----------------------------------------------------

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if j == i else z for j in range(self.dim))

    def multiply(self, x, y) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element coordinate length mismatch")
        f = self.field
        z = f.zero
        acc = [z] * self.dim
        for i, xi in enumerate(x):
            if xi == z:
                continue
            plane = self.structure[i]
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                c = f.mul(xi, yj)
                for k, s in enumerate(plane[j]):
                    if s != z:
                        acc[k] = f.add(acc[k], f.mul(c, s))
        return tuple(acc)

    def bracket(self, x, y) -> tuple:
        sub = self.field.sub
        xy = self.multiply(x, y)
        yx = self.multiply(y, x)
        return tuple(sub(a, b) for a, b in zip(xy, yx))

    def left_mult(self, x) -> Matrix:
        """Matrix of y -> x*y."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, rows=self.dim)

    def right_mult(self, x) -> Matrix:
        """Matrix of y -> y*x."""
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, rows=self.dim)

    def is_commutative(self) -> bool:
        d = self.dim
        return all(
            self.structure[i][j] == self.structure[j][i]
            for i in range(d)
            for j in range(i + 1, d)
        )


def structure_violations(field, dim, structure, unit, cap=8):
    """Unit-law and associativity violations of a structure tensor.

    Stops collecting after ``cap`` entries; an empty list means valid.
    """
    f = field
    z = f.zero
    bad = []

    def times(x, y):
        acc = [z] * dim
        for i, xi in enumerate(x):
            if xi == z:
                continue
            plane = structure[i]
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                c = f.mul(xi, yj)
                for k, s in enumerate(plane[j]):
                    if s != z:
                        acc[k] = f.add(acc[k], f.mul(c, s))
        return tuple(acc)

    basis = [tuple(f.one if j == i else z for j in range(dim)) for i in range(dim)]
    for i, e in enumerate(basis):
        if times(unit, e) != e:
            bad.append(Violation("left_unit", (i,)))
        if times(e, unit) != e:
            bad.append(Violation("right_unit", (i,)))
        if len(bad) >= cap:
            return bad
    for i in range(dim):
        for j in range(dim):
            ij = structure[i][j]
            for k in range(dim):
                left = times(ij, basis[k])
                right = times(basis[i], structure[j][k])
                if left != right:
                    bad.append(Violation("associativity", (i, j, k)))
                    if len(bad) >= cap:
                        return bad
    return bad


# -- structural analyses ----------------------------------------------------


def commutation_operator(a: FDAlgebra) -> Matrix:
    """Stacked matrix of x -> ([e_0, x], ..., [e_{d-1}, x]); kernel = center."""
    blocks = [
        a.left_mult(a.basis_vector(i)) - a.right_mult(a.basis_vector(i))
        for i in range(a.dim)
    ]
    return Matrix.vstack(a.field, blocks, cols=a.dim)


def center(a: FDAlgebra) -> Subspace:
    return kernel(commutation_operator(a))


def commutator_span(a: FDAlgebra) -> Subspace:
    vectors = [
        a.bracket(a.basis_vector(i), a.basis_vector(j))
        for i in range(a.dim)
        for j in range(i + 1, a.dim)
    ]
    return Subspace(a.field, a.dim, vectors)


def central_ideal_subspace(a: FDAlgebra) -> Subspace:
    """K = {c in Z(A) : A*c contained in Z(A)}.

    For a unital algebra the two-sided ideal generated by central c is A*c,
    so K is nonzero exactly when A contains a nonzero central ideal.
    """
    comm = commutation_operator(a)
    blocks = [comm]
    for i in range(a.dim):
        blocks.append(comm @ a.left_mult(a.basis_vector(i)))
    return kernel(Matrix.vstack(a.field, blocks, cols=a.dim))


def central_ideal_free(a: FDAlgebra) -> bool:
    return central_ideal_subspace(a).dim == 0


def _all_elements(a: FDAlgebra):
    p = a.field.p
    return itertools.product(range(p), repeat=a.dim)


def domain_scan(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> TriState:
    """Decide absence of zero divisors.

    Exact over GF(p) when p^dim fits the enumeration budget (a is a zero
    divisor iff its left-multiplication operator is singular).  Over the
    rationals, or beyond budget, only a basis-pair witness scan runs, so the
    positive answer degrades to Unknown.  One-dimensional unital algebras
    are fields and therefore domains.
    """
    if a.dim == 1:
        return TriState.HOLDS
    z = a.field.zero
    zero = a.zero()
    for i in range(a.dim):
        for j in range(a.dim):
            if a.multiply(a.basis_vector(i), a.basis_vector(j)) == zero:
                return TriState.FAILS
    if a.field.is_prime_field and a.field.p ** a.dim <= budget:
        from .linalg import rref

        for coords in _all_elements(a):
            if all(x == 0 for x in coords):
                continue
            _, rank = rref(a.left_mult(coords))
            if rank < a.dim:
                return TriState.FAILS
        return TriState.HOLDS
    return TriState.UNKNOWN


@dataclass(frozen=True)
class IdempotentScan:
    """Idempotent elements found, and whether the list is provably complete."""

    elements: tuple
    complete: bool


def enumerate_idempotents(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> IdempotentScan:
    """All solutions of x*x = x within budget; otherwise {0, 1} plus the
    declared idempotents, flagged incomplete unless the algebra asserts
    completeness (or is one-dimensional, where {0, 1} is provably all)."""
    if a.field.is_prime_field and a.field.p ** a.dim <= budget:
        found = []
        for coords in _all_elements(a):
            if a.multiply(coords, coords) == coords:
                found.append(coords)
        return IdempotentScan(tuple(found), True)
    known = {a.zero(), a.unit}
    known.update(a.declared_idempotents)
    complete = a.idempotents_complete or a.dim == 1
    return IdempotentScan(tuple(sorted(known)), complete)


def subalgebra_closure(a: FDAlgebra, generators) -> Subspace:
    """Smallest multiplicatively closed subspace containing the generators.

    Iterates span <- span + span*span; the dimension strictly increases or
    the iteration stops, so at most dim rounds run.
    """
    span = Subspace(a.field, a.dim, generators)
    while True:
        basis = span.basis.entries
        products = [a.multiply(x, y) for x in basis for y in basis]
        grown = Subspace(a.field, a.dim, list(basis) + products)
        if grown.dim == span.dim:
            return span
        span = grown


@dataclass(frozen=True)
class GeneratedSubalgebra:
    """Subalgebra generated by all commutators and (known) idempotents.

    ``exact`` is False when the idempotent list was incomplete, in which
    case ``space`` is only a lower bound.
    """

    space: Subspace
    exact: bool

    def spans(self, a: FDAlgebra) -> TriState:
        """Does the subalgebra exhaust the whole algebra?

        A full lower bound already proves Holds; a proper subspace proves
        Fails only when the generating set was exhaustive.
        """
        if self.space.dim == a.dim:
            return TriState.HOLDS
        return TriState.FAILS if self.exact else TriState.UNKNOWN


def commutator_idempotent_subalgebra(
    a: FDAlgebra, budget: int = DEFAULT_BUDGET
) -> GeneratedSubalgebra:
    scan = enumerate_idempotents(a, budget)
    generators = list(commutator_span(a).basis.entries) + list(scan.elements)
    return GeneratedSubalgebra(subalgebra_closure(a, generators), scan.complete)


@dataclass(frozen=True)
class StructureReport:
    """Everything the sufficient-condition checks ask of one algebra."""

    center: Subspace
    commutator_span: Subspace
    central_ideal_free: bool
    domain: TriState
    idempotents: IdempotentScan
    generated: GeneratedSubalgebra
    budget: int = dc_field(default=DEFAULT_BUDGET, compare=False)


def analyze_algebra(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> StructureReport:
    scan = enumerate_idempotents(a, budget)
    generators = list(commutator_span(a).basis.entries) + list(scan.elements)
    return StructureReport(
        center=center(a),
        commutator_span=commutator_span(a),
        central_ideal_free=central_ideal_free(a),
        domain=domain_scan(a, budget),
        idempotents=scan,
        generated=GeneratedSubalgebra(subalgebra_closure(a, generators), scan.complete),
        budget=budget,
    )
