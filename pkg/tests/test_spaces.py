import random
from fractions import Fraction

import pytest

from gmalie.catalog import load_example
from gmalie.constructions import (
    dual_numbers,
    field_algebra,
    matrix_algebra,
    regular_bimodule,
    triangular_context,
    upper_triangular_algebra,
)
from gmalie.errors import CharacteristicTwoError, PreconditionError
from gmalie.fields import GF, QQ
from gmalie.gma import assemble, peirce
from gmalie.linalg import Matrix
from gmalie.spaces import (
    EndoMap,
    central_map_space,
    derivation_space,
    has_lie_derivation_property,
    is_central_commutator_free,
    is_derivation,
    is_lie_derivation,
    is_proper,
    lie_derivation_space,
    proper_space,
)

from helpers import derivation_nullity, matrix_unit_tensor


def _e11(f, n):
    vec = [f.zero] * (n * n)
    vec[0] = f.one
    return tuple(vec)


def _ad(algebra, c):
    return EndoMap(algebra.left_mult(c) - algebra.right_mult(c))


def _sec4():
    ws = load_example("example_sec4")
    return ws.assembled("G"), EndoMap(ws.maps["L_paper"].matrix)


def test_inner_maps_are_derivations():
    a = matrix_algebra(GF(5), 2)
    rng = random.Random(17)
    space = derivation_space(a)
    for _ in range(6):
        c = tuple(rng.randrange(5) for _ in range(4))
        assert space.contains(_ad(a, c))
        assert is_derivation(a, _ad(a, c))


def test_one_dimensional_algebra_has_no_derivations():
    assert derivation_space(field_algebra(QQ)).dim == 0


@pytest.mark.parametrize("n,expected", [(2, 3), (3, 8)])
def test_full_matrix_derivation_dimensions(n, expected):
    a = matrix_algebra(GF(3), n)
    assert derivation_space(a).dim == expected
    # independent assembly of the same linear condition, and the classical
    # inner-derivation count as an anchor
    assert derivation_nullity(matrix_unit_tensor(n, 3), 3) == expected
    assert expected == n * n - 1


def test_commutative_algebras_make_every_map_a_lie_derivation():
    a = dual_numbers(GF(3))
    assert lie_derivation_space(a).dim == 4
    assert central_map_space(a).dim == 4


def test_bundled_map_is_a_lie_derivation():
    g, endo = _sec4()
    assert lie_derivation_space(g).contains(endo)
    assert is_lie_derivation(g, endo)


def test_central_map_space_dimensions():
    assert central_map_space(matrix_algebra(GF(3), 2)).dim == 1
    assert central_map_space(upper_triangular_algebra(QQ, 2)).dim == 2


@pytest.mark.parametrize(
    "algebra",
    [
        matrix_algebra(GF(3), 2),
        upper_triangular_algebra(QQ, 2),
        dual_numbers(QQ),
        matrix_algebra(GF(5), 2),
    ],
)
def test_space_containments(algebra):
    der = derivation_space(algebra)
    lie = lie_derivation_space(algebra)
    cen = central_map_space(algebra)
    pro = proper_space(algebra)
    assert lie.space.contains(der.space)
    assert lie.space.contains(cen.space)
    assert pro.space.contains(der.space)
    assert pro.space.contains(cen.space)
    for endo in cen.basis_maps():
        assert is_central_commutator_free(algebra, endo)


def test_derivations_split_with_zero_central_part():
    g, _ = _sec4()
    for endo in derivation_space(g).basis_maps():
        split = is_proper(g, endo)
        assert split.proper
        assert split.central.matrix.is_zero()
        assert split.derivation.matrix == endo.matrix


def test_bundled_map_is_not_proper():
    g, endo = _sec4()
    assert not proper_space(g).contains(endo)
    split = is_proper(g, endo)
    assert not split.proper
    assert split.derivation is None and split.central is None


def test_triangular_basis_maps_all_proper():
    g = assemble(
        triangular_context(
            field_algebra(QQ), regular_bimodule(field_algebra(QQ)), field_algebra(QQ)
        )
    )
    basis = lie_derivation_space(g).basis_maps()
    assert len(basis) == 4
    for endo in basis:
        split = is_proper(g, endo)
        assert split.proper
        assert is_derivation(g, split.derivation)
        assert is_central_commutator_free(g, split.central)
        assert split.derivation.matrix + split.central.matrix == endo.matrix


def test_lie_derivation_property_verdicts():
    g, _ = _sec4()
    assert not has_lie_derivation_property(g)
    assert has_lie_derivation_property(matrix_algebra(GF(3), 2))
    tri = assemble(
        triangular_context(
            field_algebra(QQ), regular_bimodule(field_algebra(QQ)), field_algebra(QQ)
        )
    )
    assert has_lie_derivation_property(tri)


def test_properness_is_scale_invariant():
    g, endo = _sec4()
    for lam in (2, -1, Fraction(1, 3)):
        assert not is_proper(g, endo.scale(lam)).proper
    d = derivation_space(g).basis_maps()[0]
    for lam in (2, -1, Fraction(1, 3)):
        assert is_proper(g, d.scale(lam)).proper


def test_non_lie_maps_are_rejected_with_a_pair():
    a = matrix_algebra(QQ, 2)
    bad = EndoMap(Matrix(QQ, [[0] * 4, [0] * 4, [0] * 4, [0, 1, 0, 0]]))
    assert not is_lie_derivation(a, bad)
    with pytest.raises(PreconditionError, match=r"basis pair \(\d, \d\)"):
        is_proper(a, bad)


def test_characteristic_two_gate():
    a = matrix_algebra(GF(2), 2)
    for op in (
        derivation_space,
        lie_derivation_space,
        central_map_space,
        proper_space,
        has_lie_derivation_property,
    ):
        with pytest.raises(CharacteristicTwoError):
            op(a)
    with pytest.raises(CharacteristicTwoError):
        is_proper(a, EndoMap(Matrix.zeros(GF(2), 4, 4)))


def test_gma_and_algebra_arguments_are_interchangeable():
    g = assemble(peirce(matrix_algebra(GF(3), 2), _e11(GF(3), 2)))
    assert derivation_space(g).dim == derivation_space(g.algebra).dim
    assert lie_derivation_space(g).dim == lie_derivation_space(g.algebra).dim
