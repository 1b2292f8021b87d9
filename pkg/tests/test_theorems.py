import pytest

from gmalie.catalog import load_example
from gmalie.constructions import (
    field_algebra,
    trivial_context,
    zero_bimodule,
)
from gmalie.errors import CharacteristicTwoError, PreconditionError
from gmalie.fields import GF, QQ
from gmalie.gma import assemble
from gmalie.spaces import has_lie_derivation_property
from gmalie.theorems import (
    all_theorem_checks,
    check_central_ideal,
    check_combined,
    check_domains,
    check_strong_faithfulness,
    check_trivial,
)
from gmalie.tristate import TriState


def _g(name):
    return load_example(name).assembled("G")


def test_central_ideal_check_on_triangular():
    v = check_central_ideal(_g("tri2_Q"))
    # one-dimensional commutative blocks are their own central ideals
    assert v.hypothesis("central_ideal_free_a") is TriState.FAILS
    assert v.hypothesis("central_ideal_free_b") is TriState.FAILS
    for name in ("m_left_faithful", "m_right_faithful", "proj_center_a", "proj_center_b"):
        assert v.hypothesis(name) is TriState.HOLDS
    assert v.overall is TriState.FAILS
    assert v.oracle_agrees is None


def test_central_ideal_check_on_mat3_peirce():
    v = check_central_ideal(_g("mat3_GF3_peirce"))
    assert v.hypothesis("central_ideal_free_b") is TriState.HOLDS
    assert v.overall is TriState.HOLDS
    assert v.oracle_agrees is True


def test_domain_check():
    assert check_domains(_g("tri2_Q")).overall is TriState.HOLDS
    assert check_domains(_g("tri2_Q")).oracle_agrees is True
    assert check_domains(_g("mat2_GF3_peirce")).overall is TriState.HOLDS
    v = check_domains(_g("example_sec4"))
    assert v.hypothesis("domain_a") is TriState.FAILS
    assert v.overall is TriState.FAILS


def test_strong_faithfulness_check():
    assert check_strong_faithfulness(_g("tri2_GF5")).overall is TriState.HOLDS
    assert check_strong_faithfulness(_g("mat2_GF3_peirce")).overall is TriState.HOLDS
    v = check_strong_faithfulness(_g("example_sec4"))
    assert v.hypothesis("strongly_faithful_m") is TriState.FAILS
    assert v.overall is TriState.FAILS


def test_unknown_hypotheses_propagate():
    # a quadratic extension over the rationals: domains stay unknown, so the
    # domain check cannot conclude
    from gmalie.algebra import FDAlgebra
    from gmalie.constructions import left_regular_bimodule, triangular_context

    tensor = [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]
    ext = FDAlgebra(QQ, 2, tensor, (1, 0))
    ctx = triangular_context(ext, left_regular_bimodule(ext, field_algebra(QQ)), field_algebra(QQ))
    v = check_domains(assemble(ctx))
    assert v.hypothesis("domain_a") is TriState.UNKNOWN
    assert v.overall is not TriState.HOLDS
    assert v.oracle_agrees is None


def test_combined_check_on_mat3_peirce():
    v = check_combined(_g("mat3_GF3_peirce"))
    assert v.overall is TriState.HOLDS
    assert v.oracle_agrees is True
    extras = dict(v.extras)
    assert extras["clause_one"] is TriState.HOLDS
    assert extras["clause_two"] is TriState.HOLDS
    assert extras["clause_three"] is TriState.HOLDS
    assert v.hypothesis("ci_generates_a") is TriState.HOLDS


def test_combined_check_fails_everywhere_on_counterexample():
    v = check_combined(_g("example_sec4"))
    assert v.overall is TriState.FAILS
    extras = dict(v.extras)
    assert extras["clause_one"] is TriState.FAILS
    assert extras["clause_two"] is TriState.FAILS
    assert extras["clause_three"] is TriState.FAILS
    # every alternative of the first clause fails individually
    assert v.hypothesis("proj_center_b") is TriState.FAILS
    assert v.hypothesis("ci_generates_a") is TriState.FAILS
    assert v.hypothesis("ldp_a") is TriState.HOLDS  # commutative block


def test_combined_check_on_triangular():
    v = check_combined(_g("tri2_Q"))
    assert v.overall is TriState.HOLDS
    assert v.oracle_agrees is True


def test_trivial_check():
    v = check_trivial(_g("tri2_Q"))
    assert v.overall is TriState.HOLDS and v.oracle_agrees is True
    v4 = check_trivial(_g("example_sec4"))
    assert v4.overall is TriState.FAILS
    assert dict(v4.extras)["necessity_on_basis"] is TriState.HOLDS
    v5 = check_trivial(_g("trivial_QQQ"))
    assert v5.overall is TriState.HOLDS and v5.oracle_agrees is True


def test_trivial_check_requires_zero_pairings():
    with pytest.raises(PreconditionError):
        check_trivial(_g("mat2_GF3_peirce"))


def test_all_checks_lists_trivial_only_when_applicable():
    ids = [v.check_id for v in all_theorem_checks(_g("tri2_Q"))]
    assert ids == ["central_ideal", "domains", "strong_faithfulness", "combined", "trivial"]
    ids = [v.check_id for v in all_theorem_checks(_g("mat2_GF3_peirce"))]
    assert "trivial" not in ids


def test_every_bundled_example_with_a_holding_check_has_the_property():
    for name in ("tri2_Q", "tri2_GF5", "mat2_GF3_peirce", "mat3_GF3_peirce", "trivial_QQQ"):
        g = _g(name)
        verdicts = all_theorem_checks(g)
        held = [v for v in verdicts if v.overall is TriState.HOLDS]
        assert held, name
        assert all(v.oracle_agrees for v in held), name
        assert has_lie_derivation_property(g)


def test_counterexample_fails_every_check():
    g = _g("example_sec4")
    for v in all_theorem_checks(g):
        assert v.overall is not TriState.HOLDS
    assert not has_lie_derivation_property(g)


def test_checks_reject_characteristic_two():
    one = field_algebra(GF(2))
    from gmalie.constructions import regular_bimodule, triangular_context

    g = assemble(triangular_context(one, regular_bimodule(one), one))
    with pytest.raises(CharacteristicTwoError):
        check_central_ideal(g)


def test_checks_reject_plain_direct_sums():
    one = field_algebra(QQ)
    ctx = trivial_context(one, one, zero_bimodule(one, one), zero_bimodule(one, one))
    g = assemble(ctx)
    with pytest.raises(PreconditionError):
        check_combined(g)
