"""Mechanical hypothesis checkers for the sufficient-condition theorems.

Each named hypothesis maps to exactly one structural operation; a verdict is
the stated boolean combination, Kleene-evaluated so an Unknown hypothesis in
a required position can never produce Holds.  Whenever a checker concludes
Holds, the brute-force oracle is consulted and its agreement recorded: the
theorems are one-directional, so disagreement would mean a bug (or a broken
theorem) and is surfaced by the callers as a fatal condition.

Hypothesis name conventions: ``proj_center_a`` means the center of the
assembled algebra projects onto the full center of the first diagonal
block; ``ci_generates_a`` means commutators and idempotents generate the
first block; ``ldp_a`` means the first block itself has the property that
every Lie derivation is proper.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    DEFAULT_BUDGET,
    central_ideal_free,
    commutator_idempotent_subalgebra,
    domain_scan,
)
from .errors import CharacteristicTwoError, PreconditionError
from .gma import GMAlgebra, center_analysis, is_trivial
from .morita import left_action_kernel, right_action_kernel, strongly_faithful
from .presentation import extract_lie
from .spaces import has_lie_derivation_property, is_proper, lie_derivation_space
from .tristate import TriState, tri_all, tri_any

DEFAULT_LDP_DIM_CAP = 6

__all__ = [
    "TheoremVerdict",
    "check_central_ideal",
    "check_domains",
    "check_strong_faithfulness",
    "check_combined",
    "check_trivial",
    "all_theorem_checks",
    "DEFAULT_LDP_DIM_CAP",
]


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one sufficient-condition check.

    ``hypotheses`` preserves evaluation order; ``oracle_agrees`` is filled
    only when ``overall`` is Holds (the conditions are sufficient, not
    necessary).  ``extras`` carries informational side checks.
    """

    check_id: str
    hypotheses: tuple
    overall: TriState
    oracle_agrees: bool | None
    extras: tuple = ()

    def hypothesis(self, name: str) -> TriState:
        for key, value in self.hypotheses:
            if key == name:
                return value
        raise KeyError(name)


def _gate(g: GMAlgebra):
    if g.field.characteristic == 2:
        raise CharacteristicTwoError(
            "sufficient-condition checks need characteristic != 2"
        )
    if g.is_direct_sum:
        raise PreconditionError(
            "both modules are zero: a direct sum of algebras, not a "
            "generalized matrix algebra"
        )


def _finish(g, check_id, hypotheses, overall, extras=()):
    agrees = None
    if overall is TriState.HOLDS:
        agrees = has_lie_derivation_property(g)
    return TheoremVerdict(
        check_id=check_id,
        hypotheses=tuple(hypotheses),
        overall=overall,
        oracle_agrees=agrees,
        extras=tuple(extras),
    )


def _faithful_states(g):
    left = TriState.from_bool(left_action_kernel(g.context.m).dim == 0)
    right = TriState.from_bool(right_action_kernel(g.context.m).dim == 0)
    return left, right


def check_central_ideal(g: GMAlgebra, budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Faithful module, both center projections full, and one diagonal block
    free of nonzero central ideals."""
    _gate(g)
    an = center_analysis(g)
    left, right = _faithful_states(g)
    hyps = [
        ("m_left_faithful", left),
        ("m_right_faithful", right),
        ("proj_center_a", TriState.from_bool(an.proj_a_is_center_a)),
        ("proj_center_b", TriState.from_bool(an.proj_b_is_center_b)),
        ("central_ideal_free_a", TriState.from_bool(central_ideal_free(g.context.a))),
        ("central_ideal_free_b", TriState.from_bool(central_ideal_free(g.context.b))),
    ]
    h = dict(hyps)
    overall = tri_all(
        (
            h["m_left_faithful"],
            h["m_right_faithful"],
            h["proj_center_a"],
            h["proj_center_b"],
            tri_any((h["central_ideal_free_a"], h["central_ideal_free_b"])),
        )
    )
    return _finish(g, "central_ideal", hyps, overall)


def check_domains(g: GMAlgebra, budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Faithful module, both center projections full, and both diagonal
    blocks free of zero divisors."""
    _gate(g)
    an = center_analysis(g)
    left, right = _faithful_states(g)
    hyps = [
        ("m_left_faithful", left),
        ("m_right_faithful", right),
        ("proj_center_a", TriState.from_bool(an.proj_a_is_center_a)),
        ("proj_center_b", TriState.from_bool(an.proj_b_is_center_b)),
        ("domain_a", domain_scan(g.context.a, budget)),
        ("domain_b", domain_scan(g.context.b, budget)),
    ]
    h = dict(hyps)
    overall = tri_all(
        (
            h["m_left_faithful"],
            h["m_right_faithful"],
            h["proj_center_a"],
            h["proj_center_b"],
            h["domain_a"],
            h["domain_b"],
        )
    )
    return _finish(g, "domains", hyps, overall)


def check_strong_faithfulness(g: GMAlgebra, budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Both center projections full and the upper module strongly faithful."""
    _gate(g)
    an = center_analysis(g)
    hyps = [
        ("proj_center_a", TriState.from_bool(an.proj_a_is_center_a)),
        ("proj_center_b", TriState.from_bool(an.proj_b_is_center_b)),
        ("strongly_faithful_m", strongly_faithful(g.context.m, budget)),
    ]
    h = dict(hyps)
    overall = tri_all(
        (h["proj_center_a"], h["proj_center_b"], h["strongly_faithful_m"])
    )
    return _finish(g, "strong_faithfulness", hyps, overall)


def _ldp_tristate(algebra, dim_cap: int) -> TriState:
    if algebra.field.characteristic == 2:
        return TriState.UNKNOWN
    if algebra.dim > dim_cap:
        return TriState.UNKNOWN
    return TriState.from_bool(has_lie_derivation_property(algebra))


def _diagonal_clauses(g, budget, dim_cap):
    """The two three-alternative clauses shared by the combined check and
    the trivial-context check."""
    an = center_analysis(g)
    left, right = _faithful_states(g)
    ci_a = commutator_idempotent_subalgebra(g.context.a, budget).spans(g.context.a)
    ci_b = commutator_idempotent_subalgebra(g.context.b, budget).spans(g.context.b)
    ldp_a = _ldp_tristate(g.context.a, dim_cap)
    ldp_b = _ldp_tristate(g.context.b, dim_cap)
    hyps = [
        ("proj_center_a", TriState.from_bool(an.proj_a_is_center_a)),
        ("proj_center_b", TriState.from_bool(an.proj_b_is_center_b)),
        ("m_left_faithful", left),
        ("m_right_faithful", right),
        ("ci_generates_a", ci_a),
        ("ci_generates_b", ci_b),
        ("ldp_a", ldp_a),
        ("ldp_b", ldp_b),
    ]
    h = dict(hyps)
    clause_one = tri_any(
        (
            tri_all((h["proj_center_b"], h["m_left_faithful"])),
            tri_all((h["ci_generates_a"], h["m_left_faithful"])),
            tri_all((h["ldp_a"], h["ci_generates_a"])),
        )
    )
    clause_two = tri_any(
        (
            tri_all((h["proj_center_a"], h["m_right_faithful"])),
            tri_all((h["ci_generates_b"], h["m_right_faithful"])),
            tri_all((h["ldp_b"], h["ci_generates_b"])),
        )
    )
    return hyps, clause_one, clause_two


def check_combined(
    g: GMAlgebra,
    budget: int = DEFAULT_BUDGET,
    ldp_dim_cap: int = DEFAULT_LDP_DIM_CAP,
) -> TheoremVerdict:
    """The three-clause combination: both diagonal clauses plus one of the
    central-ideal, domain, or strong-faithfulness alternatives."""
    _gate(g)
    hyps, clause_one, clause_two = _diagonal_clauses(g, budget, ldp_dim_cap)
    hyps = list(hyps)
    hyps += [
        ("central_ideal_free_a", TriState.from_bool(central_ideal_free(g.context.a))),
        ("central_ideal_free_b", TriState.from_bool(central_ideal_free(g.context.b))),
        ("domain_a", domain_scan(g.context.a, budget)),
        ("domain_b", domain_scan(g.context.b, budget)),
        ("strongly_faithful_m", strongly_faithful(g.context.m, budget)),
        ("strongly_faithful_n", strongly_faithful(g.context.n, budget)),
    ]
    h = dict(hyps)
    clause_three = tri_any(
        (
            tri_any((h["central_ideal_free_a"], h["central_ideal_free_b"])),
            tri_all((h["domain_a"], h["domain_b"])),
            tri_any((h["strongly_faithful_m"], h["strongly_faithful_n"])),
        )
    )
    overall = tri_all((clause_one, clause_two, clause_three))
    extras = (
        ("clause_one", clause_one),
        ("clause_two", clause_two),
        ("clause_three", clause_three),
    )
    return _finish(g, "combined", hyps, overall, extras)


def check_trivial(
    g: GMAlgebra,
    budget: int = DEFAULT_BUDGET,
    ldp_dim_cap: int = DEFAULT_LDP_DIM_CAP,
) -> TheoremVerdict:
    """For zero-pairing contexts only: the two diagonal clauses suffice.

    Additionally verifies the necessary direction on every basis Lie
    derivation of the assembled algebra: a proper one must have both
    cross-map ranges inside the projected centers.
    """
    _gate(g)
    if not is_trivial(g.context):
        raise PreconditionError("check_trivial requires a zero-pairing context")
    hyps, clause_one, clause_two = _diagonal_clauses(g, budget, ldp_dim_cap)
    overall = tri_all((clause_one, clause_two))

    an = center_analysis(g)
    necessity_ok = True
    for endo in lie_derivation_space(g).basis_maps():
        if not is_proper(g, endo).proper:
            continue
        parts = extract_lie(g, endo)
        da, db = g.block_dims[0], g.block_dims[3]
        range_a = all(
            an.proj_b.contains_vector(parts.a_to_center_b.column(i)) for i in range(da)
        )
        range_b = all(
            an.proj_a.contains_vector(parts.b_to_center_a.column(j)) for j in range(db)
        )
        if not (range_a and range_b):
            necessity_ok = False
            break
    extras = (
        ("clause_one", clause_one),
        ("clause_two", clause_two),
        ("necessity_on_basis", TriState.from_bool(necessity_ok)),
    )
    return _finish(g, "trivial", hyps, overall, extras)


def all_theorem_checks(
    g: GMAlgebra,
    budget: int = DEFAULT_BUDGET,
    ldp_dim_cap: int = DEFAULT_LDP_DIM_CAP,
) -> tuple:
    """Every applicable checker, in a fixed order."""
    checks = [
        check_central_ideal(g, budget),
        check_domains(g, budget),
        check_strong_faithfulness(g, budget),
        check_combined(g, budget, ldp_dim_cap),
    ]
    if is_trivial(g.context):
        checks.append(check_trivial(g, budget, ldp_dim_cap))
    return tuple(checks)
