"""Width searches: generation counts, radical membership, pair checks."""

import pytest

from piradical import (
    AlmostSimpleContext,
    CentralizesSocle,
    NotATransposition,
    NotNormalizing,
    PermGroup,
    Permutation,
    PiContainsTwo,
    PrimeSet,
    RNotDividingOrder,
    SearchBudget,
    TranspositionGraph,
    GroupClassData,
    alpha,
    alternating_group,
    baer_suzuki_check,
    beta,
    bs_membership,
    cyclic_group,
    dihedral_group,
    involution_pair_orders,
    min_width_search,
    minimal_membership_width,
    odd_pi_two_conjugates_check,
    power_width_comparison,
    projective_semilinear_9,
    symmetric_group,
    transposition_pi_sweep,
)
from piradical.width import _search_generic

P = Permutation.parse


def ctx_a5(x_text: str) -> AlmostSimpleContext:
    return AlmostSimpleContext.build(alternating_group(5), P(x_text, 5))


# -- alpha and beta on hand-checked instances ---------------------------------


def test_alpha_of_transposition_on_five_points():
    res = alpha(ctx_a5("(1 2)"))
    assert res.value == 4
    assert res.exhaustive and res.revalidate()
    assert res.certificate_order.value == 120


def test_alpha_of_three_cycle_on_five_points():
    res = alpha(ctx_a5("(1 2 3)"))
    assert res.value == 2
    assert res.certificate_order.value == 60
    assert res.revalidate()


def test_beta_three_of_transposition_on_five_points():
    res = beta(ctx_a5("(1 2)"), 3)
    assert res.value == 2
    assert res.states_visited <= 10
    assert res.revalidate(lambda o: o % 3 == 0)


def test_beta_five_of_transposition_on_five_points():
    res = beta(ctx_a5("(1 2)"), 5)
    assert res.value == 4
    assert res.revalidate(lambda o: o % 5 == 0)


def test_beta_two_of_three_cycle_on_five_points():
    res = beta(ctx_a5("(1 2 3)"), 2)
    assert res.value == 2


def test_beta_three_of_semilinear_involution():
    nine = projective_semilinear_9()
    ctx = AlmostSimpleContext.build(nine.socle, nine.involution_outside_s6)
    res = beta(ctx, 3)
    assert res.value == 3
    assert res.exhaustive and res.revalidate(lambda o: o % 3 == 0)


def test_beta_requires_prime_dividing_ambient_order():
    with pytest.raises(RNotDividingOrder):
        beta(ctx_a5("(1 2)"), 7)
    with pytest.raises(ValueError):
        beta(ctx_a5("(1 2)"), 6)


def test_beta_never_exceeds_alpha():
    for x_text in ["(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4 5)"]:
        ctx = ctx_a5(x_text)
        a = alpha(ctx)
        for r in (2, 3, 5):
            b = beta(ctx, r)
            assert b.value is not None and b.value <= a.value


# -- the raw search engine ------------------------------------------------------


def test_trivial_predicate_is_width_one():
    ctx = ctx_a5("(1 2 3)")
    res = min_width_search(
        ctx.element, ctx.conjugates, ctx.witnesses, lambda o: o % 1 == 0
    )
    assert res.value == 1
    assert res.members == (ctx.element,)


def test_unsatisfiable_predicate_saturates():
    ctx = ctx_a5("(1 2 3)")
    res = min_width_search(
        ctx.element, ctx.conjugates, ctx.witnesses, lambda o: o % 7 == 0
    )
    assert res.value is None
    assert res.saturated and res.exhaustive
    assert not res.revalidate()


def test_width_budget_reports_honest_lower_bound():
    ctx = ctx_a5("(1 2)")
    res = beta(ctx, 5, budget=SearchBudget(max_width=2))
    assert res.value is None
    assert res.explored_width == 2 and res.lower_bound == 3
    assert not res.saturated


def test_first_conjugate_must_be_the_element():
    ctx = ctx_a5("(1 2)")
    with pytest.raises(ValueError):
        min_width_search(
            P("(1 3)", 5), ctx.conjugates, ctx.witnesses, lambda o: o > 1
        )


def test_witnesses_conjugate_the_element():
    ctx = ctx_a5("(1 2)(3 4)")
    assert len(ctx.conjugates) == 15
    assert all(
        ctx.element**w == m for w, m in zip(ctx.witnesses, ctx.conjugates)
    )


def test_pinned_matches_unpinned_on_small_classes():
    for x_text, pred in [
        ("(1 2)", lambda o: o % 5 == 0),
        ("(1 2 3)", lambda o: o % 5 == 0),
        ("(1 2 3 4 5)", lambda o: o % 3 == 0),
    ]:
        ctx = ctx_a5(x_text)
        assert len(ctx.conjugates) <= 60
        pinned = min_width_search(
            ctx.element, ctx.conjugates, ctx.witnesses, pred, pinned=True
        )
        free = min_width_search(
            ctx.element, ctx.conjugates, ctx.witnesses, pred, pinned=False
        )
        assert pinned.value == free.value


def test_transposition_fast_path_matches_generic_search():
    ctx = AlmostSimpleContext.build(alternating_group(6), P("(1 2)", 6))
    for pred in [lambda o: o % 3 == 0, lambda o: o % 5 == 0, lambda o: o == 720]:
        fast = min_width_search(ctx.element, ctx.conjugates, ctx.witnesses, pred)
        slow = _search_generic(
            ctx.element,
            ctx.conjugates,
            ctx.witnesses,
            pred,
            SearchBudget(),
            True,
            "width",
            True,
        )
        assert fast.value == slow.value
        assert fast.certificate_order == slow.certificate_order


def test_power_width_monotonicity():
    ctx7 = AlmostSimpleContext.build(alternating_group(7), P("(1 2 3 4 5 6 7)"))
    b1, b2 = power_width_comparison(ctx7, 3, 2)
    assert b1.value is not None and b2.value is not None
    assert b1.value <= b2.value
    ctx5 = ctx_a5("(1 2 3 4 5)")
    c1, c2 = power_width_comparison(ctx5, 3, 4)
    assert c1.value == c2.value  # x and x^4 = x^-1 lie in one socle class


# -- context construction guards ------------------------------------------------


def test_build_rejects_non_normalizing_element():
    socle = PermGroup.from_generators([P("(1 2 3 4)")])
    with pytest.raises(NotNormalizing):
        AlmostSimpleContext.build(socle, P("(1 2)", 4))


def test_build_rejects_centralizing_element():
    socle = PermGroup.from_generators([P("(1 2 3)", 7), P("(3 4 5)", 7)])
    with pytest.raises(CentralizesSocle):
        AlmostSimpleContext.build(socle, P("(6 7)", 7))
    ctx = AlmostSimpleContext.build(socle, P("(6 7)", 7), allow_degenerate=True)
    assert ctx.degenerate


def test_ambient_is_socle_extended_by_element():
    ctx = ctx_a5("(1 2)")
    assert ctx.ambient.order_int == 120
    assert ctx.socle.is_normal_in(ctx.ambient)
    assert len(ctx.conjugates) == 10  # all transpositions form one socle class


# -- membership width against the radical ----------------------------------------


def test_membership_width_three_fails_on_five_points():
    G = symmetric_group(5)
    res = bs_membership(G, PrimeSet.of(2, 3), 3)
    assert not res.holds
    assert res.violating_element.is_transposition()
    assert res.witness_tuple is None
    assert res.radical_order.is_one()
    assert res.exhaustive


def test_membership_width_eleven_holds_on_five_points():
    G = symmetric_group(5)
    res = bs_membership(G, PrimeSet.of(2, 3), 11)
    assert res.holds and res.violating_element is None


def test_membership_width_is_monotone_in_m():
    G = symmetric_group(5)
    data = GroupClassData(G)
    pi = PrimeSet.of(2, 3)
    verdicts = [bs_membership(G, pi, m, data=data).holds for m in (1, 2, 3, 4, 5)]
    assert verdicts == [False, False, False, True, True]
    for earlier, later in zip(verdicts, verdicts[1:]):
        assert later or not earlier  # holds never reverts as m grows


def test_minimal_membership_width_on_five_points():
    G = symmetric_group(5)
    m, per_rep = minimal_membership_width(G, PrimeSet.of(2, 3))
    assert m == 4
    widths = {str(rep): w for rep, w in per_rep}
    assert widths["(1 2)"] == 4
    assert max(widths.values()) == m
    assert all(w >= 1 for w in widths.values())


def test_membership_width_one_when_radical_is_everything():
    G = symmetric_group(4)
    res = bs_membership(G, PrimeSet.of(2, 3), 1)
    assert res.holds
    assert res.radical_order.value == 24
    assert all(rec.in_radical for rec in res.records)


def test_group_class_data_reuses_radicals():
    G = symmetric_group(4)
    data = GroupClassData(G)
    pi = PrimeSet.of(2)
    assert data.radical(pi) is data.radical(pi)
    assert data.radical(pi).order_int == 4
    assert sum(size for _, size in data.reps) == 24


# -- pair checks -----------------------------------------------------------------


def test_classical_pair_equivalence_on_fixtures():
    for G in [symmetric_group(4), alternating_group(5), dihedral_group(6)]:
        data = GroupClassData(G)
        for p in sorted(G.order.prime_support):
            report = baer_suzuki_check(G, p, data=data)
            assert report.consistent
            for rec in report.records:
                assert rec.in_radical == rec.all_pairs_p_groups
                if rec.witness_pair is not None:
                    a, b = rec.witness_pair
                    H = PermGroup.from_generators([a, b])
                    assert H.order_int == rec.witness_order.value
                    assert H.order_int % p == 0 or not H.order.prime_support <= {p}


def test_pair_check_on_p_group_marks_everything_in_radical():
    G = cyclic_group(8)
    report = baer_suzuki_check(G, 2)
    assert report.radical_order.value == 8
    assert all(rec.in_radical for rec in report.records)


def test_two_conjugates_suffice_for_odd_prime_sets():
    cases = [
        (symmetric_group(4), PrimeSet.of(3)),
        (alternating_group(5), PrimeSet.of(3, 5)),
        (symmetric_group(5), PrimeSet.of(5)),
    ]
    for G, pi in cases:
        res = odd_pi_two_conjugates_check(G, pi)
        assert res.holds and res.m == 2


def test_two_conjugate_check_rejects_even_prime_sets():
    with pytest.raises(PiContainsTwo):
        odd_pi_two_conjugates_check(symmetric_group(4), PrimeSet.of(2, 3))


# -- transposition graphs ----------------------------------------------------------


def test_transposition_graph_components():
    T = [P("(1 2)", 5), P("(3 4)", 5)]
    g = TranspositionGraph.from_permutations(T)
    assert g.components == ((1, 2), (3, 4), (5,))
    assert g.generated_order.value == 4
    assert g.is_pi(PrimeSet.of(2))
    assert g.check_generated_matches()


def test_transposition_graph_star_generates_everything():
    star = [P(f"(1 {k})", 5) for k in range(2, 6)]
    g = TranspositionGraph.from_permutations(star)
    assert g.components == ((1, 2, 3, 4, 5),)
    assert g.generated_order.value == 120
    assert not g.is_pi(PrimeSet.of(2, 3))
    assert g.check_generated_matches()


def test_transposition_graph_empty_set():
    g = TranspositionGraph.from_permutations([], degree=4)
    assert g.components == ((1,), (2,), (3,), (4,))
    assert g.generated_order.is_one()
    assert g.generated_group().is_trivial()
    with pytest.raises(ValueError):
        TranspositionGraph.from_permutations([])


def test_transposition_graph_rejects_non_transpositions():
    with pytest.raises(NotATransposition):
        TranspositionGraph.from_permutations([P("(1 2 3)", 3)])


def test_involution_pair_orders_are_dihedral():
    members = [P("(1 2)(3 4)", 5), P("(1 3)(2 4)", 5), P("(1 2)(4 5)", 5)]
    table = involution_pair_orders(members)
    assert len(table) == 3
    for i, j, order in table:
        H = PermGroup.from_generators([members[i], members[j]])
        assert H.order_int == order
    with pytest.raises(ValueError):
        involution_pair_orders([P("(1 2 3)", 3)])


def test_transposition_sweep_small_prime_exact():
    report = transposition_pi_sweep(5)
    assert report.r == 5 and report.exhaustive
    assert report.all_small_subsets_pi
    assert report.subsets_checked == 120  # C(10, 3) triples of the 10 transpositions
    assert report.failing_small_subset is None
    assert report.radical_order.is_one()
    assert report.implied_lower_bound == 4
    assert not TranspositionGraph.from_permutations(report.witness_subset).is_pi(
        report.pi
    )


def test_transposition_sweep_sampled_mode():
    report = transposition_pi_sweep(11, sample=200, seed=1)
    assert not report.exhaustive
    assert report.subsets_checked == 200
    assert report.all_small_subsets_pi
