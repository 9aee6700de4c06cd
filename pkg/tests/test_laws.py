import random
from dataclasses import replace
from fractions import Fraction

import pytest

from rolcheck import (
    EQUIVALENT,
    GAUSSIAN_RATIONAL,
    HYPOTHESIS_NOT_MET,
    HypothesisNotMet,
    InstanceSpec,
    LawId,
    Matrix,
    check_equivalence,
    gen_instance,
    inclusion_statement_sampled,
    is_k_inverse,
    law_context,
    law_statement,
    mp_inverse,
    variant_context,
)
from rolcheck.harness import _trial_seeds
from rolcheck.laws import STATEMENTS

G = GAUSSIAN_RATIONAL


def _witness_pair():
    a = Matrix.from_rows([[1, 0], [0, 0]], G)
    b = Matrix.from_rows([[1, 1], [1, 1]], G)
    return a, b


def _instances(law, count, seed, size=3, weight="commutant", **kw):
    spec = InstanceSpec(domain=G, size=size, weight_mode=weight, seed=seed, **kw)
    for trial in range(count):
        gen_seed, sample_seed = _trial_seeds(seed, trial)
        a, b, c = gen_instance(replace(spec, seed=gen_seed), law)
        yield law_context(a, b, c), sample_seed


def test_law_context_trivial_and_projection():
    e = Matrix.identity(2, G)
    ctx = law_context(e, e, e)
    assert ctx.p == e and ctx.q == e and ctx.r == e and ctx.s == e
    a = Matrix.from_rows([[1, 0], [0, 0]], G)
    ctx = law_context(a, e, e)
    assert ctx.s == a  # a+ a for this projection is a itself
    assert ctx.q == a


def test_law_context_blanket_identities():
    # construction itself asserts hermitian-ness and the defining identities
    for ctx, _ in _instances(LawId.T23, 20, seed=31):
        assert ctx.p.is_hermitian() and ctx.q.is_hermitian()
        assert ctx.r.is_hermitian() and ctx.s.is_hermitian()
        assert ctx.a @ ctx.s == ctx.a
        assert ctx.a @ ctx.q == ctx.a_dag_star
        assert ctx.r @ ctx.b_dag_star == ctx.b
        assert ctx.p @ ctx.b_dag_star == ctx.b_dag_star


def test_greville_witness_instance():
    a, b = _witness_pair()
    ctx = law_context(a, b, Matrix.identity(2, G))
    assert mp_inverse(a @ b) == Matrix.from_rows([["1/2", 0], ["1/2", 0]], G)
    assert ctx.b_dag @ ctx.a_dag == Matrix.from_rows([["1/4", 0], ["1/4", 0]], G)
    assert law_statement(LawId.GREVILLE, "i", ctx) is False
    assert law_statement(LawId.GREVILLE, "ii", ctx) is False
    report = check_equivalence(LawId.GREVILLE, ctx)
    assert report.verdict == EQUIVALENT


def test_c27_witness_lambda_two():
    a, b = _witness_pair()
    lam2 = Matrix.identity(2, G).scale(2)
    ctx = law_context(a, b, lam2)
    values = {s: law_statement(LawId.C27, s, ctx) for s in ("i", "ii", "iii")}
    assert values == {"i": True, "ii": True, "iii": True}
    # lambda = 1 is the plain reverse order law, false on this witness
    ctx1 = law_context(a, b, Matrix.identity(2, G))
    values1 = {s: law_statement(LawId.C27, s, ctx1) for s in ("i", "ii", "iii")}
    assert values1 == {"i": False, "ii": False, "iii": False}
    assert check_equivalence(LawId.C27, ctx).verdict == EQUIVALENT
    assert check_equivalence(LawId.C27, ctx1).verdict == EQUIVALENT


def test_c27_rejects_non_scalar_weight():
    a, b = _witness_pair()
    c = Matrix.from_rows([[1, 0], [0, 2]], G)
    with pytest.raises(HypothesisNotMet):
        law_statement(LawId.C27, "i", law_context(a, b, c))


@pytest.mark.parametrize("law", [LawId.T23, LawId.T24, LawId.T25, LawId.T26])
def test_section2_equivalences_hold(law):
    for ctx, seed in _instances(law, 40, seed=32):
        report = check_equivalence(law, ctx, seed=seed)
        assert report.verdict == EQUIVALENT, report.statement_values


@pytest.mark.parametrize("law", [LawId.T24, LawId.T25, LawId.T26])
def test_reduction_to_t23_is_exact(law):
    for ctx, _ in _instances(law, 25, seed=33):
        vctx = variant_context(ctx, law)
        for stmt in STATEMENTS[law]:
            assert law_statement(law, stmt, ctx) == law_statement(LawId.T23, stmt, vctx)


def test_variant_blanket_element_identities():
    for ctx, _ in _instances(LawId.T24, 10, seed=34):
        v = variant_context(ctx, LawId.T24)
        assert v.p == ctx.s and v.s == ctx.p
        assert v.q == ctx.r_dag and v.r == ctx.q_dag
    for ctx, _ in _instances(LawId.T25, 10, seed=35):
        v = variant_context(ctx, LawId.T25)
        assert v.p == ctx.s and v.q == ctx.r and v.r == ctx.q and v.s == ctx.p
    for ctx, _ in _instances(LawId.T26, 10, seed=36):
        v = variant_context(ctx, LawId.T26)
        assert v.p == ctx.p and v.q == ctx.q_dag and v.r == ctx.r_dag and v.s == ctx.s


def test_variant_context_rejects_other_laws():
    a, b = _witness_pair()
    ctx = law_context(a, b, Matrix.identity(2, G))
    with pytest.raises(ValueError):
        variant_context(ctx, LawId.T23)


def test_greville_koliha_and_t23_with_identity_weight_agree():
    for ctx, seed in _instances(LawId.GREVILLE, 40, seed=37, weight="identity"):
        g_i = law_statement(LawId.GREVILLE, "i", ctx)
        g_ii = law_statement(LawId.GREVILLE, "ii", ctx)
        k_ii = law_statement(LawId.KOLIHA_DC, "ii", ctx)
        t_i = law_statement(LawId.T23, "i", ctx)
        assert g_i == t_i
        assert g_ii == k_ii  # p-q commutation transfers to p-q+ commutation
        assert check_equivalence(LawId.GREVILLE, ctx, seed=seed).verdict == EQUIVALENT
        assert check_equivalence(LawId.KOLIHA_DC, ctx, seed=seed).verdict == EQUIVALENT


def test_greville_truth_is_scale_invariant():
    rng = random.Random(38)
    for ctx, _ in _instances(LawId.GREVILLE, 15, seed=39, weight="identity", size=2):
        mu = Fraction(rng.randint(1, 5), rng.choice((1, 2, 3)))
        nu = Fraction(-rng.randint(1, 5), rng.choice((1, 2, 3)))
        scaled = law_context(ctx.a.scale(mu), ctx.b.scale(nu), ctx.c)
        for stmt in ("i", "ii"):
            assert law_statement(LawId.GREVILLE, stmt, ctx) == law_statement(
                LawId.GREVILLE, stmt, scaled
            )


def test_sampled_statement_not_available_exactly():
    a, b = _witness_pair()
    ctx = law_context(a, b, Matrix.identity(2, G))
    with pytest.raises(ValueError):
        law_statement(LawId.T32, "i", ctx)
    with pytest.raises(ValueError):
        law_statement(LawId.T23, "iv", ctx)


def test_t32_confirmation_path():
    # invertible b with identity weight makes statement (ii) true
    spec = InstanceSpec(domain=G, size=3, rank_b=3, weight_mode="identity", seed=40)
    a, b, c = gen_instance(spec, LawId.T32)
    ctx = law_context(a, b, c)
    assert law_statement(LawId.T32, "ii", ctx) is True
    verdict = inclusion_statement_sampled(LawId.T32, ctx, samples=50, seed=41)
    assert verdict.all_passed and verdict.tested == 50
    report = check_equivalence(LawId.T32, ctx, samples=50, seed=41)
    assert report.verdict == EQUIVALENT
    assert report.statement_values == {"i": True, "ii": True}


def test_t32_falsification_path_finds_witness():
    a, b = _witness_pair()
    ctx = law_context(a, b, Matrix.identity(2, G))
    assert law_statement(LawId.T32, "ii", ctx) is False
    verdict = inclusion_statement_sampled(LawId.T32, ctx, samples=500, seed=42)
    assert not verdict.all_passed
    b_inv, a_inv, product = verdict.witness
    assert is_k_inverse(a, a_inv, {1, 3})
    assert is_k_inverse(b, b_inv, {1, 3})
    assert not is_k_inverse(a @ b, product, {1, 3})
    report = check_equivalence(LawId.T32, ctx, seed=42)
    assert report.verdict == EQUIVALENT
    assert report.statement_values == {"i": False, "ii": False}
    assert report.witness is not None


def test_trivial_zero_product_is_flagged():
    zero = Matrix.zeros(2, 2, G)
    b = Matrix.from_rows([[1, 1], [1, 1]], G)
    ctx = law_context(zero, b, Matrix.identity(2, G))
    report = check_equivalence(LawId.T32, ctx, seed=43)
    assert report.verdict == EQUIVALENT
    assert report.notes is not None
    assert report.statement_values["i"] is True


@pytest.mark.parametrize("law", [LawId.T32, LawId.C33, LawId.T34, LawId.C35,
                                 LawId.T36, LawId.T37])
def test_section3_inclusion_equivalences_hold(law):
    for ctx, seed in _instances(law, 30, seed=44):
        report = check_equivalence(law, ctx, samples=60, seed=seed)
        assert report.verdict == EQUIVALENT, (law, report.statement_values, report.details)


@pytest.mark.parametrize("law", [LawId.T38, LawId.T39])
def test_four_way_equivalences_hold(law):
    for ctx, seed in _instances(law, 30, seed=45):
        report = check_equivalence(law, ctx, samples=60, seed=seed)
        assert report.verdict == EQUIVALENT, (law, report.statement_values, report.details)
        assert set(report.statement_values) == {"i", "ii", "iii", "iv"}


def test_t38_hypothesis_gate_names_failure():
    a, b = _witness_pair()
    c = Matrix.identity(2, G).scale(2)  # commutes but 2ab != ab
    ctx = law_context(a, b, c)
    with pytest.raises(HypothesisNotMet) as err:
        law_statement(LawId.T38, "i", ctx)
    assert "cab = ab" in str(err.value)
    report = check_equivalence(LawId.T38, ctx)
    assert report.verdict == HYPOTHESIS_NOT_MET
    assert report.hypotheses_met is False


def test_commutation_hypothesis_gate():
    a = Matrix.from_rows([[1, 1], [0, 1]], G)
    b = Matrix.from_rows([[1, 0], [1, 1]], G)
    c = Matrix.from_rows([[0, 1], [0, 0]], G)  # commutes with neither side
    ctx = law_context(a, b, c)
    with pytest.raises(HypothesisNotMet):
        law_statement(LawId.T23, "i", ctx)
    with pytest.raises(HypothesisNotMet):
        law_statement(LawId.T24, "i", ctx)
