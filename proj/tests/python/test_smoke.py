"""Smoke tests for the python bindings."""

import fractions

import pytest

import rcdim


def test_ledger_formulas():
    assert rcdim.ledger.expected_fiber_dim(8, 7, 2) == 2
    assert rcdim.ledger.codim_s1(8) == 18
    assert rcdim.ledger.step_bound(8, 7, 2) == 12
    assert rcdim.ledger.residual(8, 2) == 6
    assert rcdim.ledger.residual(8, 3) == -4
    assert rcdim.ledger.comparison_constants(8, 7) == (43, 36)
    assert rcdim.ledger.pgl_dim_floor(10) == 27
    assert rcdim.ledger.bendbreak_threshold(10) == 19
    with pytest.raises(ValueError):
        rcdim.ledger.codim_s1(7)


def test_bound_report():
    report = rcdim.ledger.max_level_degree(8)
    assert report.max_e_quadratic == 2
    assert report.max_e_closed_form == 4
    assert report.agreement is False
    assert rcdim.ledger.max_level_degree(4).max_e_closed_form == "ill-defined"


def test_ledger_chain():
    ledger = rcdim.ledger.compute_ledger(8, 7, 3)
    assert [row.codim_lower_bound for row in ledger.rows] == [18, 6, -4]
    assert ledger.rows[2].exhausted


def test_agraph():
    ag = rcdim.agraph
    tau0 = ag.make_single_vertex(2, 0)
    assert ag.expected_dim(tau0, ag.AmbientContext(5, 4)) == 5
    chain = ag.make_chain(3)
    comb = ag.chain_to_comb(chain)
    ctx = ag.AmbientContext(6, 5)
    assert ag.expected_dim(chain, ctx) == 7
    assert ag.expected_dim(comb, ctx) == 6
    assert ag.flag_count(comb) == 7
    assert ag.is_basic(comb) and not ag.is_nondegenerate(comb)
    assert len(ag.enumerate_nondegenerate_basic(5)) == 9
    assert ag.validate(ag.make_single_vertex(0, 1))  # violations reported as data
    assert ag.from_record(ag.to_record(chain)) == chain


def test_hankel():
    hk = rcdim.hankel
    assert hk.rank_exact([[1, 2, 4, 8], [2, 4, 8, 16]]) == 1
    assert hk.rnc_functional(3, 1, 2) == [1, 2, 4, 8]
    inst = hk.HankelInstance(2, 2, [1, 0, 0, 0, 1])
    assert hk.codim_dv(inst) == 2
    basis = hk.dv_basis(inst)
    assert basis == [[0, 1, 0]]
    assert hk.multiplication_recheck(inst, basis[0])
    report = hk.verify_lemma(1, 2, 2, 25, rcdim.DEFAULT_SEED)
    assert report.matched_a1b1l and not report.matched_abl
    assert report.observed_codims == {2: 25}


def test_hankel_bigint_roundtrip():
    hk = rcdim.hankel
    big = 10**40
    inst = hk.HankelInstance(1, 1, [big, 1, big])
    matrix = hk.hankel_matrix(inst)
    assert matrix[0][0] == big
    assert hk.rank_exact(matrix) == 2


def test_strata():
    st = rcdim.strata
    assert st.case_margins(5, 4) == (3, 5, 4, 3)
    audit = st.audit(4, 3)
    assert audit.passed and audit.min_margin == 2
    assert audit.tight_cases == [1, 3]
    assert st.fiber_codim(5, 2) == 8


def test_comb():
    cb = rcdim.comb
    report = cb.connectivity(3, 2)
    assert not report.connected
    assert report.component_count == 2
    assert report.component_sizes == [3, 3]
    reduced = cb.symmetry_reduced_connectivity(3, 3)
    assert reduced.component_count == cb.connectivity(3, 3).component_count
    config = cb.CombConfig([0, 1, 0])
    successors = cb.legal_moves(config, 2)
    assert any(s.labels == [1, 0, 0] for s in successors)
    assert all(not s.degenerate() for s in successors)


def test_residual_is_exact():
    value = rcdim.ledger.residual(9, 2)
    assert isinstance(value, int) or isinstance(value, fractions.Fraction)
    assert value == 10
