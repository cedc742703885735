"""Product audit: measured censuses, residual identities, verdicts."""

import pytest

from immkit import (
    AuditParams,
    BtParams,
    GraphError,
    HypothesisUnmetError,
    audit_counterexample,
    branch_branch_census,
    build_bt,
    degree_census_upper_bound,
    degree_threshold_scan,
    direct_product,
)
from immkit.audit import render_narrative, report_to_doc, sweep_params
from immkit.graph import Graph


def test_smallest_audit_instance():
    report = audit_counterexample(AuditParams(4, 2, 4, 2))
    assert report.k == 10
    assert report.component_count == 2
    assert report.component_census == (8, 8)
    assert report.census_formulas == (8, 8)
    assert report.residuals == (2, 2)
    assert report.identity_checks == (True, True)
    assert report.degree_threshold_count == 16
    assert report.verdict


def test_mixed_audit_instance():
    report = audit_counterexample(AuditParams(4, 2, 5, 2))
    assert report.k == 13
    assert report.census_formulas == (10, 10)
    assert report.component_census == (10, 10)
    assert report.verdict


def test_asymmetric_audit_instance():
    report = audit_counterexample(AuditParams(5, 2, 5, 2))
    assert report.k == 17
    assert report.census_formulas == (13, 12)
    assert report.component_census == (13, 12)
    assert report.residuals == (4, 5)
    assert report.identity_checks == (True, True)
    assert report.verdict


def test_hypothesis_unmet_is_reported_not_crashed():
    with pytest.raises(HypothesisUnmetError, match="hypothesis unmet"):
        AuditParams(4, 1, 4, 2)
    with pytest.raises(HypothesisUnmetError):
        AuditParams(4, 2, 5, 4)


def test_branch_census_requires_role_labels():
    plain = Graph(4, [(0, 3), (1, 2)])
    with pytest.raises(GraphError, match="product role"):
        branch_branch_census(plain)


def test_census_formula_identity_grid():
    # k - (ps+qu) == (p-1)(u-1) + (q-1)(s-1) and its mirror, exactly
    for p in range(2, 7):
        for q in range(2, 7):
            for s in range(2, 7):
                for u in range(2, 7):
                    t, r = p + q, s + u
                    k = (t - 1) * (r - 1) + 1
                    assert k - (p * s + q * u) == (p - 1) * (u - 1) + (q - 1) * (s - 1)
                    assert k - (p * u + q * s) == (p - 1) * (s - 1) + (q - 1) * (u - 1)


def test_degree_threshold_scan_counts():
    prod = direct_product(build_bt(BtParams(4, 2)), build_bt(BtParams(4, 2)))
    at_k10 = degree_threshold_scan(prod, 10)
    assert len(at_k10) == 16
    assert all(prod.degree(v) == 9 for v in at_k10)
    assert degree_threshold_scan(prod, 11) == ()
    mixed = direct_product(build_bt(BtParams(4, 2)), build_bt(BtParams(5, 2)))
    assert len(degree_threshold_scan(mixed, 13)) == 20


def test_only_branch_by_branch_vertices_reach_the_threshold():
    from immkit.graph import ProductRole, is_branch_role

    report_params = AuditParams(5, 3, 4, 2)
    prod = direct_product(
        build_bt(BtParams(report_params.t, report_params.p)),
        build_bt(BtParams(report_params.r, report_params.s)),
    )
    k = report_params.k
    for v in range(prod.vertex_count):
        role = prod.roles[v]
        assert isinstance(role, ProductRole)
        both_branch = is_branch_role(role.left) and is_branch_role(role.right)
        assert (prod.degree(v) >= k - 1) == both_branch


def test_verdict_implies_census_bound_below_k():
    for params in [AuditParams(4, 2, 4, 2), AuditParams(5, 2, 4, 2), AuditParams(6, 3, 5, 2)]:
        report = audit_counterexample(params)
        assert report.verdict
        prod = direct_product(
            build_bt(BtParams(params.t, params.p)), build_bt(BtParams(params.r, params.s))
        )
        assert degree_census_upper_bound(prod) <= report.k - 1


def test_sweep_grid_contents():
    tuples = sweep_params(6)
    assert AuditParams(4, 2, 4, 2) in tuples
    assert AuditParams(6, 3, 5, 2) in tuples
    assert all(
        min(p.p, p.q, p.s, p.u) >= 2 and p.t <= 6 and p.r <= 6 for p in tuples
    )
    assert len(tuples) == 36  # (1 + 2 + 3)^2 part choices


def test_report_doc_and_narrative_round():
    report = audit_counterexample(AuditParams(4, 2, 4, 2))
    doc = report_to_doc(report, fmt="immkit-audit/1")
    assert doc["format"] == "immkit-audit/1"
    assert doc["verdict"] is True
    assert doc["component_census"] == [8, 8]
    text = render_narrative(report)
    assert "k = (t-1)(r-1)+1 = 10" in text
    assert "verdict: CONFIRMED" in text
