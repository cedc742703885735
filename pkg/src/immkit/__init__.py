"""Exact toolkit for clique immersions in direct products of graphs.

Builds the split-clique family bt(t, p), takes direct products, emits and
verifies clique-immersion certificates, computes immersion-number bounds with
a complete backtracking search, and audits the natural product lower bound
k = (t-1)(r-1)+1, which the family refutes.
"""

__version__ = "0.1.0"

from .graph import (
    Bipartition,
    BranchA,
    BranchB,
    Graph,
    GraphError,
    OddCycleWitness,
    ProductRole,
    SubA,
    SubB,
    bipartition,
    connected_components,
    direct_product,
)
from .construct import BtMetrics, BtParams, build_bt, expected_metrics
from .certificates import (
    CertificateError,
    ImmersionCertificate,
    VerificationVerdict,
    Violation,
    canonical_bt_certificate,
    verify_certificate,
)
from .search import (
    BoundsReport,
    FindOutcome,
    SearchBudget,
    degree_census_upper_bound,
    find_clique_immersion,
    immersion_number,
)
from .audit import (
    AuditParams,
    AuditReport,
    HypothesisUnmetError,
    audit_counterexample,
    branch_branch_census,
    degree_threshold_scan,
)

__all__ = [
    "__version__",
    "Bipartition",
    "BranchA",
    "BranchB",
    "Graph",
    "GraphError",
    "OddCycleWitness",
    "ProductRole",
    "SubA",
    "SubB",
    "bipartition",
    "connected_components",
    "direct_product",
    "BtMetrics",
    "BtParams",
    "build_bt",
    "expected_metrics",
    "CertificateError",
    "ImmersionCertificate",
    "VerificationVerdict",
    "Violation",
    "canonical_bt_certificate",
    "verify_certificate",
    "BoundsReport",
    "FindOutcome",
    "SearchBudget",
    "degree_census_upper_bound",
    "find_clique_immersion",
    "immersion_number",
    "AuditParams",
    "AuditReport",
    "HypothesisUnmetError",
    "audit_counterexample",
    "branch_branch_census",
    "degree_threshold_scan",
]
