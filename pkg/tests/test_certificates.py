"""Certificate verification: canonical witnesses, tampering, violation kinds."""

import pytest

from immkit import (
    BtParams,
    CertificateError,
    Graph,
    ImmersionCertificate,
    build_bt,
    canonical_bt_certificate,
    verify_certificate,
)
from immkit.certificates import (
    BAD_ENDPOINTS,
    MISSING_PAIR,
    NON_INJECTIVE,
    NOT_A_PATH,
    REPEATED_VERTEX,
    SHARED_EDGE,
)


def kinds(verdict):
    return {v.kind for v in verdict.violations}


def test_canonical_certificates_verify_for_all_small_params():
    for t in range(3, 11):
        for p in range(1, t):
            params = BtParams(t, p)
            g = build_bt(params)
            cert = canonical_bt_certificate(params)
            verdict = verify_certificate(g, cert)
            assert verdict.accepted, (t, p, verdict.violations)


def test_canonical_certificate_uses_every_edge_exactly_once():
    for t, p in [(4, 2), (5, 2), (7, 3), (9, 4)]:
        g = build_bt(BtParams(t, p))
        cert = canonical_bt_certificate(BtParams(t, p))
        usage = {}
        for walk in cert.paths.values():
            for s in range(len(walk) - 1):
                u, v = walk[s], walk[s + 1]
                edge = (u, v) if u < v else (v, u)
                usage[edge] = usage.get(edge, 0) + 1
        assert usage == {e: 1 for e in g.edges}


def test_canonical_path_length_census():
    # cross pairs keep their edge, same-part pairs ride their subdivision
    cert = canonical_bt_certificate(BtParams(5, 2))
    lengths = sorted(len(w) - 1 for w in cert.paths.values())
    assert lengths == [1] * 6 + [2] * 4
    cert = canonical_bt_certificate(BtParams(3, 1))
    assert sorted(len(w) - 1 for w in cert.paths.values()) == [1, 1, 2]


def test_order_one_certificate_is_trivially_accepted():
    cert = ImmersionCertificate(k=1, terminals=(2,), paths={})
    assert verify_certificate(build_bt(BtParams(4, 2)), cert).accepted


def test_unknown_vertex_is_structural_not_a_verdict():
    g = build_bt(BtParams(4, 2))
    cert = ImmersionCertificate(k=1, terminals=(99,), paths={})
    with pytest.raises(CertificateError, match="not in host graph"):
        verify_certificate(g, cert)


def test_shared_edge_names_both_pairs():
    params = BtParams(4, 2)
    g = build_bt(params)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    # reroute the (a1,b2) pair through b1, reusing the a1-b1 edge
    assert paths[(1, 4)] == (0, 3)
    paths[(1, 4)] = (0, 2, 1, 3)  # a1 - b1 - a2 - b2
    verdict = verify_certificate(g, ImmersionCertificate(cert.k, cert.terminals, paths))
    assert not verdict.accepted
    assert kinds(verdict) == {SHARED_EDGE}
    shared = [v for v in verdict.violations if v.kind == SHARED_EDGE]
    flagged_pairs = set().union(*(set(v.pairs) for v in shared))
    assert (1, 4) in flagged_pairs and (1, 3) in flagged_pairs


def test_missing_pair_detected():
    params = BtParams(5, 2)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    del paths[(2, 3)]
    verdict = verify_certificate(build_bt(params), ImmersionCertificate(cert.k, cert.terminals, paths))
    assert kinds(verdict) == {MISSING_PAIR}
    assert verdict.violations[0].pairs == ((2, 3),)


def test_bad_endpoints_detected():
    params = BtParams(4, 2)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    paths[(1, 3)], paths[(1, 4)] = paths[(1, 4)], paths[(1, 3)]
    verdict = verify_certificate(build_bt(params), ImmersionCertificate(cert.k, cert.terminals, paths))
    assert kinds(verdict) == {BAD_ENDPOINTS}
    assert {v.pairs[0] for v in verdict.violations} == {(1, 3), (1, 4)}


def test_walk_off_the_graph_detected():
    params = BtParams(4, 2)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    paths[(1, 2)] = (0, 1)  # a1 and a2 are not adjacent
    verdict = verify_certificate(build_bt(params), ImmersionCertificate(cert.k, cert.terminals, paths))
    assert NOT_A_PATH in kinds(verdict)


def test_repeated_vertex_detected():
    params = BtParams(4, 2)
    g = build_bt(params)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    # a1 - b1 - a2 - b2 - a1 - s_a - a2 revisits a1; every step is an edge
    assert paths[(1, 2)] == (0, 4, 1)
    paths[(1, 2)] = (0, 2, 1, 3, 0, 4, 1)
    verdict = verify_certificate(g, ImmersionCertificate(cert.k, cert.terminals, paths))
    assert REPEATED_VERTEX in kinds(verdict)
    repeated = [v for v in verdict.violations if v.kind == REPEATED_VERTEX]
    assert repeated[0].pairs == ((1, 2),)


def test_non_injective_terminals_detected():
    params = BtParams(4, 2)
    cert = canonical_bt_certificate(params)
    terminals = (0, 0) + cert.terminals[2:]
    verdict = verify_certificate(
        build_bt(params), ImmersionCertificate(cert.k, terminals, dict(cert.paths))
    )
    assert NON_INJECTIVE in kinds(verdict)


def test_all_violations_reported_not_just_first():
    params = BtParams(5, 2)
    cert = canonical_bt_certificate(params)
    paths = dict(cert.paths)
    del paths[(1, 2)]
    del paths[(4, 5)]
    verdict = verify_certificate(build_bt(params), ImmersionCertificate(cert.k, cert.terminals, paths))
    assert [v.pairs[0] for v in verdict.violations] == [(1, 2), (4, 5)]


def test_relabeling_terminal_indices_preserves_acceptance():
    import random

    rng = random.Random(3)
    params = BtParams(6, 2)
    g = build_bt(params)
    cert = canonical_bt_certificate(params)
    for _ in range(10):
        perm = list(range(1, cert.k + 1))
        rng.shuffle(perm)  # perm[i-1] = new index of old terminal i
        terminals = [0] * cert.k
        for old, new in enumerate(perm, start=1):
            terminals[new - 1] = cert.terminals[old - 1]
        paths = {}
        for (i, j), walk in cert.paths.items():
            ni, nj = perm[i - 1], perm[j - 1]
            if ni < nj:
                paths[(ni, nj)] = walk
            else:
                paths[(nj, ni)] = tuple(reversed(walk))
        relabeled = ImmersionCertificate(cert.k, tuple(terminals), paths)
        assert verify_certificate(g, relabeled).accepted


def test_soundness_edge_multiset_recheck():
    # independent recount: accepted certificates use every host edge at most once
    for t, p in [(4, 2), (6, 3), (8, 5)]:
        g = build_bt(BtParams(t, p))
        cert = canonical_bt_certificate(BtParams(t, p))
        assert verify_certificate(g, cert).accepted
        count = {}
        for walk in cert.paths.values():
            for s in range(len(walk) - 1):
                e = tuple(sorted((walk[s], walk[s + 1])))
                count[e] = count.get(e, 0) + 1
        assert all(c <= 1 for c in count.values())


def test_certificate_shape_validation():
    with pytest.raises(CertificateError):
        ImmersionCertificate(k=0, terminals=(), paths={})
    with pytest.raises(CertificateError):
        ImmersionCertificate(k=2, terminals=(0,), paths={})
    with pytest.raises(CertificateError):
        ImmersionCertificate(k=2, terminals=(0, 1), paths={(2, 1): (1, 0)})
    with pytest.raises(CertificateError):
        ImmersionCertificate(k=3, terminals=(0, 1, 2), paths={(1, 4): (0, 1)})
