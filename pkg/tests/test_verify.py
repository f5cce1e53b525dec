import pytest

from ktdual.groups import resolve_group
from ktdual.repring import parse_rep
from ktdual.verify import (
    INVARIANT_MANIFEST,
    SUITES,
    Case,
    SuiteResult,
    default_scope,
    dim4_corner_report,
    run_suite,
    specialize,
)


def case(g, spec):
    grp = resolve_group(g)
    return Case(grp, parse_rep(grp, spec))


def test_tables_trivial_dim2():
    r = run_suite("tables", [case("c1", "2*triv")])
    assert r.passed and r.cases_run == 1
    assert r.checks["concrete_tables"] >= 8


def test_flags_c5():
    r = run_suite("flags", [case("c5", "z+z2+z3+z4")])
    assert r.passed and r.cases_run == 1 and r.checks["flag_independence"] == 1


def test_restriction_s3():
    r = run_suite("restriction", [case("s3", "triv+std")])
    assert r.passed
    assert r.checks["joint_restriction_injective"] == 1


def test_default_scope_shape():
    scope = default_scope()
    names = {c.group.name for c in scope}
    assert len(names) == 10
    assert all(1 <= c.rep.dim <= 4 and c.rep.is_genuine() for c in scope)
    assert [c.label for c in scope] == [c.label for c in default_scope()]


def test_empty_scope_rejected():
    with pytest.raises(ValueError):
        run_suite("tables", [])
    with pytest.raises(KeyError):
        run_suite("nonsense", [case("c2", "sigma")])


def test_manifest_coverage():
    seen = set()
    scope = [case("c2", "triv+sigma"), case("s3", "triv+std"), case("c3", "2*triv+omega")]
    for name in SUITES:
        r = run_suite(name, scope, lambda_samples=10, oracle_samples=5)
        assert r.passed, [f.to_line() for f in r.failures]
        for check in r.checks:
            assert INVARIANT_MANIFEST[check] == name
        seen |= set(r.checks)
    assert seen == set(INVARIANT_MANIFEST)


def test_failures_are_data():
    r = SuiteResult("x")
    assert r.passed
    doc = r.to_json()
    assert doc["passed"] and doc["failures"] == []


def test_deterministic_and_threaded():
    scope = default_scope(seed=4)[:12]
    a = run_suite("perfection", scope, seed=4)
    b = run_suite("perfection", scope, seed=4, workers=4)
    assert a.checks == b.checks and a.cases_run == b.cases_run
    assert [f.subject for f in a.failures] == [f.subject for f in b.failures]


def test_detects_a_planted_error():
    import ktdual.verify as v

    saved = v.REFERENCE_TABLES[3][2][2]
    v.REFERENCE_TABLES[3][2][2] = "1-d*(3-V)"
    try:
        r = run_suite("tables", [case("c1", "3*triv")])
    finally:
        v.REFERENCE_TABLES[3][2][2] = saved
    assert not r.passed
    assert any("dim 3" in f.subject or "printed" in f.subject for f in r.failures)


def test_dim4_corner_report():
    rep = dim4_corner_report()
    assert rep["recursion_equals_division"] and rep["trivial_vanishes"]
    assert not rep["printed_trivial_vanishes"]
    assert (rep["printed_constant"], rep["computed_constant"]) == (14, 15)


def test_specialize_round_trip():
    from ktdual.ktheory import context_for, gram_matrix
    from ktdual.symbolic import generic_entry

    c = context_for(parse_rep(resolve_group("q8"), "rho+chi_i+triv"))
    G = gram_matrix(c)
    assert c.n == 4
    for i in range(c.n):
        for j in range(c.n):
            assert specialize(generic_entry(c.n, i, j).epsilon, c) == G[i][j]
