import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from ktdual.groups import resolve_group
from ktdual.ktheory import LaurentPolynomial, context_for, euler_class, lambda_row, reduce
from ktdual.oracle import (
    OracleReport,
    divide_reduce,
    elementary_symmetric,
    exact_report,
    numeric_crosscheck,
    product_euler,
    sigma_by_splitting,
)
from ktdual.repring import VirtualCharacter, parse_rep

VC = VirtualCharacter


def R(group, spec):
    return parse_rep(resolve_group(group), spec)


def test_divide_y_to_the_n():
    c = context_for(R("q8", "rho+chi_i"))
    y = LaurentPolynomial.y(c.group)
    assert list(divide_reduce(c, y ** c.n).coords) == [-c.sigma_at(c.n - j) for j in range(c.n)]


def test_divide_low_degree_is_identity():
    c = context_for(R("s3", "triv+std"))
    coeffs = [R("s3", "sign"), R("s3", "std"), R("s3", "2*triv")]
    p = LaurentPolynomial.from_y_coeffs(c.group, coeffs)
    assert list(divide_reduce(c, p).coords) == coeffs


def test_divide_matches_row_three():
    c = context_for(R("c2", "triv+sigma"))
    y = LaurentPolynomial.y(c.group)
    assert list(divide_reduce(c, y ** (c.n + 3)).coords) == lambda_row(c, 3)


def test_random_laurent_over_c2():
    c = context_for(R("c2", "triv+sigma"))
    rng = random.Random(2)
    for _ in range(50):
        terms = {rng.randint(-4, 6): VC.from_multiplicities(c.group, [rng.randint(-3, 3), rng.randint(-3, 3)]) for _ in range(3)}
        p = LaurentPolynomial(c.group, terms)
        assert reduce(c, p) == divide_reduce(c, p)


def test_product_euler_examples():
    g1 = resolve_group("c1")
    assert product_euler([VC.trivial(g1)]) == LaurentPolynomial(g1, {0: 1, 1: -1})
    t, s = R("c2", "triv"), R("c2", "sigma")
    assert product_euler([t, s]) == LaurentPolynomial(t.group, {0: 1, 1: -(1 + s), 2: s})
    w, w2 = R("c3", "omega"), R("c3", "omega2")
    assert product_euler([w, w2]) == LaurentPolynomial(w.group, {0: 1, 1: -(w + w2), 2: 1})


def test_product_euler_rejects_non_lines():
    with pytest.raises(ValueError):
        product_euler([R("s3", "std")])
    with pytest.raises(ValueError):
        product_euler([])


def test_elementary_symmetric():
    a, b = R("c5", "z"), R("c5", "z2")
    e = elementary_symmetric([a, b])
    assert e == [1, a + b, a * b]


def test_numeric_crosscheck_unit_identity_s3():
    c = context_for(R("s3", "triv+std"))
    lhs = VC.trivial(c.group) + sum(c.sigma, VC.zero(c.group))
    assert numeric_crosscheck("unit identity", lhs, c.det_inv).matches


def test_numeric_crosscheck_negative_control():
    c = context_for(R("s3", "triv+std"))
    lhs = 2 + sum(c.sigma, VC.zero(c.group))
    rep = numeric_crosscheck("perturbed", lhs, c.det_inv)
    assert not rep.matches
    assert "difference" in rep.detail


def test_numeric_crosscheck_printed_constant():
    # trivial V of dim 4: epsilon(y^6) is 0, the printed constant 14 would give 1 - (14 - 24 + 16 - 6) = 1
    c = context_for(R("c1", "4*triv"))
    computed = reduce(c, LaurentPolynomial.y(c.group) ** 6)
    eps = sum(computed.coords, VC.zero(c.group))
    vs = c.v.dual()
    printed = 1 - c.det_inv * (14 - 6 * vs + vs * vs - R("c1", "6*triv"))
    assert printed == 1
    assert not numeric_crosscheck("dim 4 corner", eps, printed).matches
    assert numeric_crosscheck("dim 4 corner", eps, 0).matches


def test_report_serialization():
    rep = exact_report("x", R("c2", "sigma"), R("c2", "triv"))
    assert not rep.matches
    doc = json.loads(rep.to_line())
    assert doc == {"subject": "x", "matches": False, "lhs": "sigma", "rhs": "1", "detail": ""}
    ok = exact_report("y", [R("c2", "sigma")], [R("c2", "sigma")])
    assert ok.matches and ok.to_json()["lhs"] == ["sigma"]
    assert isinstance(ok, OracleReport)


@st.composite
def abelian_reps(draw):
    g = resolve_group(draw(st.sampled_from(["c2", "c3", "c4", "c5", "c6", "c2xc2"])))
    mults = draw(st.lists(st.integers(0, 2), min_size=g.num_classes, max_size=g.num_classes).filter(lambda m: 1 <= sum(m) <= 4))
    return VC.from_multiplicities(g, mults)


@settings(max_examples=30, deadline=None)
@given(abelian_reps())
def test_splitting_principle(v):
    lines = []
    for idx, m in enumerate(v.multiplicities()):
        lines += [VC.irreducible(v.group, idx)] * m
    assert euler_class(v) == product_euler(lines)
    assert list(context_for(v).sigma) == sigma_by_splitting(lines)


@settings(max_examples=30, deadline=None)
@given(abelian_reps(), st.lists(st.tuples(st.integers(-3, 9), st.integers(-2, 2)), min_size=1, max_size=4))
def test_reduce_agrees_with_division(v, terms):
    c = context_for(v)
    p = LaurentPolynomial(c.group, {e: k * VC.trivial(c.group) + VC.irreducible(c.group, e % c.group.num_classes) for e, k in terms})
    assert reduce(c, p) == divide_reduce(c, p)
