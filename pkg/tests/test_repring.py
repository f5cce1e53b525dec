import pytest
from hypothesis import given, settings, strategies as st

from ktdual.cyclo import zeta
from ktdual.groups import cyclic_subgroup_embeddings, make_cyclic, resolve_group
from ktdual.repring import (
    GroupMismatchError,
    IntegralityError,
    NotGenuineError,
    VirtualCharacter,
    adams,
    det_rep,
    dual,
    exterior,
    joint_restriction_rank,
    parse_rep,
    restrict,
    tensor,
)

VC = VirtualCharacter


def R(group, spec):
    return parse_rep(resolve_group(group), spec)


def test_tensor_examples():
    a = R("s3", "sign+2*std")
    assert tensor(VC.trivial(a.group), a) == a
    assert tensor(R("c2", "sigma"), R("c2", "sigma")) == R("c2", "triv")
    std = R("s3", "std")
    sq = std * std
    assert [v for v in sq.values] == [4, 0, 1]
    assert sq == R("s3", "triv+sign+std")


def test_dual_examples():
    std = R("s3", "std")
    assert dual(std) == std
    assert R("c3", "omega").dual() == R("c3", "omega2")
    a = R("c5", "z+3*z2-z4")
    assert dual(dual(a)) == a


def test_adams_examples():
    a = R("q8", "chi_i+rho")
    assert adams(a, 1) == a
    g = make_cyclic(5)
    alpha = VC.irreducible(g, "z2")
    for k in range(7):
        assert alpha.adams(k) == alpha**k
    rho = R("c2", "triv+sigma")
    assert rho.adams(2) == 2 * VC.trivial(rho.group)
    assert [v for v in rho.adams(2).values] == [2, 2]


def test_exterior_examples():
    a = R("d4", "rho1+chi_s")
    assert exterior(a, 0) == 1
    assert exterior(R("c2", "triv+sigma"), 2) == R("c2", "sigma")
    assert exterior(R("c3", "omega+omega2"), 2) == R("c3", "triv")
    alpha, beta = R("c5", "z2"), R("c5", "z3")
    assert exterior(alpha + beta, 2) == alpha * beta


def test_det_examples():
    for n in range(1, 5):
        assert det_rep(R("c1", f"{n}*triv")) == 1
    assert det_rep(R("c2", "triv+sigma")) == R("c2", "sigma")
    d = det_rep(R("s3", "std"))
    assert d == R("s3", "sign")
    assert [v for v in d.values] == [1, -1, 1]


def test_det_rejects_virtual():
    with pytest.raises(NotGenuineError):
        det_rep(R("c2", "triv-sigma"))


def test_restriction_examples():
    g = resolve_group("s3")
    embs = {e.subgroup.order: e for e in cyclic_subgroup_embeddings(g)}
    std = R("s3", "std")
    assert restrict(std, embs[1]) == 2
    c2 = resolve_group("c2")
    e = {e.subgroup.order: e for e in cyclic_subgroup_embeddings(c2)}[1]
    assert restrict(R("c2", "sigma"), e) == 1
    res = restrict(std, embs[3])
    assert [v for v in res.values] == [2, -1, -1]
    assert res.multiplicities() == (0, 1, 1)


def test_restriction_rejects_wrong_group():
    e = cyclic_subgroup_embeddings(resolve_group("s3"))[1]
    with pytest.raises(GroupMismatchError):
        restrict(R("c2", "sigma"), e)


@pytest.mark.parametrize("g,rank", [("s3", 3), ("d4", 5), ("q8", 5), ("s4", 5), ("c6", 6)])
def test_joint_restriction_rank(g, rank):
    assert joint_restriction_rank(resolve_group(g)) == rank


def test_parse_grammar():
    g = resolve_group("s3")
    assert parse_rep(g, " 2 * std + sign ") == parse_rep(g, "sign+2*std")
    assert parse_rep(g, "chi1+2*chi3") == parse_rep(g, "triv+2*std")
    assert parse_rep(g, "3") == 3 * VC.trivial(g)
    assert parse_rep(g, "std-sign").multiplicities() == (0, -1, 1)
    for bad in ["", "2*", "foo", "std**2", "2x*std"]:
        with pytest.raises((KeyError, ValueError)):
            parse_rep(g, bad)


def test_non_character_class_function():
    g = resolve_group("c2")
    with pytest.raises(IntegralityError):
        VC(g, [1, 0])
    f = VC(g, [1, 0], check=False)
    with pytest.raises(IntegralityError):
        f.multiplicities()
    assert not f.is_virtual_character()


def test_mixing_groups_fails():
    with pytest.raises(GroupMismatchError):
        R("c2", "sigma") + R("c3", "omega")


def test_json_round_trip():
    a = R("c5", "z+2*z3")
    assert VC.from_json(a.group, a.to_json()) == a


def test_format_uses_one_for_trivial():
    assert R("c2", "2*triv-sigma").format() == "2-sigma"
    assert R("c2", "2*triv-sigma").format(one=None) == "2*triv-sigma"
    assert R("c2", "triv-triv").format() == "0"


def test_line_inverse():
    a = R("c6", "z5")
    assert a * a.line_inverse() == 1
    assert (-a).line_inverse() == -a.dual()
    with pytest.raises(ArithmeticError):
        R("s3", "std").line_inverse()


# -- properties over random genuine characters --------------------------------

GROUPS = ["c1", "c2", "c3", "c4", "c6", "c2xc2", "c5", "s3", "d4", "q8", "s4"]


@st.composite
def genuine(draw, group=None, max_mult=2):
    g = resolve_group(group or draw(st.sampled_from(GROUPS)))
    mults = draw(st.lists(st.integers(0, max_mult), min_size=g.num_classes, max_size=g.num_classes))
    return VC.from_multiplicities(g, mults)


@st.composite
def genuine_pair(draw):
    g = draw(st.sampled_from(GROUPS))
    return draw(genuine(g)), draw(genuine(g))


@settings(max_examples=40, deadline=None)
@given(genuine_pair(), st.integers(0, 4))
def test_cartan_formula(pair, k):
    a, b = pair
    rhs = sum((exterior(a, i) * exterior(b, k - i) for i in range(k + 1)), VC.zero(a.group))
    assert exterior(a + b, k) == rhs


@settings(max_examples=40, deadline=None)
@given(genuine(max_mult=1))
def test_exterior_powers_are_genuine_and_vanish(a):
    for k in range(a.dim + 1):
        assert exterior(a, k).is_genuine()
    assert exterior(a, a.dim + 1) == 0
    if a.dim:
        assert exterior(a, a.dim) == det_rep(a)
        assert det_rep(a).is_line()


@settings(max_examples=40, deadline=None)
@given(genuine_pair(), st.integers(0, 13), st.integers(0, 13))
def test_adams_is_a_ring_homomorphism(pair, k, m):
    a, b = pair
    assert (a * b).adams(k) == a.adams(k) * b.adams(k)
    assert (a - b).adams(k) == a.adams(k) - b.adams(k)
    assert a.adams(k).adams(m) == a.adams(k * m)


@settings(max_examples=40, deadline=None)
@given(genuine(), st.integers(1, 5))
def test_newton_identity(a, k):
    # k lambda^k = sum_{i=1}^k (-1)^(i-1) psi^i lambda^(k-i)
    rhs = sum(((-1) ** (i - 1) * a.adams(i) * exterior(a, k - i) for i in range(1, k + 1)), VC.zero(a.group))
    assert k * exterior(a, k) == rhs


@settings(max_examples=30, deadline=None)
@given(genuine_pair())
def test_multiplicities_are_additive(pair):
    a, b = pair
    assert (a + b).multiplicities() == tuple(x + y for x, y in zip(a.multiplicities(), b.multiplicities()))
    assert (a * b).is_genuine()


def test_cyclotomic_values_of_c5():
    g = make_cyclic(5)
    z = VC.irreducible(g, "z")
    assert z.values[1] == zeta(5)
