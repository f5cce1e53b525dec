"""Named invariant suites over a scope of (group, representation) cases."""
from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import sympy as sp

from .groups import FiniteGroupData, cyclic_subgroup_embeddings, resolve_group
from .ktheory import (
    KContext,
    LaurentPolynomial,
    context_for,
    epsilon,
    euler_class,
    fundamental_class,
    gram_matrix,
    normalized_euler_y_coeffs,
    pairing,
    poincare_dual,
    reduce,
    restrict_kclass,
    restrict_khomology,
    sigma_coefficients,
    verify_perfect,
    PerfectionError,
)
from .oracle import (
    OracleReport,
    divide_reduce,
    exact_report,
    numeric_crosscheck,
    product_euler,
    sigma_by_splitting,
)
from .repring import (
    IntegralityError,
    VirtualCharacter,
    det_rep,
    exterior,
    joint_restriction_rank,
    restrict,
)
from .symbolic import DELTA, VSTAR, exterior_symbol, generic_entry, universal_sigma
from . import flags as flagmod

__all__ = [
    "SUITES",
    "INVARIANT_MANIFEST",
    "REFERENCE_TABLES",
    "SuiteResult",
    "Case",
    "default_scope",
    "run_suite",
    "run_all",
    "specialize",
]

DEFAULT_GROUPS = ("c1", "c2", "c3", "c4", "c6", "c2xc2", "c5", "s3", "d4", "q8")

# Printed pairing tables, in the symbols d = delta*, V = V*, L2 = lambda^2(V*).
REFERENCE_TABLES = {
    2: [["1", "1"], ["1", "1-d"]],
    3: [["1", "1", "1"], ["1", "1", "1-d"], ["1", "1-d", "1-d*(4-V)"]],
    4: [
        ["1", "1", "1", "1"],
        ["1", "1", "1", "1-d"],
        ["1", "1", "1-d", "1-d*(5-V)"],
        ["1", "1-d", "1-d*(5-V)", "1-d*(14-6*V+V**2-L2)"],
    ],
}
# The one printed entry that disagrees with the recursion.
KNOWN_DISCREPANCY = (4, 3, 3)

INVARIANT_MANIFEST = {
    # repring
    "cartan_formula": "lambda_ring",
    "newton_integrality": "lambda_ring",
    "adams_ring_hom": "lambda_ring",
    "adams_composition": "lambda_ring",
    "exterior_genuine": "lambda_ring",
    "exterior_vanishing_above_dim": "lambda_ring",
    "top_exterior_is_det": "lambda_ring",
    "dual_involution": "lambda_ring",
    "restriction_commutes_with_ops": "restriction",
    "joint_restriction_injective": "restriction",
    # ktheory
    "euler_multiplicativity": "oracle_equivalence",
    "normalization_identity": "closed_forms",
    "unit_identity": "closed_forms",
    "lambda_row_explicit": "closed_forms",
    "epsilon_closed_forms": "closed_forms",
    "epsilon_general_formula": "closed_forms",
    "reduce_vs_division": "oracle_equivalence",
    "pairing_symmetry": "perfection",
    "pairing_bilinearity": "perfection",
    "pairing_first_row": "perfection",
    "kronecker_duality": "perfection",
    "poincare_dual_of_one": "perfection",
    "perfect_pairing": "perfection",
    "splitting_principle": "closed_forms",
    "restriction_epsilon": "restriction",
    "restriction_sigma": "restriction",
    "restriction_gram": "restriction",
    "restriction_fundamental_class": "restriction",
    "generic_tables": "tables",
    "concrete_tables": "tables",
    "dim4_corner_adjudication": "tables",
    # flags
    "flag_independence": "flags",
    "flag_functional": "flags",
    "flag_unit_determinant": "flags",
    "flag_multiplicativity": "flags",
    # oracle
    "euler_vs_product": "oracle_equivalence",
    "numeric_crosscheck": "oracle_equivalence",
}


@dataclass(frozen=True)
class Case:
    group: FiniteGroupData
    rep: VirtualCharacter

    @property
    def label(self) -> str:
        return f"{self.group.name}:{self.rep.format(one=None)}"


@dataclass
class SuiteResult:
    name: str
    cases_run: int = 0
    failures: list[OracleReport] = field(default_factory=list)
    elapsed: float = 0.0
    checks: Counter = field(default_factory=Counter)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "checks": dict(sorted(self.checks.items())),
            "failures": [f.to_json() for f in self.failures],
            "notes": list(self.notes),
            "elapsed": round(self.elapsed, 3),
        }


class _Recorder:
    def __init__(self):
        self.failures: list[OracleReport] = []
        self.checks: Counter = Counter()
        self.notes: list[str] = []

    def exact(self, check: str, subject: str, lhs, rhs, detail: str = "") -> bool:
        self.checks[check] += 1
        rep = exact_report(f"{check} | {subject}", lhs, rhs, detail)
        if not rep.matches:
            self.failures.append(rep)
        return rep.matches

    def true(self, check: str, subject: str, cond: bool, detail: str = "") -> bool:
        self.checks[check] += 1
        if not cond:
            self.failures.append(OracleReport(f"{check} | {subject}", False, "false", "true", detail))
        return cond

    def merge(self, other: _Recorder):
        self.failures.extend(other.failures)
        self.checks.update(other.checks)
        self.notes.extend(other.notes)


# -- scope ---------------------------------------------------------------


def genuine_reps(g: FiniteGroupData, dim: int) -> list[VirtualCharacter]:
    """All genuine representations of the given dimension, in a fixed order."""
    dims = g.dims()
    out = []

    def rec(i, left, mults):
        if i == len(dims):
            if left == 0:
                out.append(VirtualCharacter.from_multiplicities(g, mults))
            return
        for m in range(left // dims[i] + 1):
            rec(i + 1, left - m * dims[i], mults + [m])

    rec(0, dim, [])
    return out


def default_scope(seed: int = 0, per_dim: int = 2, groups: Sequence[str] = DEFAULT_GROUPS) -> list[Case]:
    """Per group and dimension 1..4: the trivial representation plus ``per_dim - 1``
    further genuine ones drawn with a seeded RNG (always including the sum of all
    distinct one-step irreducibles when it fits)."""
    rng = random.Random(seed)
    cases = []
    for name in groups:
        g = resolve_group(name)
        for d in range(1, 5):
            reps = genuine_reps(g, d)
            triv = d * VirtualCharacter.trivial(g)
            others = [r for r in reps if r != triv]
            pick = [triv] + rng.sample(others, min(per_dim - 1, len(others)))
            cases.extend(Case(g, r) for r in pick)
    return cases


def parse_scope(items: Iterable[tuple[str, str]]) -> list[Case]:
    from .repring import parse_rep

    out = []
    for gname, rspec in items:
        g = resolve_group(gname)
        out.append(Case(g, parse_rep(g, rspec)))
    return out


def _random_genuine(rng: random.Random, g: FiniteGroupData, max_dim: int = 4) -> VirtualCharacter:
    d = rng.randint(1, max_dim)
    reps = genuine_reps(g, d)
    return rng.choice(reps)


def _random_virtual(rng: random.Random, g: FiniteGroupData, spread: int = 2) -> VirtualCharacter:
    return VirtualCharacter.from_multiplicities(g, [rng.randint(-spread, spread) for _ in range(g.num_classes)])


def _random_kclass(rng: random.Random, ctx: KContext):
    return ctx.kclass([_random_virtual(rng, ctx.group, 1) for _ in range(ctx.n)])


def _random_laurent(rng: random.Random, ctx: KContext) -> LaurentPolynomial:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        terms[rng.randint(-3, 2 * ctx.n + 3)] = _random_virtual(rng, ctx.group)
    return LaurentPolynomial(ctx.group, terms)


# -- symbolic specialization ----------------------------------------------


def specialize(expr: sp.Expr, ctx: KContext) -> VirtualCharacter:
    """Substitute delta* = det(V)^-1, V* and lambda^k(V*) of a concrete context."""
    n = ctx.n
    vd = ctx.v.dual()
    values = {VSTAR: vd, DELTA: ctx.det_inv}
    for k in range(2, n):
        values[exterior_symbol(k)] = exterior(vd, k)
    gens = list(values)
    poly = sp.Poly(sp.expand(expr), *gens)
    acc = VirtualCharacter.zero(ctx.group)
    for exps, coeff in poly.terms():
        term = VirtualCharacter.constant(ctx.group, int(coeff))
        for gsym, e in zip(gens, exps):
            if e:
                term = term * values[gsym] ** e
        acc = acc + term
    return acc


def _reference_expr(text: str) -> sp.Expr:
    return sp.expand(sp.sympify(text, locals={"d": DELTA, "V": VSTAR, "L2": exterior_symbol(2)}))


# -- suites ---------------------------------------------------------------


def _suite_tables(case: Case, rec: _Recorder, rng: random.Random):
    ctx = context_for(case.rep)
    n = ctx.n
    G = gram_matrix(ctx)
    for i in range(n):
        for j in range(n):
            want = specialize(generic_entry(n, i, j).epsilon, ctx)
            rec.exact("concrete_tables", f"{case.label} <y^{i},y^{j}>", G[i][j], want)
    if n in REFERENCE_TABLES:
        for i in range(n):
            for j in range(n):
                if (n, i, j) == KNOWN_DISCREPANCY:
                    continue
                ref = specialize(_reference_expr(REFERENCE_TABLES[n][i][j]), ctx)
                rec.exact("concrete_tables", f"{case.label} printed <y^{i},y^{j}>", G[i][j], ref)


def _generic_tables(rec: _Recorder):
    for n, table in REFERENCE_TABLES.items():
        for i in range(n):
            for j in range(n):
                computed = generic_entry(n, i, j).epsilon
                ref = _reference_expr(table[i][j])
                if (n, i, j) == KNOWN_DISCREPANCY:
                    notes = dim4_corner_report()
                    rec.true("dim4_corner_adjudication", "recursion = division", notes["recursion_equals_division"])
                    rec.true("dim4_corner_adjudication", "trivial V vanishing", notes["trivial_vanishes"])
                    rec.true(
                        "dim4_corner_adjudication",
                        "printed constant fails trivial check",
                        not notes["printed_trivial_vanishes"],
                    )
                    rec.notes.append(
                        f"dim 4 <y^3,y^3>: printed table has inner constant {notes['printed_constant']}, "
                        f"recursion gives {notes['computed_constant']} ({notes['computed_text']})"
                    )
                    continue
                rec.exact("generic_tables", f"dim {n} <y^{i},y^{j}>", sp.expand(computed - ref), sp.Integer(0))


def dim4_corner_report() -> dict:
    """Adjudicate the dim-4 corner entry <y^3, y^3> = epsilon(y^6)."""
    entry = generic_entry(4, 3, 3)
    generic_sigma = universal_sigma(4)
    y = sp.Symbol("y")
    monic = y**4 + sum(generic_sigma[k - 1] * y ** (4 - k) for k in range(1, 5))
    rem = sp.rem(sp.expand(y**6), sp.expand(monic), y)
    division_eps = sp.expand(rem.subs(y, 1))
    printed = _reference_expr(REFERENCE_TABLES[4][3][3])
    trivial = {VSTAR: 4, exterior_symbol(2): 6, DELTA: 1}
    computed_inner = entry.inner
    return {
        "recursion_equals_division": sp.expand(entry.epsilon - division_eps) == 0,
        "trivial_vanishes": entry.epsilon.subs(trivial) == 0,
        "printed_trivial_vanishes": printed.subs(trivial) == 0,
        "printed_constant": int(sp.Poly(sp.expand((1 - printed) / DELTA), VSTAR, exterior_symbol(2)).coeff_monomial(1)),
        "computed_constant": int(sp.Poly(computed_inner, VSTAR, exterior_symbol(2)).coeff_monomial(1)),
        "computed_text": entry.text(),
        "printed_value_trivial": int(printed.subs(trivial)),
        "computed_value_trivial": int(entry.epsilon.subs(trivial)),
    }


def _suite_closed_forms(case: Case, rec: _Recorder, rng: random.Random):
    ctx = context_for(case.rep)
    n = ctx.n
    s_ = ctx.sigma_at
    d = ctx.det_inv
    lbl = case.label
    ycoeffs = normalized_euler_y_coeffs(ctx)
    rec.exact("normalization_identity", lbl, ycoeffs, [ctx.sigma_at(n - j) for j in range(n)] + [ctx.sigma_at(0)])
    total = VirtualCharacter.trivial(ctx.group)
    for sj in ctx.sigma:
        total = total + sj
    rec.exact("unit_identity", lbl, total, d)
    for j in range(n):
        rec.exact("lambda_row_explicit", f"{lbl} s=0 j={j}", ctx.lambda_row(0)[j], -s_(n - j))
        rec.exact(
            "lambda_row_explicit", f"{lbl} s=1 j={j}", ctx.lambda_row(1)[j], -s_(n - j + 1) + s_(1) * s_(n - j)
        )
        rec.exact(
            "lambda_row_explicit",
            f"{lbl} s=2 j={j}",
            ctx.lambda_row(2)[j],
            -s_(n - j + 2) + s_(1) * s_(n - j + 1) + (s_(2) - s_(1) * s_(1)) * s_(n - j),
        )
    s1, s2, s3 = s_(1), s_(2), s_(3)
    displayed = [
        1 - d,
        1 - d * (1 - s1),
        1 - d * (1 - (s1 + s2) + s1 * s1),
        1 - d * (1 - (s1 + s2 + s3) + (2 * s1 * s2 + s1 * s1) - s1 * s1 * s1),
    ]
    ypow = LaurentPolynomial.y(ctx.group)
    for s, want in enumerate(displayed):
        got = epsilon(reduce(ctx, ypow ** (n + s)))
        rec.exact("epsilon_closed_forms", f"{lbl} s={s}", got, want)
    for s in range(0, 9):
        inner = VirtualCharacter.trivial(ctx.group)
        for t in range(s):
            inner = inner + ctx.lambda_row(t)[n - 1]
        got = epsilon(ctx.y_power(n + s))
        rec.exact("epsilon_general_formula", f"{lbl} s={s}", got, 1 - d * inner)
    if ctx.group.is_abelian():
        summands = flagmod.decompose_abelian(ctx.v)
        rec.exact("splitting_principle", lbl, list(ctx.sigma), sigma_by_splitting(summands))


def _suite_flags(case: Case, rec: _Recorder, rng: random.Random):
    if not case.group.is_abelian():
        return False
    ctx = context_for(case.rep)
    rep = flagmod.verify_flag_independence(ctx)
    rec.true(
        "flag_independence",
        case.label,
        rep.passed,
        f"{rep.flag_count} flags, sums {[c.format() for c in rep.sum_coordinates]}",
    )
    fl = flagmod.enumerate_flags(ctx)
    for f in fl[:6]:
        x = _random_kclass(rng, ctx)
        coords = flagmod.flag_coordinates(f, x)
        total = VirtualCharacter.zero(ctx.group)
        for c in coords:
            total = total + c
        rec.exact("flag_functional", f"{case.label} {f.labels()}", total, epsilon(x))
        M = flagmod.flag_change_of_basis(f)
        det = VirtualCharacter.trivial(ctx.group)
        for i in range(ctx.n):
            det = det * M[i][i]
        rec.true("flag_unit_determinant", f"{case.label} {f.labels()}", det.is_line() or (-det).is_line())
        basis = flagmod.flag_basis(f)
        for i in range(ctx.n - 1):
            step = reduce(ctx, LaurentPolynomial(ctx.group, {0: 1, 1: -f.order[i]}))
            rec.exact("flag_multiplicativity", f"{case.label} {f.labels()} i={i}", basis[i] * step, basis[i + 1])
    return True


def _suite_perfection(case: Case, rec: _Recorder, rng: random.Random):
    ctx = context_for(case.rep)
    n = ctx.n
    lbl = case.label
    G = gram_matrix(ctx)
    rec.true("pairing_symmetry", lbl, all(G[i][j] == G[j][i] for i in range(n) for j in range(n)))
    rec.true("pairing_first_row", lbl, all(G[0][j] == 1 and G[j][0] == 1 for j in range(n)))
    try:
        cert = verify_perfect(ctx)
        rec.true("perfect_pairing", lbl, cert.check())
    except PerfectionError as exc:
        rec.true("perfect_pairing", lbl, False, str(exc))
    one = ctx.one()
    pd1 = poincare_dual(one)
    rec.exact("poincare_dual_of_one", lbl, pd1, fundamental_class(ctx))
    for i in range(n):
        rec.exact("kronecker_duality", f"{lbl} i={i}", pd1.evaluate(ctx.y_power(i)), 1)
    x, w, u = (_random_kclass(rng, ctx) for _ in range(3))
    r = _random_virtual(rng, ctx.group)
    rec.exact("pairing_symmetry", f"{lbl} random", pairing(x, w), pairing(w, x))
    rec.exact("pairing_bilinearity", f"{lbl} additivity", pairing(x + u, w), pairing(x, w) + pairing(u, w))
    rec.exact("pairing_bilinearity", f"{lbl} R(G)-linearity", pairing(x * r, w), r * pairing(x, w))
    rec.exact("kronecker_duality", f"{lbl} cap", poincare_dual(x).evaluate(w), pairing(x, w))


def _suite_restriction(case: Case, rec: _Recorder, rng: random.Random):
    ctx = context_for(case.rep)
    lbl = case.label
    G = gram_matrix(ctx)
    x = _random_kclass(rng, ctx)
    for e in cyclic_subgroup_embeddings(case.group):
        sub = f"{lbl} -> {e.subgroup.name}{sorted(e.image)}"
        rx = restrict_kclass(x, e)
        rec.exact("restriction_epsilon", sub, restrict(epsilon(x), e), epsilon(rx))
        rec.exact("restriction_sigma", sub, [restrict(s, e) for s in ctx.sigma], sigma_coefficients(restrict(ctx.v, e)))
        Gr = gram_matrix(rx.context)
        rec.exact("restriction_gram", sub, [[restrict(c, e) for c in row] for row in G], Gr)
        fc = restrict_khomology(fundamental_class(ctx), e)
        rec.exact("restriction_fundamental_class", sub, fc, fundamental_class(rx.context))
        a = _random_genuine(rng, case.group)
        b = _random_genuine(rng, case.group)
        k = rng.randint(0, 6)
        ops = [
            ("tensor", restrict(a * b, e), restrict(a, e) * restrict(b, e)),
            ("dual", restrict(a.dual(), e), restrict(a, e).dual()),
            ("adams", restrict(a.adams(k), e), restrict(a, e).adams(k)),
            ("exterior", restrict(exterior(a, k % 5), e), exterior(restrict(a, e), k % 5)),
        ]
        for name, lhs, rhs in ops:
            rec.exact("restriction_commutes_with_ops", f"{sub} {name}", lhs, rhs)


def _group_restriction(g: FiniteGroupData, rec: _Recorder):
    r = joint_restriction_rank(g)
    rec.exact("joint_restriction_injective", g.name, r, g.num_classes, f"rank {r} of {g.num_classes}")


def _lambda_ring_checks(a: VirtualCharacter, b: VirtualCharacter, rng: random.Random, rec: _Recorder):
    g = a.group
    lbl = f"{g.name}:{a.format(one=None)} & {b.format(one=None)}"
    try:
        la = [exterior(a, k) for k in range(a.dim + 2)]
        lb = [exterior(b, k) for k in range(b.dim + 2)]
        lab = [exterior(a + b, k) for k in range(a.dim + b.dim + 2)]
        rec.true("newton_integrality", lbl, True)
    except IntegralityError as exc:
        rec.true("newton_integrality", lbl, False, str(exc))
        return
    for k in range(len(lab)):
        acc = VirtualCharacter.zero(g)
        for i in range(k + 1):
            j = k - i
            if i < len(la) and j < len(lb):
                acc = acc + la[i] * lb[j]
        rec.exact("cartan_formula", f"{lbl} k={k}", lab[k], acc)
    rec.true("exterior_genuine", lbl, all(x.is_genuine() for x in la[: a.dim + 1]))
    rec.exact("exterior_vanishing_above_dim", lbl, la[a.dim + 1], 0)
    rec.exact("top_exterior_is_det", lbl, la[a.dim], det_rep(a))
    rec.true("top_exterior_is_det", f"{lbl} line", la[a.dim].is_line())
    k, m = rng.randint(0, 2 * g.exponent), rng.randint(0, 2 * g.exponent)
    rec.exact("adams_ring_hom", f"{lbl} k={k} mult", (a * b).adams(k), a.adams(k) * b.adams(k))
    rec.exact("adams_ring_hom", f"{lbl} k={k} add", (a + b).adams(k), a.adams(k) + b.adams(k))
    rec.exact("adams_ring_hom", f"{lbl} k={k} unit", VirtualCharacter.trivial(g).adams(k), 1)
    rec.exact("adams_composition", f"{lbl} k={k} m={m}", a.adams(k).adams(m), a.adams(k * m))
    rec.exact("dual_involution", lbl, a.dual().dual(), a)
    rec.exact("dual_involution", f"{lbl} adams", a.dual(), a.adams(g.exponent - 1))


def _oracle_group(g: FiniteGroupData, cases: list[Case], rec: _Recorder, rng: random.Random, count: int):
    for t in range(count):
        case = cases[t % len(cases)]
        ctx = context_for(case.rep)
        p = _random_laurent(rng, ctx)
        rec.exact("reduce_vs_division", f"{case.label} #{t}", reduce(ctx, p), divide_reduce(ctx, p))
    for case in cases:
        v = case.rep
        w = rng.choice(cases).rep
        rec.exact("euler_multiplicativity", f"{case.label} + {w.format(one=None)}", euler_class(v + w), euler_class(v) * euler_class(w))
        if g.is_abelian():
            rec.exact("euler_vs_product", case.label, euler_class(v), product_euler(flagmod.decompose_abelian(v)))
        ctx = context_for(v)
        total = VirtualCharacter.trivial(g)
        for s in ctx.sigma:
            total = total + s
        rep = numeric_crosscheck(f"unit identity {case.label}", total, ctx.det_inv)
        rec.true("numeric_crosscheck", case.label, rep.matches, rep.detail)


SUITES = ("tables", "closed_forms", "flags", "perfection", "lambda_ring", "restriction", "oracle_equivalence")

_PER_CASE: dict[str, Callable] = {
    "tables": _suite_tables,
    "closed_forms": _suite_closed_forms,
    "flags": _suite_flags,
    "perfection": _suite_perfection,
    "restriction": _suite_restriction,
}


def _run_cases(fn, scope, seed, workers) -> list[tuple[_Recorder, bool]]:
    def one(idx_case):
        idx, case = idx_case
        rec = _Recorder()
        ran = fn(case, rec, random.Random(f"{seed}:{idx}:{case.label}"))
        return rec, ran is not False

    items = list(enumerate(scope))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(one, items))
    return [one(it) for it in items]


def run_suite(
    name: str,
    scope: Sequence[Case] | None = None,
    seed: int = 0,
    workers: int = 1,
    lambda_samples: int = 200,
    oracle_samples: int = 100,
) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    scope = list(default_scope(seed) if scope is None else scope)
    if not scope:
        raise ValueError("scope must be non-empty")
    t0 = time.perf_counter()
    result = SuiteResult(name)
    rec = _Recorder()
    if name in _PER_CASE:
        for r, ran in _run_cases(_PER_CASE[name], scope, seed, workers):
            rec.merge(r)
            result.cases_run += int(ran)
    groups = list(dict.fromkeys(c.group for c in scope))
    if name == "tables":
        _generic_tables(rec)
    elif name == "restriction":
        for g in groups:
            _group_restriction(g, rec)
    elif name == "lambda_ring":
        rng = random.Random(f"{seed}:lambda")
        for t in range(lambda_samples):
            g = groups[t % len(groups)]
            _lambda_ring_checks(_random_genuine(rng, g), _random_genuine(rng, g), rng, rec)
            result.cases_run += 1
    elif name == "oracle_equivalence":
        for g in groups:
            cases = [c for c in scope if c.group == g]
            _oracle_group(g, cases, rec, random.Random(f"{seed}:oracle:{g.name}"), oracle_samples)
            result.cases_run += oracle_samples
    result.failures = rec.failures
    result.checks = rec.checks
    result.notes = rec.notes
    result.elapsed = time.perf_counter() - t0
    return result


def run_all(scope: Sequence[Case] | None = None, seed: int = 0, workers: int = 1) -> list[SuiteResult]:
    return [run_suite(s, scope, seed, workers) for s in SUITES]
