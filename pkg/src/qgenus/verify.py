"""Identity registry and verification harness.

Every identity is an IdentityCase: a builder that produces (lhs, rhs) series
pairs, or a structural check, at a given truncation.  run_case compares
coefficientwise in exact integer arithmetic and reports the first mismatch.
Reports serialize as JSON lines: {"id", "status", "N", "first_mismatch", "ms"}.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fnmatch import fnmatchcase
from typing import Callable

from .arith import factorize, kronecker, smallest_prime_factor_sieve
from .forms import (
    QuadForm,
    class_number,
    class_number_lift,
    discriminant_info,
    enumerate_reduced_forms,
    idoneal_discriminants,
    is_fundamental,
    unit_count,
)
from .genus import (
    Genus,
    genus_count_ratio,
    genus_partition,
    phi_correspondence,
    psi_lift,
    residue_partition,
    smallest_coprime_values,
    theorem1_parameters,
)
from .lambert import (
    NAMED_SERIES,
    l1_series,
    l2_series,
    named_series_expand,
    rep_formula_series,
    table_series,
    twisted_divisor_series,
    REP_FORMULA_FORMS,
)
from .series import (
    EtaFactor,
    EtaQuotientSpec,
    PowerSeries,
    eta_quotient,
    phi_series,
    psi_series,
    theta_series,
    zero_series,
)

__all__ = [
    "VerificationReport",
    "IdentityCase",
    "Comparison",
    "StructuralCheck",
    "NotApplicable",
    "run_case",
    "build_registry",
    "run_all",
    "select_cases",
    "reports_to_json_lines",
    "verify_theorem1",
    "verify_section2",
    "verify_section5",
    "forced_failure_case",
    "IDONEAL_TABLE",
    "idoneal_table_pairs",
    "CONS_DISCRIMINANTS",
    "MANIFEST",
    "N_THETA",
    "N_ETA",
    "N_REP",
]

# default truncations: theta/Lambert identities at 1000, eta quotient
# identities at 500 (the series reciprocal is the costly step), formula
# sweeps at 10^4
N_THETA = 1000
N_ETA = 500
N_REP = 10000

# all known (p, -delta) with delta and delta*p^2 both idoneal; matches
# both_idoneal_pairs(2000) and is pinned as a registry case
IDONEAL_TABLE = {
    2: (3, 4, 7, 8, 12, 15, 16, 24, 28, 40, 48, 60, 72, 88, 112, 120,
        168, 232, 240, 280, 312, 408, 520, 760, 840, 1320, 1848),
    3: (3, 4, 8, 11, 20, 32, 35),
    5: (3, 4),
    7: (3,),
}

# fundamental idoneal discriminants of class number 2 (the Lambert
# decomposition family of the two-class identity); pinned and re-derived
CONS_DISCRIMINANTS = (-15, -20, -24, -35, -40, -51, -52, -88, -91, -115,
                      -123, -148, -187, -232, -235, -267, -403, -427)


def idoneal_table_pairs() -> list[tuple[int, int]]:
    return [(-d, p) for p in sorted(IDONEAL_TABLE) for d in IDONEAL_TABLE[p]]


PSI_PROPERTY_PAIRS = idoneal_table_pairs() + [(-92, 5), (-63, 2), (-7, 3), (-28, 3)]
COR52_PAIRS = [(-92, 5), (-63, 2), (-7, 3), (-28, 3)]
HLIFT_EXTRA_PAIRS = [(-92, 5), (-20, 3), (-7, 2), (-7, 3), (-28, 3)]


@dataclass
class VerificationReport:
    case_id: str
    status: str  # "pass" | "fail" | "skip"
    n: int
    first_mismatch: tuple[int, int, int] | None
    ms: float
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "id": self.case_id,
            "status": self.status,
            "N": self.n,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "ms": round(self.ms, 3),
        }


@dataclass
class Comparison:
    """One or more (lhs, rhs) series pairs compared coefficientwise."""

    pairs: list[tuple[PowerSeries, PowerSeries]]


@dataclass
class StructuralCheck:
    """A non-series predicate; detail mimics the (n, lhs, rhs) mismatch triple."""

    ok: bool
    detail: tuple[int, int, int] | None = None


@dataclass
class NotApplicable:
    reason: str = ""


@dataclass
class IdentityCase:
    case_id: str
    n: int
    build: Callable[[int], "Comparison | StructuralCheck | NotApplicable"]
    scales_with_n: bool = True


def run_case(case: IdentityCase, n_override: int | None = None) -> VerificationReport:
    n = case.n
    if n_override is not None and case.scales_with_n:
        n = n_override
    start = time.perf_counter()
    try:
        outcome = case.build(n)
    except Exception as exc:  # a crash is a failure, not an abort
        ms = (time.perf_counter() - start) * 1000.0
        return VerificationReport(case.case_id, "fail", n, None, ms, note=f"error: {exc}")
    ms = (time.perf_counter() - start) * 1000.0
    if isinstance(outcome, NotApplicable):
        return VerificationReport(case.case_id, "skip", n, None, ms, note=outcome.reason)
    if isinstance(outcome, StructuralCheck):
        status = "pass" if outcome.ok else "fail"
        return VerificationReport(case.case_id, status, n, None if outcome.ok else outcome.detail, ms)
    for lhs, rhs in outcome.pairs:
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            return VerificationReport(case.case_id, "fail", n, mm, ms)
    return VerificationReport(case.case_id, "pass", n, None, ms)


# ---------------------------------------------------------------------------
# series shorthands


def _theta(f, n: int) -> PowerSeries:
    return theta_series(f, n)


def _theta_sub(f, k: int, n: int) -> PowerSeries:
    return theta_series(f, n).subst_power(k)


def _eta(n: int, leading: int, *factors) -> PowerSeries:
    spec = EtaQuotientSpec(leading, tuple(EtaFactor(*f) for f in factors))
    return eta_quotient(spec, n)


def _alternate(s: PowerSeries) -> PowerSeries:
    """q -> -q."""
    return PowerSeries([v if i % 2 == 0 else -v for i, v in enumerate(s.coeffs)])


def _psi_sub(k: int, n: int) -> PowerSeries:
    return psi_series(n).subst_power(k)


def _phi_sub(k: int, n: int) -> PowerSeries:
    return phi_series(n).subst_power(k)


def _projection_sum(base: PowerSeries, p: int, r: int, delta: int, n: int) -> PowerSeries:
    """The projection block of the connecting identities.

    Odd p: sum of P_{p,i} over 1 <= i < p with (r i | p) = 1.
    p = 2: the single projection P_{2^(t+1), r} with t read off delta.
    """
    if p == 2:
        m = 1 << (theorem1_parameters(delta) + 1)
        return base.project(m, r)
    acc = zero_series(n)
    for i in range(1, p):
        if kronecker(r * i, p) == 1:
            acc = acc + base.project(p, i)
    return acc


def _connecting_rhs(f, p: int, r: int, delta: int, weight: int, n: int) -> PowerSeries:
    """weight * theta(f)(q^{p^2}) + projection block of theta(f)."""
    base = _theta(f, n)
    return base.subst_power(p * p) * weight + _projection_sum(base, p, r, delta, n)


# ---------------------------------------------------------------------------
# case builders


def _theorem1_cases(delta: int, p: int) -> list[IdentityCase]:
    """One case per genus of delta*p^2, both discriminants idoneal.

    Each case re-verifies the identity with a second represented residue to
    confirm independence of the choice of r.
    """
    info_lo = discriminant_info(delta)
    info_hi = discriminant_info(delta * p * p)
    if not (info_lo.is_idoneal and info_hi.is_idoneal):
        raise ValueError(f"({delta}, {p}) is not a both-idoneal pair")
    w = unit_count(delta)
    cases = []
    part_lo, part_hi, mapping = phi_correspondence(delta, p)

    def make(i: int, G: Genus):
        lifted = G.forms[0]
        base = part_lo.genera[mapping[i]].forms[0]

        def build(n: int):
            r1, r2 = smallest_coprime_values(lifted, 2 * delta * p * p, count=2)
            lhs = _theta(lifted, n) * w
            pairs = [
                (lhs, _connecting_rhs(base, p, r, delta, w, n))
                for r in (r1, r2)
            ]
            return Comparison(pairs)

        return IdentityCase(f"thm1/{delta}/p{p}/G{i + 1}", N_THETA, build)

    for i, G in enumerate(part_hi.genera):
        cases.append(make(i, G))
    return cases


def _pinned_connecting_case(case_id, lifted, base, p, proj, delta, weight):
    """A worked instance with the paper's exact forms and projection list.

    proj is a list of (modulus, residue) projections applied to theta(base).
    """

    def build(n: int):
        lhs = _theta(lifted, n) * weight
        rhs = _theta_sub(base, p * p, n) * weight
        basis = _theta(base, n)
        for m, r in proj:
            rhs = rhs + basis.project(m, r)
        return Comparison([(lhs, rhs)])

    return IdentityCase(case_id, N_THETA, build)


def _corollary52_cases(delta: int, p: int) -> list[IdentityCase]:
    w = unit_count(delta)
    cases = []
    part_lo, part_hi, mapping = phi_correspondence(delta, p)

    def make(i: int, G: Genus):
        g = part_lo.genera[mapping[i]]
        if len(G.forms) % len(g.forms):
            raise ArithmeticError(f"|G| not a multiple of |g| for ({delta}, {p})")
        ratio = len(G.forms) // len(g.forms)

        def build(n: int):
            r = smallest_coprime_values(G.forms[0], 2 * delta * p * p)[0]
            lhs = zero_series(n)
            for F in G.forms:
                lhs = lhs + _theta(F, n)
            lhs = lhs * w
            rhs = zero_series(n)
            for f in g.forms:
                rhs = rhs + _connecting_rhs(f, p, r, delta, w * ratio, n)
            return Comparison([(lhs, rhs)])

        return IdentityCase(f"cor52/{delta}/p{p}/G{i + 1}", N_THETA, build)

    for i, G in enumerate(part_hi.genera):
        cases.append(make(i, G))
    return cases


def _theorem51_cases(delta: int, p: int) -> list[IdentityCase]:
    """The generalized identity, one case per (source class, target genus)."""
    w = unit_count(delta)
    part_hi = genus_partition(delta * p * p)
    cases = []

    def make(f: QuadForm, i: int, G: Genus):
        def build(n: int):
            lift = psi_lift(f, G, p)
            if not lift.members:
                return NotApplicable("empty lift set: hypothesis of the theorem unmet")
            r = smallest_coprime_values(lift.members[0], 2 * delta * p * p)[0]
            lhs = zero_series(n)
            for F in lift.members:
                lhs = lhs + _theta(F, n)
            lhs = lhs * w
            rhs = _connecting_rhs(f, p, r, delta, w * len(lift.members), n)
            return Comparison([(lhs, rhs)])

        return IdentityCase(f"thm51/{delta}/p{p}/{f}/G{i + 1}", N_THETA, build)

    for f in enumerate_reduced_forms(delta):
        for i, G in enumerate(part_hi.genera):
            cases.append(make(f, i, G))
    return cases


def _psi_partition_case(delta: int, p: int) -> IdentityCase:
    """The lift set properties: equal sizes, disjointness, and the exact
    cover of each corresponding genus with |G| = |Psi| * |g|."""

    def build(n: int) -> StructuralCheck:
        part_lo, part_hi, mapping = phi_correspondence(delta, p)
        for i, G in enumerate(part_hi.genera):
            for j, g in enumerate(part_lo.genera):
                lifts = [set(psi_lift(f, G, p).members) for f in g.forms]
                sizes = {len(s) for s in lifts}
                if len(sizes) != 1:
                    return StructuralCheck(False, (i, min(sizes), max(sizes)))
                union: set = set()
                total = 0
                for s in lifts:
                    total += len(s)
                    union |= s
                if len(union) != total:  # pairwise disjointness
                    return StructuralCheck(False, (i, len(union), total))
                if mapping[i] == j:
                    if union != set(G.forms):
                        return StructuralCheck(False, (i, len(union), len(G.forms)))
                    if len(G.forms) != len(lifts[0]) * len(g.forms):
                        return StructuralCheck(
                            False, (i, len(G.forms), len(lifts[0]) * len(g.forms))
                        )
        return StructuralCheck(True)

    return IdentityCase(f"struct/psi/{delta}/p{p}", 0, build, scales_with_n=False)


def _cons_orientations(delta: int) -> list[tuple[int, int]]:
    """(t, p) readings of -delta = t*p with p an odd prime and t an odd prime
    or a power of 2; both readings are kept when -delta is an odd semiprime."""
    m = -delta
    odd = [q for q, _ in factorize(m) if q != 2]
    if len(odd) == 1:
        return [(m // odd[0], odd[0])]
    if len(odd) == 2 and m % 2 == 1:
        p1, p2 = odd
        return [(p1, p2), (p2, p1)]
    raise ValueError(f"{delta} does not factor as required for the two-class identity")


def _cons_case(delta: int, f: QuadForm) -> IdentityCase:
    def build(n: int):
        lhs = _theta(f, n)
        m = smallest_coprime_values(f, 2 * delta)[0]
        pairs = []
        for t, p in _cons_orientations(delta):
            eps = kronecker(-1, p)
            rhs = l1_series(delta, n) + 1 + l2_series(eps * p, -eps * t, n) * kronecker(m, p)
            pairs.append((lhs, rhs))
        return Comparison(pairs)

    return IdentityCase(f"cons/{delta}/{f}", N_THETA, build)


def _series_case(case_id: str, n_default: int, maker) -> IdentityCase:
    def build(n: int):
        out = maker(n)
        if isinstance(out, tuple):
            out = [out]
        return Comparison(list(out))

    return IdentityCase(case_id, n_default, build)


def _structural_case(case_id: str, predicate) -> IdentityCase:
    def build(n: int) -> StructuralCheck:
        return predicate()

    return IdentityCase(case_id, 0, build, scales_with_n=False)


# --- section 2 -------------------------------------------------------------


def _sec2_cases() -> list[IdentityCase]:
    def P_series(n):  # P(q) of the eta quotient section: 1 - sum (-15/n) q^n/(1+q^n)
        return 1 - named_series_expand("P_sec2", n)

    def Q_series(n):
        return named_series_expand("Q_sec2", n)

    cases = [
        _series_case("sec2/eta1", N_ETA, lambda n: (
            1 + named_series_expand("L1_15", n),
            _eta(n, 0, (3, 2), (5, 2), (1, -1), (15, -1)))),
        _series_case("sec2/eta2", N_ETA, lambda n: (
            named_series_expand("g_15", n),
            _eta(n, 1, (1, 2), (15, 2), (3, -1), (5, -1)))),
        _series_case("sec2/beta1", N_ETA, lambda n: (
            P_series(n),
            _eta(n, 0, (1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1)))),
        _series_case("sec2/beta2", N_ETA, lambda n: (
            Q_series(n),
            _eta(n, 1, (2, 1), (3, 1), (5, 1), (30, 1), (6, -1), (10, -1)))),
        _series_case("sec2/d3", N_ETA, lambda n: (
            (psi_series(n) * _psi_sub(15, n)).project(2, 0),
            _psi_sub(6, n) * _psi_sub(10, n))),
        _series_case("sec2/qd3", N_ETA, lambda n: (
            (_psi_sub(3, n) * _psi_sub(5, n)).shift(1).project(2, 0),
            (_psi_sub(2, n) * _psi_sub(30, n)).shift(4))),
        _series_case("sec2/lsp", N_ETA, lambda n: (
            phi_series(n) * _phi_sub(15, n),
            _alternate(P_series(n)) - _alternate(Q_series(n)))),
        _series_case("sec2/qsp", N_ETA, lambda n: (
            _phi_sub(3, n) * _phi_sub(5, n),
            _alternate(P_series(n)) + _alternate(Q_series(n)))),
        _series_case("sec2/p0", N_ETA, lambda n: (
            (phi_series(n) * _phi_sub(15, n)).project(2, 0),
            _theta_sub((1, 1, 4), 4, n))),
        _series_case("sec2/p00", N_ETA, lambda n: (
            (_phi_sub(3, n) * _phi_sub(5, n)).project(2, 0),
            _theta_sub((2, 1, 2), 4, n))),
        _series_case("sec2/pr", N_ETA, lambda n: (
            _theta((1, 1, 4), n),
            1 + named_series_expand("L1_15", n) + named_series_expand("g_15", n))),
        _series_case("sec2/pr2", N_ETA, lambda n: (
            _theta((2, 1, 2), n),
            1 + named_series_expand("L1_15", n) - named_series_expand("g_15", n))),
        _series_case("sec2/pr3", N_ETA, lambda n: [
            (_eta(n, 0, (3, 2), (5, 2), (1, -1), (15, -1)) * 2,
             _theta((1, 1, 4), n) + _theta((2, 1, 2), n)),
            (_eta(n, 1, (1, 2), (15, 2), (3, -1), (5, -1)) * 2,
             _theta((1, 1, 4), n) - _theta((2, 1, 2), n)),
        ]),
    ]
    return cases


# --- section 1: eta expressions for phi, psi, E(-q) ------------------------


def _sec1_cases() -> list[IdentityCase]:
    cases = [
        _series_case("sec1/phi", N_ETA, lambda n: (
            phi_series(n), _eta(n, 0, (2, 5), (4, -2), (1, -2)))),
        _series_case("sec1/psi", N_ETA, lambda n: (
            psi_series(n), _eta(n, 0, (2, 2), (1, -1)))),
        _series_case("sec1/eminus", N_ETA, lambda n: (
            _eta(n, 0, (1, 1, -1)), _eta(n, 0, (2, 3), (4, -1), (1, -1)))),
    ]
    for cid, lifted, base, proj in (
        ("sec1/aa1", (1, 0, 45), (1, 0, 5), [(3, 1)]),
        ("sec1/aa2", (5, 0, 9), (1, 0, 5), [(3, 2)]),
        ("sec1/aa3", (7, 4, 7), (2, 2, 3), [(3, 1)]),
        ("sec1/aa4", (2, 2, 23), (2, 2, 3), [(3, 2)]),
    ):
        cases.append(_pinned_connecting_case(cid, lifted, base, 3, proj, -20, 1))
    return cases


# --- section 3 worked proofs ------------------------------------------------


def _sec3_cases() -> list[IdentityCase]:
    specs = [
        ("sec3/-3/p3/(1,1,7)", (1, 1, 7), (1, 1, 1), 3, [(3, 1)], -3, 3),
        ("sec3/-4/p5/(1,0,25)", (1, 0, 25), (1, 0, 1), 5, [(5, 1), (5, 4)], -4, 2),
        ("sec3/-4/p5/(2,2,13)", (2, 2, 13), (1, 0, 1), 5, [(5, 2), (5, 3)], -4, 2),
        ("sec3/-3/p7/(1,1,37)", (1, 1, 37), (1, 1, 1), 7, [(7, 1), (7, 2), (7, 4)], -3, 3),
        ("sec3/-3/p7/(3,3,13)", (3, 3, 13), (1, 1, 1), 7, [(7, 3), (7, 5), (7, 6)], -3, 3),
        ("sec3/-112/p2/(1,0,112)", (1, 0, 112), (1, 0, 28), 2, [(8, 1)], -112, 1),
        ("sec3/-112/p2/(4,4,29)", (4, 4, 29), (1, 0, 28), 2, [(8, 5)], -112, 1),
        ("sec3/-112/p2/(7,0,16)", (7, 0, 16), (4, 0, 7), 2, [(8, 7)], -112, 1),
        ("sec3/-112/p2/(11,6,11)", (11, 6, 11), (4, 0, 7), 2, [(8, 3)], -112, 1),
    ]
    return [
        _pinned_connecting_case(cid, lifted, base, p, proj, delta, w)
        for cid, lifted, base, p, proj, delta, w in specs
    ]


# --- section 4 --------------------------------------------------------------


def _table_case(name: str) -> IdentityCase:
    """Paper prime power table vs the divisor-sum oracle."""

    def maker(n: int):
        entry = NAMED_SERIES[name]
        spf = smallest_prime_factor_sieve(n)
        return (table_series(entry["table"], n, spf),
                twisted_divisor_series(*entry["divisor"], n))

    return _series_case(f"sec4/table/{name}", N_REP, maker)


def _lambert_route_case(name: str) -> IdentityCase:
    """Lambert expansion vs the divisor-sum oracle for a named series."""

    def maker(n: int):
        entry = NAMED_SERIES[name]
        return (named_series_expand(name, n), twisted_divisor_series(*entry["divisor"], n))

    return _series_case(f"lambert/route/{name}", N_THETA, maker)


def _rep_cases() -> list[IdentityCase]:
    cases = []
    for delta, forms in sorted(REP_FORMULA_FORMS.items()):
        for form in sorted(forms):
            f = QuadForm(*form)

            def maker(n, delta=delta, f=f):
                spf = smallest_prime_factor_sieve(n)
                return (rep_formula_series(delta, f, n, spf), _theta(f, n))

            cases.append(_series_case(f"sec4/rep/{delta}/{f}", N_REP, maker))
    return cases


def _pointwise_product_on_classes(s1: PowerSeries, s2: PowerSeries, m: int, keep) -> PowerSeries:
    """Coefficientwise product restricted to exponents n with (n mod m) in keep."""
    n = min(s1.truncation, s2.truncation)
    return PowerSeries([
        s1.coeffs[i] * s2.coeffs[i] if i % m in keep else 0 for i in range(n + 1)
    ])


def _sec4_cases() -> list[IdentityCase]:
    A = lambda n: named_series_expand("A_36", n)
    D = lambda n: named_series_expand("D_36", n)
    f75 = lambda n: named_series_expand("f_75", n)
    g75 = lambda n: named_series_expand("g_75", n)
    P = lambda n: named_series_expand("P_180", n)
    Q = lambda n: named_series_expand("Q_180", n)
    R = lambda n: named_series_expand("R_180", n)
    S = lambda n: named_series_expand("S_180", n)

    def sub(s, k):
        return s.subst_power(k)

    cases = [
        _pinned_connecting_case("sec4/36o", (1, 0, 9), (1, 0, 1), 3, [(3, 1)], -4, 2),
        _pinned_connecting_case("sec4/36oo", (2, 2, 5), (1, 0, 1), 3, [(3, 2)], -4, 2),
        _series_case("sec4/36p", N_THETA, lambda n: (
            _theta((1, 0, 1), n), 1 + A(n) * 4)),
        _series_case("sec4/36pp", N_THETA, lambda n: (
            _theta((1, 0, 1), n).project(3, 1) - _theta((1, 0, 1), n).project(3, 2),
            D(n) * 4)),
        _series_case("sec4/36dec1", N_THETA, lambda n: (
            _theta((1, 0, 9), n), 1 + A(n) + sub(A(n), 9) * 3 + D(n))),
        _series_case("sec4/36dec2", N_THETA, lambda n: (
            _theta((2, 2, 5), n), 1 + A(n) + sub(A(n), 9) * 3 - D(n))),
        _pinned_connecting_case("sec4/71w", (1, 1, 19), (1, 1, 1), 5, [(5, 1), (5, 4)], -3, 3),
        _pinned_connecting_case("sec4/71ww", (3, 3, 7), (1, 1, 1), 5, [(5, 2), (5, 3)], -3, 3),
        _series_case("sec4/oee", N_THETA, lambda n: (
            (_theta((1, 1, 19), n) + _theta((3, 3, 7), n)) * 3,
            _theta((1, 1, 1), n) + _theta_sub((1, 1, 1), 25, n) * 5)),
        _series_case("sec4/oe", N_THETA, lambda n: (
            (_theta((1, 1, 19), n) - _theta((3, 3, 7), n)) * 3,
            _theta((1, 1, 1), n).project(5, 1) + _theta((1, 1, 1), n).project(5, 4)
            - _theta((1, 1, 1), n).project(5, 2) - _theta((1, 1, 1), n).project(5, 3))),
        _series_case("sec4/75t", N_THETA, lambda n: (
            _theta((1, 1, 1), n), 1 + f75(n) * 6)),
        _series_case("sec4/75tt", N_THETA, lambda n: (
            _theta((1, 1, 1), n).project(5, 1) + _theta((1, 1, 1), n).project(5, 4)
            - _theta((1, 1, 1), n).project(5, 2) - _theta((1, 1, 1), n).project(5, 3),
            g75(n) * 6)),
        _series_case("sec4/k", N_THETA, lambda n: (
            _theta((1, 1, 19), n) + _theta((3, 3, 7), n),
            2 + f75(n) * 2 + sub(f75(n), 25) * 10)),
        _series_case("sec4/kk", N_THETA, lambda n: (
            _theta((1, 1, 19), n) - _theta((3, 3, 7), n), g75(n) * 2)),
        _series_case("sec4/kkk", N_THETA, lambda n: (
            _theta((1, 1, 19), n), 1 + f75(n) + sub(f75(n), 25) * 5 + g75(n))),
        _series_case("sec4/kkkkk", N_THETA, lambda n: (
            _theta((3, 3, 7), n), 1 + f75(n) + sub(f75(n), 25) * 5 - g75(n))),
        _series_case("sec4/dec1", N_THETA, lambda n: (
            _theta((1, 0, 5), n), 1 + P(n) + Q(n))),
        _series_case("sec4/dec2", N_THETA, lambda n: (
            _theta((2, 2, 3), n), 1 + P(n) - Q(n))),
        _series_case("sec4/dec3", N_THETA, lambda n: (
            _theta((1, 0, 5), n).project(3, 1) - _theta((1, 0, 5), n).project(3, 2),
            R(n) + S(n))),
        _series_case("sec4/dec4", N_THETA, lambda n: (
            _theta((2, 2, 3), n).project(3, 1) - _theta((2, 2, 3), n).project(3, 2),
            R(n) - S(n))),
    ]

    def ab_case(cid, form, sq, sr, ss):
        def maker(n):
            lhs = _theta(form, n) * 2
            rhs = (2 + P(n) + Q(n) * sq
                   - sub(P(n), 3) * 2 + sub(Q(n), 3) * (2 * sq)
                   + sub(P(n), 9) * 3 + sub(Q(n), 9) * (3 * sq)
                   + R(n) * sr + S(n) * ss)
            return (lhs, rhs)

        return _series_case(cid, N_THETA, maker)

    cases += [
        ab_case("sec4/ab1", (1, 0, 45), 1, 1, 1),
        ab_case("sec4/ab2", (5, 0, 9), 1, -1, -1),
        ab_case("sec4/ab3", (7, 4, 7), -1, 1, -1),
        ab_case("sec4/ab4", (2, 2, 23), -1, -1, 1),
    ]
    cases += [_table_case(name) for name in
              ("A_36", "D_36", "f_75", "g_75", "P_180", "Q_180", "R_180", "S_180")]
    cases += _rep_cases()
    cases += [
        _series_case("sec4/cor36", N_REP, lambda n: [
            (_theta((1, 0, 9), n).project(3, 0), _theta((2, 2, 5), n).project(3, 0)),
            (_pointwise_product_on_classes(_theta((1, 0, 9), n), _theta((2, 2, 5), n), 3, (1, 2)),
             zero_series(n)),
        ]),
        _series_case("sec4/cor75", N_REP, lambda n: [
            (_theta((1, 1, 19), n).project(5, 0), _theta((3, 3, 7), n).project(5, 0)),
            (_pointwise_product_on_classes(_theta((1, 1, 19), n), _theta((3, 3, 7), n), 5, (1, 2, 3, 4)),
             zero_series(n)),
        ]),
    ]
    for delta in CONS_DISCRIMINANTS:
        for f in enumerate_reduced_forms(delta):
            cases.append(_cons_case(delta, f))
    return cases


# --- section 5 --------------------------------------------------------------


def _sec5_cases() -> list[IdentityCase]:
    f63 = lambda n: named_series_expand("f_63", n)
    g63 = lambda n: named_series_expand("g_63", n)

    def sub(s, k):
        return s.subst_power(k)

    cases = []

    def lift_sum_case(cid, terms, base, proj):
        def maker(n):
            lhs = zero_series(n)
            for coeff, form in terms:
                lhs = lhs + _theta(form, n) * coeff
            rhs = _theta_sub(base, 25, n) * 3
            basis = _theta(base, n)
            for m, r in proj:
                rhs = rhs + basis.project(m, r)
            return (lhs, rhs)

        return _series_case(cid, N_THETA, maker)

    cases += [
        lift_sum_case("sec5/nt1", [(1, (1, 0, 575)), (2, (24, 10, 25))], (1, 0, 23), [(5, 1), (5, 4)]),
        lift_sum_case("sec5/nt2", [(1, (23, 0, 25)), (2, (25, 20, 27))], (1, 0, 23), [(5, 2), (5, 3)]),
        lift_sum_case("sec5/nt3", [(1, (9, 2, 64)), (1, (16, 14, 39)), (1, (24, 22, 29))], (3, 2, 8), [(5, 1), (5, 4)]),
        lift_sum_case("sec5/nte", [(1, (3, 2, 192)), (1, (8, 6, 73)), (1, (13, 12, 47))], (3, 2, 8), [(5, 2), (5, 3)]),
    ]

    def genus_sum_case(cid, hi_forms, lo_forms, proj):
        def maker(n):
            lhs = zero_series(n)
            for F in hi_forms:
                lhs = lhs + _theta(F, n)
            rhs = zero_series(n)
            for f in lo_forms:
                rhs = rhs + _theta_sub(f, 25, n) * 3
                basis = _theta(f, n)
                for m, r in proj:
                    rhs = rhs + basis.project(m, r)
            return (lhs, rhs)

        return _series_case(cid, N_THETA, maker)

    G1_forms = [(1, 0, 575), (9, 2, 64), (9, -2, 64), (16, 14, 39), (16, -14, 39),
                (24, 22, 29), (24, -22, 29), (24, 10, 25), (24, -10, 25)]
    G2_forms = [(23, 0, 25), (3, 2, 192), (3, -2, 192), (8, 6, 73), (8, -6, 73),
                (13, 12, 47), (13, -12, 47), (25, 20, 27), (25, -20, 27)]
    g_forms = [(1, 0, 23), (3, 2, 8), (3, -2, 8)]
    cases += [
        genus_sum_case("sec5/co1", G1_forms, g_forms, [(5, 1), (5, 4)]),
        genus_sum_case("sec5/co2", G2_forms, g_forms, [(5, 2), (5, 3)]),
    ]

    for delta, p in COR52_PAIRS:
        cases += _corollary52_cases(delta, p)
        cases += _theorem51_cases(delta, p)

    cases += [
        _series_case("sec5/gpf1", N_THETA, lambda n: (
            _theta((1, 0, 63), n) + _theta((7, 0, 9), n),
            _theta_sub((1, 1, 16), 4, n) + _theta_sub((4, 1, 4), 4, n)
            + (_theta((1, 1, 16), n) + _theta((4, 1, 4), n)).project(2, 1))),
        _series_case("sec5/gpf2", N_THETA, lambda n: (
            _theta((8, 6, 9), n),
            _theta_sub((2, 1, 8), 4, n) + _theta((2, 1, 8), n).project(2, 1))),
    ]

    def nug_case(cid, lhs_terms, proj):
        def maker(n):
            lhs = zero_series(n)
            for coeff, form in lhs_terms:
                lhs = lhs + _theta(form, n) * coeff
            rhs = _theta_sub((1, 1, 2), 9, n) * 2 + _theta((1, 1, 2), n).project(*proj)
            return (lhs, rhs)

        return _series_case(cid, N_THETA, maker)

    cases += [
        nug_case("sec5/nug", [(1, (1, 1, 16)), (1, (4, 1, 4))], (3, 1)),
        nug_case("sec5/nugg", [(2, (2, 1, 8))], (3, 2)),
        _series_case("sec5/36pp2", N_THETA, lambda n: (
            _theta((1, 1, 2), n), 1 + f63(n) * 2)),
        _series_case("sec5/36ppp", N_THETA, lambda n: (
            _theta((1, 1, 2), n).project(3, 1) - _theta((1, 1, 2), n).project(3, 2),
            g63(n) * 2)),
        _series_case("sec5/knug", N_THETA, lambda n: (
            _theta((1, 1, 16), n) + _theta((4, 1, 4), n),
            2 + f63(n) + sub(f63(n), 9) * 3 + g63(n))),
        _series_case("sec5/knugg", N_THETA, lambda n: (
            _theta((2, 1, 8), n) * 2,
            2 + f63(n) + sub(f63(n), 9) * 3 - g63(n))),
        _series_case("sec5/252n", N_THETA, lambda n: (
            f63(n).project(2, 1), f63(n) - sub(f63(n), 2) * 2 + sub(f63(n), 4))),
        _series_case("sec5/252nn", N_THETA, lambda n: (
            g63(n).project(2, 1), g63(n) + sub(g63(n), 2) * 2 + sub(g63(n), 4))),
        _series_case("sec5/dec252a", N_THETA, lambda n: (
            _theta((1, 0, 63), n) + _theta((7, 0, 9), n),
            2 + f63(n) - sub(f63(n), 2) * 2 + sub(f63(n), 4) * 2
            + sub(f63(n), 9) * 3 - sub(f63(n), 18) * 6 + sub(f63(n), 36) * 6
            + g63(n) + sub(g63(n), 2) * 2 + sub(g63(n), 4) * 2)),
        _series_case("sec5/dec252b", N_THETA, lambda n: (
            _theta((8, 6, 9), n) * 2,
            2 + f63(n) - sub(f63(n), 2) * 2 + sub(f63(n), 4) * 2
            + sub(f63(n), 9) * 3 - sub(f63(n), 18) * 6 + sub(f63(n), 36) * 6
            - g63(n) - sub(g63(n), 2) * 2 - sub(g63(n), 4) * 2)),
        _series_case("sec5/6m", N_THETA, lambda n: (
            _theta((1, 1, 16), n) - _theta((4, 1, 4), n),
            _eta(n, 1, (3, 1), (21, 1)) * 2)),
        _series_case("sec5/n1", N_THETA, lambda n: (
            _theta((1, 1, 16), n).project(2, 1),
            _theta((1, 0, 63), n) - _theta_sub((1, 1, 16), 4, n))),
        _series_case("sec5/n2", N_THETA, lambda n: (
            _theta((4, 1, 4), n).project(2, 1),
            _theta((7, 0, 9), n) - _theta_sub((4, 1, 4), 4, n))),
        _series_case("sec5/even4", N_THETA, lambda n: (
            _theta((4, 1, 4), n).project(2, 0),
            _theta_sub((2, 1, 8), 2, n) * 2 - _theta_sub((4, 1, 4), 4, n))),
        _series_case("sec5/even5", N_THETA, lambda n: (
            _theta((1, 1, 16), n).project(2, 0),
            _theta_sub((2, 1, 8), 2, n) * 2 - _theta_sub((1, 1, 16), 4, n))),
        _series_case("sec5/focus", N_THETA, lambda n: (
            _theta((1, 0, 63), n) - _theta((7, 0, 9), n),
            _eta(n, 1, (3, 1, -1), (21, 1, -1)) * 2)),
    ]
    cases += [_lambert_route_case(name) for name in ("f_63", "g_63")]
    return cases


# --- structural invariants ---------------------------------------------------


def _struct_cases(deep: bool = True) -> list[IdentityCase]:
    cases = []

    def idoneal_table_check() -> StructuralCheck:
        from .forms import both_idoneal_pairs

        computed = both_idoneal_pairs(2000)
        expected = sorted(idoneal_table_pairs())
        ok = sorted(computed) == expected
        return StructuralCheck(ok, None if ok else (0, len(computed), len(expected)))

    cases.append(_structural_case("struct/idoneal-table", idoneal_table_check))

    def cons_list_check() -> StructuralCheck:
        found = tuple(
            d for d in idoneal_discriminants(2000)
            if is_fundamental(d) and class_number(d) == 2
        )
        ok = tuple(sorted(found, reverse=True)) == CONS_DISCRIMINANTS
        return StructuralCheck(ok, None if ok else (0, len(found), len(CONS_DISCRIMINANTS)))

    cases.append(_structural_case("struct/cons-list", cons_list_check))

    def hlift_check(delta, p):
        def check() -> StructuralCheck:
            lifted = class_number_lift(delta, p)
            actual = class_number(delta * p * p)
            return StructuralCheck(lifted == actual, None if lifted == actual else (delta, lifted, actual))

        return check

    seen = set()
    for delta, p in idoneal_table_pairs() + HLIFT_EXTRA_PAIRS:
        if (delta, p) in seen:
            continue
        seen.add((delta, p))
        tag = "hlift" if delta % p else "hlift-pdiv"
        cases.append(_structural_case(f"struct/{tag}/{delta}/p{p}", hlift_check(delta, p)))

    def ratio_check(delta, p):
        def check() -> StructuralCheck:
            table = genus_count_ratio(delta, p)
            v_hi = genus_partition(delta * p * p).num_genera
            v_lo = genus_partition(delta).num_genera
            ok = v_hi % v_lo == 0 and table == v_hi // v_lo
            return StructuralCheck(ok, None if ok else (delta, table, v_hi // v_lo))

        return check

    def oracle_check(delta):
        def check() -> StructuralCheck:
            cells = sorted(tuple(g.forms) for g in genus_partition(delta).genera)
            oracle = sorted(residue_partition(delta))
            ok = cells == oracle
            return StructuralCheck(ok, None if ok else (delta, len(cells), len(oracle)))

        return check

    if deep:
        for delta in range(-3, -401, -1):
            if delta % 4 in (0, 1):
                cases.append(_structural_case(f"struct/oracle/{delta}", oracle_check(delta)))
                for p in (2, 3, 5, 7):
                    cases.append(_structural_case(f"struct/ratio16/{delta}/p{p}", ratio_check(delta, p)))

    for delta, p in PSI_PROPERTY_PAIRS:
        cases.append(_psi_partition_case(delta, p))
    return cases


# ---------------------------------------------------------------------------
# registry


def build_registry(deep: bool = True) -> list[IdentityCase]:
    """The full case list.  deep=False drops the per-discriminant structural
    sweeps (oracle and genus-ratio over |delta| <= 400) for quick runs."""
    cases: list[IdentityCase] = []
    cases += _sec1_cases()
    cases += _sec2_cases()
    cases += _sec3_cases()
    for delta, p in idoneal_table_pairs():
        cases += _theorem1_cases(delta, p)
    cases += _sec4_cases()
    cases += _sec5_cases()
    cases += [_lambert_route_case(name) for name in
              ("A_36", "D_36", "f_75", "g_75", "P_180", "Q_180", "R_180", "S_180", "L1_15", "g_15")]
    cases += _struct_cases(deep)
    ids = [c.case_id for c in cases]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise RuntimeError(f"duplicate case ids: {sorted(dup)}")
    return cases


# ids that must exist for the registry to be considered complete: every
# numbered identity of the source material has exactly one case
MANIFEST = (
    ["sec1/phi", "sec1/psi", "sec1/eminus",
     "sec1/aa1", "sec1/aa2", "sec1/aa3", "sec1/aa4"]
    + [f"sec2/{x}" for x in
       ("eta1", "eta2", "beta1", "beta2", "d3", "qd3", "lsp", "qsp", "p0", "p00", "pr", "pr2", "pr3")]
    + ["sec3/-3/p3/(1,1,7)", "sec3/-4/p5/(1,0,25)", "sec3/-4/p5/(2,2,13)",
       "sec3/-3/p7/(1,1,37)", "sec3/-3/p7/(3,3,13)",
       "sec3/-112/p2/(1,0,112)", "sec3/-112/p2/(4,4,29)",
       "sec3/-112/p2/(7,0,16)", "sec3/-112/p2/(11,6,11)"]
    + [f"sec4/{x}" for x in
       ("36o", "36oo", "36p", "36pp", "36dec1", "36dec2",
        "71w", "71ww", "oee", "oe", "75t", "75tt", "k", "kk", "kkk", "kkkkk",
        "dec1", "dec2", "dec3", "dec4", "ab1", "ab2", "ab3", "ab4",
        "rep/-36/(1,0,9)", "rep/-36/(2,2,5)", "rep/-75/(1,1,19)", "rep/-75/(3,3,7)",
        "rep/-180/(1,0,45)", "rep/-180/(5,0,9)", "rep/-180/(7,4,7)", "rep/-180/(2,2,23)",
        "cor36", "cor75")]
    + [f"sec5/{x}" for x in
       ("nt1", "nt2", "nt3", "nte", "co1", "co2",
        "gpf1", "gpf2", "nug", "nugg", "36pp2", "36ppp", "knug", "knugg",
        "252n", "252nn", "dec252a", "dec252b",
        "focus", "6m", "n1", "n2", "even4", "even5")]
    + [f"cons/{d}/{QuadForm(*f)}" for d in CONS_DISCRIMINANTS
       for f in enumerate_reduced_forms(d)]
)


def select_cases(cases: list[IdentityCase], pattern: str | None) -> list[IdentityCase]:
    if not pattern:
        return cases
    patterns = [p.strip() for p in pattern.split(",") if p.strip()]
    return [c for c in cases if any(fnmatchcase(c.case_id, p) for p in patterns)]


def run_all(pattern: str | None = None, n_override: int | None = None,
            deep: bool = True, progress=None) -> tuple[list[VerificationReport], int]:
    """Run the registry (optionally filtered); exit code 0 only if every
    selected case passes (skips do not fail), 1 on any failure, 2 if the
    filter selects nothing."""
    cases = select_cases(build_registry(deep=deep), pattern)
    if not cases:
        return [], 2
    reports = []
    for case in cases:
        rep = run_case(case, n_override)
        reports.append(rep)
        if progress is not None:
            progress(rep)
    code = 0 if all(r.status != "fail" for r in reports) else 1
    return reports, code


def reports_to_json_lines(reports: list[VerificationReport]) -> str:
    return "\n".join(json.dumps(r.to_json_obj()) for r in reports)


def verify_theorem1(delta: int, p: int, n: int = N_THETA) -> list[VerificationReport]:
    """Run the connecting identity for one both-idoneal pair, one report per
    genus of delta*p^2.  Raises on non-idoneal input."""
    return [run_case(c, n) for c in _theorem1_cases(delta, p)]


def verify_section2(n: int = N_ETA) -> list[VerificationReport]:
    return [run_case(c, n) for c in _sec2_cases()]


def verify_section5(n: int = N_THETA) -> list[VerificationReport]:
    cases = _sec5_cases() + [
        _psi_partition_case(delta, p) for delta, p in COR52_PAIRS
    ]
    return [run_case(c, n) for c in cases]


def forced_failure_case() -> IdentityCase:
    """A deliberately wrong identity; exercises the comparator and the
    first-mismatch report."""

    def build(n: int):
        lhs = _theta((1, 0, 5), n)
        rhs = _theta((1, 0, 5), n) + PowerSeries([0, 0, 0, 7] + [0] * (n - 3))
        return Comparison([(lhs, rhs)])

    return IdentityCase("meta/forced-failure", 16, build)
