"""Lambert-type series, twisted divisor sums, and closed representation formulas.

Every named series can be evaluated along two independent routes: expanding
the Lambert sum term by term, or convolving two completely multiplicative
characters as a divisor sum.  The paper-style prime power tables form a
third route for the series that have one.  The harness cross-asserts them.

Series and tables are described by plain dicts (JSON-compatible), so new
discriminants can be added from a config file without code changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize, kronecker
from .forms import reduce_form

__all__ = [
    "CharacterSpec",
    "TRIVIAL_CHARACTER",
    "LambertSpec",
    "table_series",
    "PrimePowerTable",
    "character_from_dict",
    "lambert_spec_from_dict",
    "table_from_dict",
    "twisted_divisor_series",
    "lambert_expand",
    "multiplicative_eval",
    "l1_spec",
    "l1_series",
    "l2_series",
    "NAMED_SERIES",
    "named_series_expand",
    "load_series_config",
    "rep_formula",
    "rep_formula_series",
    "REP_FORMULA_FORMS",
]


@dataclass(frozen=True)
class CharacterSpec:
    """n -> kronecker(top, n), or kronecker(n, top) when flipped."""

    top: int
    flipped: bool = False

    def __call__(self, n: int) -> int:
        if self.flipped:
            return kronecker(n, self.top)
        return kronecker(self.top, n)

    def values(self, n: int) -> list[int]:
        """Table of values at 0..n."""
        return [self(k) for k in range(n + 1)]


TRIVIAL_CHARACTER = CharacterSpec(1)


@dataclass(frozen=True)
class LambertSpec:
    """sum_{n>0} chi(n) * (sum_j coeff_j q^{j n}) / (1 - sign * q^{scale * n})."""

    chi: CharacterSpec
    numerator: tuple[tuple[int, int], ...]  # (coefficient, exponent multiplier j)
    denom_sign: int = 1
    denom_scale: int = 1

    def __post_init__(self):
        if self.denom_sign not in (1, -1) or self.denom_scale < 1:
            raise ValueError("bad Lambert denominator")
        for coeff, j in self.numerator:
            if j < 1:
                raise ValueError(f"numerator exponent multiplier {j} must be >= 1")


def character_from_dict(obj: dict) -> CharacterSpec:
    return CharacterSpec(int(obj["top"]), bool(obj.get("flipped", False)))


def lambert_spec_from_dict(obj: dict) -> LambertSpec:
    den = obj.get("denominator", {})
    return LambertSpec(
        chi=character_from_dict(obj["chi"]),
        numerator=tuple((int(c), int(j)) for c, j in obj["numerator"]),
        denom_sign=int(den.get("sign", 1)),
        denom_scale=int(den.get("scale", 1)),
    )


def lambert_expand(spec: LambertSpec, n: int):
    """Exact expansion through q^n by the double loop over n and the
    geometric series of the denominator."""
    from .series import PowerSeries

    coeffs = [0] * (n + 1)
    b = spec.denom_scale
    s = spec.denom_sign
    for m in range(1, n + 1):
        v = spec.chi(m)
        if v == 0:
            continue
        for coeff, j in spec.numerator:
            e = j * m
            sign = 1
            while e <= n:
                coeffs[e] += v * coeff * sign
                e += b * m
                sign *= s
    return PowerSeries(coeffs)


def twisted_divisor_series(chi1: CharacterSpec, chi2: CharacterSpec, n: int):
    """[q^k] = sum over d | k of chi1(d) * chi2(k/d).  The divisor-sum oracle."""
    from .series import PowerSeries

    vals2 = chi2.values(n)
    coeffs = [0] * (n + 1)
    for d in range(1, n + 1):
        v = chi1(d)
        if v == 0:
            continue
        for k in range(d, n + 1, d):
            coeffs[k] += v * vals2[k // d]
    return PowerSeries(coeffs)


def l1_spec(delta: int) -> LambertSpec:
    """L1(delta, q) = sum (delta|n) q^n / (1 - q^n)."""
    return LambertSpec(CharacterSpec(delta), ((1, 1),), 1, 1)


def l1_series(delta: int, n: int):
    return lambert_expand(l1_spec(delta), n)


def l2_series(a: int, b: int, n: int):
    """L2(a, b, q) = sum_{m=1}^{|b|-1} (a|n)(b|m) q^{n m} / (1 - q^{|b| n})."""
    num = tuple((kronecker(b, m), m) for m in range(1, abs(b)) if kronecker(b, m))
    return lambert_expand(LambertSpec(CharacterSpec(a), num, 1, abs(b)), n)


# ---------------------------------------------------------------------------
# multiplicative prime power tables


_RULES = {
    "one": lambda a: 1,
    "zero": lambda a: 0,
    "one_plus_alpha": lambda a: 1 + a,
    "alternating": lambda a: -1 if a % 2 else 1,
    "alternating_times_one_plus_alpha": lambda a: -(1 + a) if a % 2 else 1 + a,
    "even_exponent": lambda a: 0 if a % 2 else 1,
}


@dataclass(frozen=True)
class PrimePowerTable:
    """Rules for the value at p^alpha of a multiplicative function.

    special maps individual primes to a rule; congruence rules apply to any
    other prime by residue class.  Value at 1 is the empty product, 1.
    """

    special: tuple[tuple[int, str], ...]
    congruence: tuple[tuple[int, tuple[int, ...], str], ...]

    def prime_power(self, p: int, alpha: int) -> int:
        if alpha == 0:
            return 1
        for q, rule in self.special:
            if p == q:
                return _RULES[rule](alpha)
        for mod, residues, rule in self.congruence:
            if p % mod in residues:
                return _RULES[rule](alpha)
        raise ValueError(f"prime {p} not covered by table")


def table_from_dict(obj: dict) -> PrimePowerTable:
    special = tuple(sorted((int(p), rule) for p, rule in obj.get("special", {}).items()))
    congruence = tuple(
        (int(c["mod"]), tuple(int(r) for r in c["residues"]), c["rule"])
        for c in obj.get("congruence", ())
    )
    for _, rule in special:
        if rule not in _RULES:
            raise ValueError(f"unknown rule {rule}")
    for _, _, rule in congruence:
        if rule not in _RULES:
            raise ValueError(f"unknown rule {rule}")
    return PrimePowerTable(special, congruence)


def multiplicative_eval(table: PrimePowerTable, n: int, spf=None) -> int:
    """Product of table values over the prime factorization of n >= 1."""
    out = 1
    for p, e in factorize(n, spf):
        out *= table.prime_power(p, e)
        if out == 0:
            return 0
    return out


def table_series(table: PrimePowerTable, n: int, spf=None):
    """The q-series whose coefficients are the multiplicative values; [q^0] = 0."""
    from .series import PowerSeries

    return PowerSeries([0] + [multiplicative_eval(table, k, spf) for k in range(1, n + 1)])


# ---------------------------------------------------------------------------
# named series of the worked discriminants

# Declarative config: the same shape a JSON config file uses.  "lambert" and
# "divisor" give the two independent evaluation routes; "table" is the
# transcribed prime power table where one exists.

BUILTIN_SERIES_CONFIG: dict[str, dict] = {
    # discriminant -36
    "A_36": {
        "lambert": {"chi": {"top": -4}, "numerator": [[1, 1]], "denominator": {"sign": 1, "scale": 1}},
        "divisor": [{"top": -4}, {"top": 1}],
        "table": {
            "special": {"2": "one"},
            "congruence": [
                {"mod": 4, "residues": [1], "rule": "one_plus_alpha"},
                {"mod": 4, "residues": [3], "rule": "even_exponent"},
            ],
        },
    },
    "D_36": {
        "lambert": {"chi": {"top": 12}, "numerator": [[1, 1], [-1, 2]], "denominator": {"sign": 1, "scale": 3}},
        "divisor": [{"top": 12}, {"top": 3, "flipped": True}],
        "table": {
            "special": {"3": "zero", "2": "alternating"},
            "congruence": [
                {"mod": 12, "residues": [1], "rule": "one_plus_alpha"},
                {"mod": 12, "residues": [5], "rule": "alternating_times_one_plus_alpha"},
                {"mod": 12, "residues": [7, 11], "rule": "even_exponent"},
            ],
        },
    },
    # discriminant -75
    "f_75": {
        "lambert": {"chi": {"top": -3}, "numerator": [[1, 1]], "denominator": {"sign": 1, "scale": 1}},
        "divisor": [{"top": -3}, {"top": 1}],
        "table": {
            "special": {"3": "one"},
            "congruence": [
                {"mod": 3, "residues": [1], "rule": "one_plus_alpha"},
                {"mod": 3, "residues": [2], "rule": "even_exponent"},
            ],
        },
    },
    "g_75": {
        "lambert": {
            "chi": {"top": -15},
            "numerator": [[1, 1], [-1, 2], [-1, 3], [1, 4]],
            "denominator": {"sign": 1, "scale": 5},
        },
        "divisor": [{"top": -15}, {"top": 5}],
        "table": {
            "special": {"5": "zero", "3": "alternating"},
            "congruence": [
                {"mod": 15, "residues": [1, 4], "rule": "one_plus_alpha"},
                {"mod": 15, "residues": [7, 13], "rule": "alternating_times_one_plus_alpha"},
                {"mod": 15, "residues": [2, 8, 11, 14], "rule": "even_exponent"},
            ],
        },
    },
    # discriminant -180
    "P_180": {
        "lambert": {"chi": {"top": -20}, "numerator": [[1, 1]], "denominator": {"sign": 1, "scale": 1}},
        "divisor": [{"top": -20}, {"top": 1}],
        "table": {
            "special": {"2": "one", "5": "one"},
            "congruence": [
                {"mod": 20, "residues": [1, 3, 7, 9], "rule": "one_plus_alpha"},
                {"mod": 20, "residues": [11, 13, 17, 19], "rule": "even_exponent"},
            ],
        },
    },
    "Q_180": {
        "lambert": {"chi": {"top": 5, "flipped": True}, "numerator": [[1, 1]], "denominator": {"sign": -1, "scale": 2}},
        "divisor": [{"top": -4}, {"top": 5, "flipped": True}],
        "table": {
            "special": {"2": "alternating", "5": "one"},
            "congruence": [
                {"mod": 20, "residues": [1, 9], "rule": "one_plus_alpha"},
                {"mod": 20, "residues": [3, 7], "rule": "alternating_times_one_plus_alpha"},
                {"mod": 20, "residues": [11, 13, 17, 19], "rule": "even_exponent"},
            ],
        },
    },
    "R_180": {
        "lambert": {"chi": {"top": 60}, "numerator": [[1, 1], [-1, 2]], "denominator": {"sign": 1, "scale": 3}},
        "divisor": [{"top": 60}, {"top": -3}],
        "table": {
            "special": {"3": "zero", "2": "alternating", "5": "alternating"},
            "congruence": [
                {"mod": 60, "residues": [1, 7, 43, 49], "rule": "one_plus_alpha"},
                {"mod": 60, "residues": [23, 29, 41, 47], "rule": "alternating_times_one_plus_alpha"},
                {"mod": 60, "residues": [11, 13, 17, 19, 31, 37, 53, 59], "rule": "even_exponent"},
            ],
        },
    },
    "S_180": {
        "lambert": {
            "chi": {"top": 15, "flipped": True},
            "numerator": [[1, 1], [-1, 5]],
            "denominator": {"sign": -1, "scale": 6},
        },
        "divisor": [{"top": 15, "flipped": True}, {"top": 12}],
        "table": {
            "special": {"2": "one", "3": "zero", "5": "alternating"},
            "congruence": [
                {"mod": 60, "residues": [1, 23, 47, 49], "rule": "one_plus_alpha"},
                {"mod": 60, "residues": [7, 29, 41, 43], "rule": "alternating_times_one_plus_alpha"},
                {"mod": 60, "residues": [11, 13, 17, 19, 31, 37, 53, 59], "rule": "even_exponent"},
            ],
        },
    },
    # discriminants -63 / -252 (section on the two-step lift)
    "f_63": {
        "lambert": {"chi": {"top": -7}, "numerator": [[1, 1]], "denominator": {"sign": 1, "scale": 1}},
        "divisor": [{"top": -7}, {"top": 1}],
    },
    "g_63": {
        "lambert": {"chi": {"top": 21}, "numerator": [[1, 1], [-1, 2]], "denominator": {"sign": 1, "scale": 3}},
        "divisor": [{"top": 21}, {"top": 3, "flipped": True}],
    },
    # discriminant -15 (eta quotient section)
    "L1_15": {
        "lambert": {"chi": {"top": -15}, "numerator": [[1, 1]], "denominator": {"sign": 1, "scale": 1}},
        "divisor": [{"top": -15}, {"top": 1}],
    },
    "g_15": {
        "lambert": {"chi": {"top": 5}, "numerator": [[1, 1], [-1, 2]], "denominator": {"sign": 1, "scale": 3}},
        "divisor": [{"top": 5}, {"top": 3, "flipped": True}],
    },
    "P_sec2": {
        "lambert": {"chi": {"top": -15}, "numerator": [[1, 1]], "denominator": {"sign": -1, "scale": 1}},
    },
    "Q_sec2": {
        "lambert": {"chi": {"top": 5}, "numerator": [[1, 1], [1, 2]], "denominator": {"sign": -1, "scale": 3}},
    },
}


def _parse_entry(entry: dict) -> dict:
    parsed = {}
    if "lambert" in entry:
        parsed["lambert"] = lambert_spec_from_dict(entry["lambert"])
    if "divisor" in entry:
        chi1, chi2 = entry["divisor"]
        parsed["divisor"] = (character_from_dict(chi1), character_from_dict(chi2))
    if "table" in entry:
        parsed["table"] = table_from_dict(entry["table"])
    return parsed


NAMED_SERIES: dict[str, dict] = {name: _parse_entry(e) for name, e in BUILTIN_SERIES_CONFIG.items()}


def load_series_config(path) -> dict[str, dict]:
    """Parse a JSON config of named series and merge it over the builtins."""
    with open(path) as fh:
        raw = json.load(fh)
    merged = dict(NAMED_SERIES)
    for name, entry in raw.items():
        merged[name] = _parse_entry(entry)
    return merged


@lru_cache(maxsize=256)
def _named_cached(name: str, n: int):
    spec = NAMED_SERIES[name]["lambert"]
    return lambert_expand(spec, n)


def named_series_expand(name: str, n: int, registry=None):
    """Expand a named series by its Lambert route."""
    if registry is None:
        from .series import PowerSeries

        return PowerSeries(_named_cached(name, n).coeffs)
    return lambert_expand(registry[name]["lambert"], n)


# ---------------------------------------------------------------------------
# closed representation formulas for the forms of -36, -75, -180


@dataclass(frozen=True)
class _RepConfig:
    branch_prime: int  # exponent b in the case split
    aux_primes: tuple[int, ...]  # exponents feeding the sign (a, then c if present)
    lam_plus: tuple[int, tuple[int, ...]]
    lam_parity: tuple[int, tuple[int, ...]]
    t_classes: tuple[tuple[int, tuple[int, ...]], ...]
    even_coeff: int  # multiplier of Lambda when the branch exponent is positive even


_REP_CONFIGS = {
    -36: _RepConfig(
        branch_prime=3,
        aux_primes=(2,),
        lam_plus=(4, (1,)),
        lam_parity=(4, (3,)),
        t_classes=((12, (5,)),),
        even_coeff=4,
    ),
    -75: _RepConfig(
        branch_prime=5,
        aux_primes=(3,),
        lam_plus=(3, (1,)),
        lam_parity=(3, (2,)),
        t_classes=((15, (7, 13)),),
        even_coeff=6,
    ),
    -180: _RepConfig(
        branch_prime=3,
        aux_primes=(2, 5),
        lam_plus=(20, (1, 3, 7, 9)),
        lam_parity=(20, (11, 13, 17, 19)),
        t_classes=((20, (3, 7)), (60, (23, 29, 41, 47)), (60, (7, 29, 41, 43))),
        even_coeff=0,  # -180 uses the (b-1) branch instead
    ),
}

# sign patterns in front of the (-1)^... terms, per reduced form
REP_FORMULA_FORMS = {
    -36: {(1, 0, 9): (1,), (2, 2, 5): (-1,)},
    -75: {(1, 1, 19): (1,), (3, 3, 7): (-1,)},
    -180: {
        (1, 0, 45): (1, 1, 1),
        (5, 0, 9): (1, -1, -1),
        (7, 4, 7): (-1, 1, -1),
        (2, 2, 23): (-1, -1, 1),
    },
}


def _rep_stats(cfg: _RepConfig, n: int, spf=None):
    special = {cfg.branch_prime: 0}
    for p in cfg.aux_primes:
        special[p] = 0
    lam = 1
    ts = [0] * len(cfg.t_classes)
    for p, e in factorize(n, spf):
        for i, (mod, residues) in enumerate(cfg.t_classes):
            if p % mod in residues:
                ts[i] += e
        if p in special:
            special[p] = e
            continue
        mod, residues = cfg.lam_plus
        if p % mod in residues:
            lam *= 1 + e
            continue
        mod, residues = cfg.lam_parity
        if p % mod in residues:
            if e % 2:
                lam = 0
            continue
        raise ValueError(f"prime {p} escapes the residue classes of {cfg}")
    return special, lam, ts


def rep_formula(delta: int, form, n: int, spf=None) -> int:
    """The closed-formula representation count (a,b,c;n) for the forms of
    discriminant -36, -75 or -180; n >= 1.
    """
    if n < 1:
        raise ValueError("representation formulas apply to n >= 1")
    if delta not in _REP_CONFIGS:
        raise ValueError(f"no representation formula for discriminant {delta}")
    cfg = _REP_CONFIGS[delta]
    signs = REP_FORMULA_FORMS[delta].get(tuple(reduce_form(form)))
    if signs is None:
        raise ValueError(f"{form} is not a form of discriminant {delta}")
    special, lam, ts = _rep_stats(cfg, n, spf)
    b = special[cfg.branch_prime]
    if delta in (-36, -75):
        a = special[cfg.aux_primes[0]]
        (s1,) = signs
        if b == 0:
            value = (1 + s1 * (-1) ** (a + ts[0])) * lam
        elif b % 2:
            value = 0
        else:
            value = cfg.even_coeff * lam
    else:
        a = special[2]
        c = special[5]
        s1, s2, s3 = signs
        t1, t2, t3 = ts
        if b == 0:
            acc = 1 + s1 * (-1) ** (a + t1) + s2 * (-1) ** (a + c + t2) + s3 * (-1) ** (c + t3)
            value = acc * lam // 2
        else:
            value = (b - 1) * (1 + s1 * (-1) ** (a + t1)) * lam
    if value < 0:
        raise ArithmeticError(f"formula produced {value} < 0 at n={n}")
    return value


def rep_formula_series(delta: int, form, n: int, spf=None):
    """PowerSeries of formula values; the constant term is 1 (the empty representation)."""
    from .series import PowerSeries

    return PowerSeries([1] + [rep_formula(delta, form, k, spf) for k in range(1, n + 1)])
