"""Residue reconstruction of the sums from their contour integrands.

Each supported family has an integrand f(z) built from an exponential
numerator, a power of a shifted cotangent/cosecant (times an entire
cos/sin factor for the triple-product families), and an exponential
kernel denominator. All residues of f over one period strip must sum
to zero, which pins the sum of interest to the single interior residue:

    sum = -(pi*i*d) * Res(f, 1-b)   for cos-prefixed families,
    sum = -(pi*d)   * Res(f, 1-b)   for sin-prefixed families,

while the boundary residues at z = j/d reproduce the individual terms.
The interior residue is computed by truncated Laurent arithmetic in the
local variable w = z - (1-b): expand every factor, multiply, read off
the w^{-1} coefficient. Truncation runs to pole_order + 2, two guard
terms beyond what the residue needs.

b enters twice: the pole is placed from b reduced by its floor (the
factor series need the shift inside one period), while the constant
phases multiply the assembled series afterwards and are computed from
the original b, whose periodicity arguments they carry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .coefficients import apostol_coeff_table, cot_coeff, csc_coeff
from .errors import NumericError, ParameterError
from .families import (
    TRAITS,
    Family,
    SumSpec,
    SumValue,
    as_sum_value,
    frequency_fold,
    pole_order,
    validate_params,
)
from .trig import cos_pi, cot_pi, csc_pi, phase, phase_ratio, sin_pi

RECIPROCAL_TOL = 1e-12

FACTOR_KINDS = (
    "exp_linear",
    "cot_shifted",
    "csc_shifted",
    "cos_shifted",
    "sin_shifted",
    "apostol_kernel",
)


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent series: coeffs[k] multiplies w^{min_degree+k}.

    Coefficients are stored densely from min_degree through
    truncation_order; the series is meaningless beyond the truncation.
    """
    min_degree: int
    coeffs: tuple[complex, ...]
    truncation_order: int

    def __post_init__(self) -> None:
        expect = self.truncation_order - self.min_degree + 1
        if expect < 1 or len(self.coeffs) != expect:
            raise ParameterError(
                f"inconsistent series shape: {len(self.coeffs)} coefficients for "
                f"degrees {self.min_degree}..{self.truncation_order}"
            )

    def coefficient(self, degree: int) -> complex:
        if degree > self.truncation_order:
            raise ParameterError(f"degree {degree} beyond truncation {self.truncation_order}")
        if degree < self.min_degree:
            return 0j
        return self.coeffs[degree - self.min_degree]


def series_from_coeffs(min_degree: int, coeffs, truncation_order: int | None = None) -> LaurentSeries:
    cs = tuple(complex(c) for c in coeffs)
    if truncation_order is None:
        truncation_order = min_degree + len(cs) - 1
    return LaurentSeries(min_degree, cs, truncation_order)


def _trimmed(s: LaurentSeries) -> LaurentSeries:
    # drop exactly-zero leading coefficients; keep one for the zero series
    k = 0
    while k < len(s.coeffs) - 1 and s.coeffs[k] == 0:
        k += 1
    if k == 0:
        return s
    return LaurentSeries(s.min_degree + k, s.coeffs[k:], s.truncation_order)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.truncation_order, b.truncation_order)
    min_degree = min(a.min_degree, b.min_degree, order)
    coeffs = [0j] * (order - min_degree + 1)
    for s in (a, b):
        for i, c in enumerate(s.coeffs):
            deg = s.min_degree + i
            if deg <= order:
                coeffs[deg - min_degree] += c
    return LaurentSeries(min_degree, tuple(coeffs), order)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    a = _trimmed(a)
    b = _trimmed(b)
    min_degree = a.min_degree + b.min_degree
    order = min(a.truncation_order + b.min_degree, b.truncation_order + a.min_degree)
    coeffs = [0j] * (order - min_degree + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        da = a.min_degree + i
        for k, cb in enumerate(b.coeffs):
            deg = da + b.min_degree + k
            if deg > order:
                break
            coeffs[deg - min_degree] += ca * cb
    return LaurentSeries(min_degree, tuple(coeffs), order)


def series_pow(a: LaurentSeries, k: int) -> LaurentSeries:
    if k < 1:
        raise ParameterError(f"series power must be positive, got {k}")
    out = a
    for _ in range(k - 1):
        out = series_mul(out, a)
    return out


def series_scale(a: LaurentSeries, factor: complex) -> LaurentSeries:
    return LaurentSeries(a.min_degree, tuple(factor * c for c in a.coeffs), a.truncation_order)


def series_reciprocal(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse to the available truncation order."""
    t = _trimmed(a)
    lead = t.coeffs[0]
    if abs(lead) <= RECIPROCAL_TOL:
        raise NumericError(
            f"non-invertible series: leading coefficient {lead!r} at degree "
            f"{t.min_degree} is below {RECIPROCAL_TOL:g}"
        )
    rel = t.truncation_order - t.min_degree
    inv = [1.0 / lead]
    for k in range(1, rel + 1):
        acc = 0j
        for i in range(1, min(k, len(t.coeffs) - 1) + 1):
            acc += t.coeffs[i] * inv[k - i]
        inv.append(-acc / lead)
    return LaurentSeries(-t.min_degree, tuple(inv), t.truncation_order - 2 * t.min_degree)


def series_eval(a: LaurentSeries, w: complex) -> complex:
    """Evaluate the truncated series at a point (for fidelity checks)."""
    return sum(c * w ** (a.min_degree + i) for i, c in enumerate(a.coeffs))


def expand_factor(kind: str, params: Mapping[str, complex], order: int) -> LaurentSeries:
    """Local series of one integrand factor in w, valid through w^order.

    Kinds and their params:
      exp_linear     {"coefficient": c}      sum (c w)^k / k!
      cot_shifted    {}                      sum cot_coeff(j) pi^{2j-1} w^{2j-1}
      csc_shifted    {}                      sum csc_coeff(j) pi^{2j-1} w^{2j-1}
      cos_shifted    {"shift": u}            Taylor of cos(pi w + pi u), u in half turns
      sin_shifted    {"shift": u}            Taylor of sin(pi w + pi u)
      apostol_kernel {"t": t, "scale": c}    sum A_nu(t) (c w)^nu / nu!

    The exp_linear series omits its constant prefactor e^{c z0}; the
    assembly multiplies all constant phases in afterwards.
    """
    if kind not in FACTOR_KINDS:
        raise ParameterError(f"unknown factor kind {kind!r}; known: {FACTOR_KINDS}")
    if kind in ("cot_shifted", "csc_shifted"):
        if order < -1:
            raise ParameterError(f"order {order} below the pole degree -1 of {kind}")
        coeff = cot_coeff if kind == "cot_shifted" else csc_coeff
        coeffs = []
        for deg in range(-1, order + 1):
            if deg % 2 == 0:
                coeffs.append(0j)
            else:
                j = (deg + 1) // 2
                coeffs.append(complex(float(coeff(j)) * math.pi ** deg))
        return LaurentSeries(-1, tuple(coeffs), order)
    if order < 0:
        raise ParameterError(f"order {order} below the minimal degree 0 of {kind}")
    if kind == "exp_linear":
        c = complex(params["coefficient"])
        return LaurentSeries(
            0, tuple(c ** k / math.factorial(k) for k in range(order + 1)), order
        )
    if kind == "apostol_kernel":
        t = complex(params["t"])
        scale = complex(params["scale"])
        table = apostol_coeff_table(order, t)
        return LaurentSeries(
            0,
            tuple(table[k] * scale ** k / math.factorial(k) for k in range(order + 1)),
            order,
        )
    u = float(params["shift"].real if isinstance(params["shift"], complex) else params["shift"])
    osc = cos_pi if kind == "cos_shifted" else sin_pi
    return LaurentSeries(
        0,
        tuple(
            complex(math.pi ** k * osc(u + k * 0.5) / math.factorial(k))
            for k in range(order + 1)
        ),
        order,
    )


@dataclass(frozen=True)
class IntegrandDescriptor:
    """A residue-engine job: family parameters plus the interior pole order."""
    family: Family
    d: int
    m: int
    b: float
    b2: float | None
    pole_order: int

    @classmethod
    def from_spec(cls, spec: SumSpec) -> "IntegrandDescriptor":
        spec = validate_params(spec)
        if not TRAITS[spec.family].supports_residue:
            raise ParameterError(
                f"family {spec.family.value} is not covered by the residue engine"
            )
        return cls(spec.family, spec.d, spec.m, spec.b, spec.b2,
                   pole_order(spec.family, spec.n))


def _assembled(desc: IntegrandDescriptor) -> LaurentSeries:
    traits = TRAITS[desc.family]
    order = desc.pole_order + 2
    d, m, b = desc.d, desc.m, desc.b
    b_reduced = b - math.floor(b)
    if traits.odd_m:
        x1 = phase(-m * (b - 1.0))
        x1c = phase(m * (b - 1.0))
        exp_coeff = 1j * math.pi * m
    else:
        x1 = phase(-2.0 * m * b)
        x1c = phase(2.0 * m * b)
        exp_coeff = 2j * math.pi * m
    if traits.kind == "power":
        base_kind = "cot_shifted" if traits.shift_kind == "cot" else "csc_shifted"
        singular = series_pow(expand_factor(base_kind, {}, order), desc.pole_order)
    else:
        assert desc.b2 is not None
        aux_kind = "cos_shifted" if traits.second_kind == "cos" else "sin_shifted"
        aux = expand_factor(aux_kind, {"shift": 1.0 + desc.b2 - b_reduced}, order)
        singular = series_mul(expand_factor("csc_shifted", {}, order), aux)
        # the cosecant flips sign when b crosses an odd integer multiple
        singular = series_scale(singular, (-1.0) ** (math.floor(b) % 2))
    plus = series_mul(
        series_mul(expand_factor("exp_linear", {"coefficient": exp_coeff}, order), singular),
        expand_factor("apostol_kernel", {"t": phase(-2.0 * d * b), "scale": 2j * math.pi * d}, order),
    )
    minus = series_mul(
        series_mul(expand_factor("exp_linear", {"coefficient": -exp_coeff}, order), singular),
        expand_factor("apostol_kernel", {"t": phase(2.0 * d * b), "scale": -2j * math.pi * d}, order),
    )
    second_phase = -x1c if traits.prefix == "cos" else x1c
    return series_add(series_scale(plus, x1), series_scale(minus, second_phase))


def residue_at_interior_pole(desc: IntegrandDescriptor) -> complex:
    """The w^{-1} coefficient of the assembled local series at z = 1-b."""
    return _assembled(desc).coefficient(-1)


def boundary_residues(desc: IntegrandDescriptor) -> tuple[complex, ...]:
    """Res(f, j/d) for j = 0..d-1, from the simple-pole quotient.

    Each equals term_j/(pi*i*d) for cos-prefixed families and
    term_j/(pi*d) for sin-prefixed ones, term_j being the j-th summand.
    """
    traits = TRAITS[desc.family]
    d, m, b = desc.d, desc.m, desc.b
    beta = math.remainder(b, float(traits.shift_period))
    out = []
    for j in range(d):
        if traits.kind == "power":
            base = cot_pi if traits.shift_kind == "cot" else csc_pi
            factor = base(j / d + beta) ** desc.pole_order
        else:
            assert desc.b2 is not None
            beta2 = math.remainder(desc.b2, float(traits.shift_period))
            second = cos_pi if traits.second_kind == "cos" else sin_pi
            factor = csc_pi(j / d + beta) * second(j / d + beta2)
        num = (m if traits.odd_m else 2 * m) * j
        plus = phase_ratio(num, d) * factor
        minus = phase_ratio(-num, d) * factor
        if traits.prefix == "cos":
            out.append((plus + minus) / (2j * math.pi * d))
        else:
            out.append((plus - minus) / (2j * math.pi * d))
    return tuple(out)


def sum_via_residues(spec: SumSpec) -> SumValue:
    """Reconstruct the sum from the interior residue alone."""
    spec = validate_params(spec)
    folded, fold_sign = frequency_fold(spec)
    if folded is None:
        if not TRAITS[spec.family].supports_residue:
            raise ParameterError(
                f"family {spec.family.value} is not covered by the residue engine"
            )
        return SumValue(0.0, 0.0, "residue")
    desc = IntegrandDescriptor.from_spec(folded)
    res = residue_at_interior_pole(desc)
    scale = -(math.pi * 1j * folded.d) if TRAITS[folded.family].prefix == "cos" else \
        complex(-(math.pi * folded.d))
    value = scale * res
    return as_sum_value(complex(fold_sign * value.real, fold_sign * value.imag), "residue")
