"""Sum-family catalog, parameter types, and domain validation.

Each family is a finite sum over j of an oscillating prefix factor
(cos or sin of 2*pi*m*j/d, or pi*m*j/d for the odd-power cosecant
families) times one or two shifted singular factors. The catalog
records, per family, the singular factor kinds, the summation range,
which evaluation paths apply, and the exclusion set of shifts where a
term would sit on a pole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import NumericError, ParameterError
from .trig import dist_to_int, dist_to_odd

EPS_EXCL = 1e-8

# residual above this is a hard failure; the tested bound is 1e-9
IMAG_RESIDUAL_LIMIT = 1e-6


class Family(str, Enum):
    COS_COT = "cos-cot"
    SIN_COT = "sin-cot"
    SIN_CSC_2N = "sin-csc-2n"
    COS_CSC_2N = "cos-csc-2n"
    SIN_CSC_ODD = "sin-csc-odd"
    COS_CSC_ODD = "cos-csc-odd"
    COS_TAN = "cos-tan"
    SIN_TAN = "sin-tan"
    COS_COT_2D = "cos-cot-2d"
    SIN_COT_2D = "sin-cot-2d"
    COS_CSC_COS = "cos-csc-cos"
    COS_CSC_SIN = "cos-csc-sin"
    COS_SEC_COS = "cos-sec-cos"
    COS_SEC_SIN = "cos-sec-sin"
    SIN_CSC_COS = "sin-csc-cos"
    SIN_CSC_SIN = "sin-csc-sin"
    COS_CSC_CSC = "cos-csc-csc"
    COS_CSC_SEC = "cos-csc-sec"
    COS_SEC_SEC = "cos-sec-sec"
    SIN_CSC_CSC = "sin-csc-csc"
    SIN_CSC_SEC = "sin-csc-sec"
    SIN_SEC_SEC = "sin-sec-sec"

    @classmethod
    def from_label(cls, label: str) -> "Family":
        try:
            return cls(label)
        except ValueError:
            known = ", ".join(f.value for f in cls)
            raise ParameterError(f"unknown family {label!r}; known: {known}") from None


@dataclass(frozen=True)
class FamilyTraits:
    prefix: str                 # "cos" or "sin" oscillating factor
    kind: str                   # "power", "tangent", "double", "triple"
    shift_kind: str             # singular factor on b: "cot", "csc", "tan", "sec"
    second_kind: str | None     # triple families: factor on b2
    odd_m: bool                 # m restricted to odd values
    shift_period: int           # b-periodicity of the term values (1 or 2)
    oracle_start: int           # first index of the defining sum
    supports_power: bool        # n > 1 admitted
    supports_residue: bool      # covered by the residue engine


def _t(prefix, kind, shift, second=None, odd_m=False, period=1, start=None,
       power=False, residue=False) -> FamilyTraits:
    if start is None:
        start = 0 if prefix == "cos" else 1
    return FamilyTraits(prefix, kind, shift, second, odd_m, period, start, power, residue)


TRAITS: dict[Family, FamilyTraits] = {
    Family.COS_COT: _t("cos", "power", "cot", power=True, residue=True),
    Family.SIN_COT: _t("sin", "power", "cot", power=True, residue=True),
    Family.SIN_CSC_2N: _t("sin", "power", "csc", power=True, residue=True),
    Family.COS_CSC_2N: _t("cos", "power", "csc", power=True, residue=True),
    Family.SIN_CSC_ODD: _t("sin", "power", "csc", odd_m=True, period=2, power=True, residue=True),
    Family.COS_CSC_ODD: _t("cos", "power", "csc", odd_m=True, period=2, power=True, residue=True),
    Family.COS_TAN: _t("cos", "tangent", "tan"),
    Family.SIN_TAN: _t("sin", "tangent", "tan"),
    Family.COS_COT_2D: _t("cos", "double", "cot"),
    Family.SIN_COT_2D: _t("sin", "double", "cot"),
    Family.COS_CSC_COS: _t("cos", "triple", "csc", "cos", period=2, residue=True),
    Family.COS_CSC_SIN: _t("cos", "triple", "csc", "sin", period=2, residue=True),
    Family.COS_SEC_COS: _t("cos", "triple", "sec", "cos", period=2),
    Family.COS_SEC_SIN: _t("cos", "triple", "sec", "sin", period=2),
    Family.SIN_CSC_COS: _t("sin", "triple", "csc", "cos", period=2, residue=True),
    Family.SIN_CSC_SIN: _t("sin", "triple", "csc", "sin", period=2, residue=True),
    Family.COS_CSC_CSC: _t("cos", "triple", "csc", "csc", period=2),
    Family.COS_CSC_SEC: _t("cos", "triple", "csc", "sec", period=2),
    Family.COS_SEC_SEC: _t("cos", "triple", "sec", "sec", period=2),
    Family.SIN_CSC_CSC: _t("sin", "triple", "csc", "csc", period=2),
    Family.SIN_CSC_SEC: _t("sin", "triple", "csc", "sec", period=2),
    Family.SIN_SEC_SEC: _t("sin", "triple", "sec", "sec", period=2, start=0),
}

POWER_FAMILIES = tuple(f for f in Family if TRAITS[f].kind == "power")
TRIPLE_FAMILIES = tuple(f for f in Family if TRAITS[f].kind == "triple")
RESIDUE_FAMILIES = tuple(f for f in Family if TRAITS[f].supports_residue)


@dataclass(frozen=True)
class SumSpec:
    """One fully specified sum: family, range d, frequency m, shifts."""
    family: Family
    d: int
    m: int
    b: float
    n: int = 1
    b2: float | None = None


@dataclass(frozen=True)
class SumValue:
    """An evaluated sum: real value, discarded imaginary magnitude, path."""
    value: float
    imag_residual: float
    path: str


def as_sum_value(value: complex, path: str) -> SumValue:
    """Accept a complex accumulation as a real result, or refuse it.

    The imaginary part must be numerical noise; a residual above
    IMAG_RESIDUAL_LIMIT relative to the real part means conditioning
    loss or a transcription fault and is raised, never truncated.
    """
    residual = abs(value.imag)
    real = value.real + 0.0  # normalize -0.0
    if residual > IMAG_RESIDUAL_LIMIT * max(1.0, abs(real)):
        raise NumericError(
            f"imaginary residual too large: |Im| = {residual:.3e} "
            f"vs |Re| = {abs(real):.3e} on path {path}"
        )
    return SumValue(real, residual, path)


def pole_order(family: Family, n: int) -> int:
    """Order of the interior pole of the integrand for this family."""
    traits = TRAITS[family]
    if traits.kind == "triple":
        return 1
    if traits.shift_kind == "cot":
        return n
    return 2 * n if not traits.odd_m else 2 * n - 1


def is_classical(spec: SumSpec) -> bool:
    """The one b = 0 case admitted by dispensation (value d - 2m)."""
    return spec.family is Family.SIN_COT and spec.b == 0.0 and spec.n == 1


def frequency_fold(spec: SumSpec) -> tuple[SumSpec | None, float]:
    """Exact m <-> d-m reduction for the full-turn-prefix families.

    The prefix cos(2 pi m j/d) is invariant under m -> d-m and the sine
    prefix flips sign, while no other factor involves m; at 2m = d every
    sine prefix is sin(pi j) = 0 termwise. Evaluating the multi-index
    and residue paths at min(m, d-m) keeps their internal cancellation
    bounded. Returns (spec_to_evaluate, sign); a None spec means the
    sum is identically zero. Not applicable to the half-turn-prefix
    (odd-m) families or the doubled-range families, whose prefix does
    not close under the reflection.
    """
    traits = TRAITS[spec.family]
    if traits.odd_m or traits.kind == "double" or 2 * spec.m < spec.d:
        return spec, 1.0
    sin_prefix = traits.prefix == "sin"
    if 2 * spec.m == spec.d:
        return (None, 0.0) if sin_prefix else (spec, 1.0)
    folded = replace(spec, m=spec.d - spec.m)
    return folded, (-1.0 if sin_prefix else 1.0)


def _check_shift(family: Family, kind: str, beta: float, d: int, name: str) -> None:
    if kind in ("cot", "csc"):
        scale = 2 * d if TRAITS[family].kind == "double" else d
        if dist_to_int(beta * scale) <= EPS_EXCL:
            raise ParameterError(
                f"parameter on singular set: {name}*{scale} = {beta * scale!r} is "
                f"within {EPS_EXCL:g} of an integer (excluded for {family.value})"
            )
        return
    # tan/sec shifts: the excluded lattice depends on the parity of d
    if d % 2 == 0:
        if dist_to_int(beta * d) <= EPS_EXCL:
            raise ParameterError(
                f"parameter on singular set: {name}*d = {beta * d!r} is within "
                f"{EPS_EXCL:g} of an integer (excluded for {family.value}, even d)"
            )
    else:
        if dist_to_odd(2.0 * beta * d) <= EPS_EXCL:
            raise ParameterError(
                f"parameter on singular set: 2*{name}*d = {2.0 * beta * d!r} is within "
                f"{EPS_EXCL:g} of an odd integer (excluded for {family.value}, odd d)"
            )


def validate_params(spec: SumSpec) -> SumSpec:
    """Check a spec against its family's domain; return it unchanged.

    Raises ParameterError naming the violated condition: m out of range,
    m parity, missing or extraneous b2, or a shift on the singular set.
    """
    if not isinstance(spec.family, Family):
        spec = replace(spec, family=Family.from_label(str(spec.family)))
    traits = TRAITS[spec.family]
    if spec.n < 1:
        raise ParameterError(f"n must be a positive integer, got {spec.n}")
    if not traits.supports_power and spec.n != 1:
        raise ParameterError(f"n is fixed at 1 for family {spec.family.value}, got {spec.n}")
    if not 0 < spec.m < spec.d:
        raise ParameterError(f"m out of range: need 0 < m < d, got m={spec.m}, d={spec.d}")
    if traits.odd_m and spec.m % 2 == 0:
        raise ParameterError(f"m must be odd for family {spec.family.value}, got {spec.m}")
    if traits.kind == "triple":
        if spec.b2 is None:
            raise ParameterError(f"b2 required for family {spec.family.value}")
    elif spec.b2 is not None:
        raise ParameterError(f"b2 not accepted for family {spec.family.value}")
    if is_classical(spec):
        return spec
    _check_shift(spec.family, traits.shift_kind, spec.b, spec.d, "b")
    if traits.kind == "triple":
        assert spec.b2 is not None
        if traits.second_kind in ("csc", "sec"):
            _check_shift(spec.family, traits.second_kind, spec.b2, spec.d, "b2")
        pair = (traits.shift_kind, traits.second_kind)
        # cross-factor degeneracies of the two-term closed forms
        if pair in (("csc", "csc"), ("sec", "sec")):
            if dist_to_int(spec.b - spec.b2) <= EPS_EXCL:
                raise ParameterError(
                    "parameter on singular set: b and b2 congruent mod 1 "
                    f"(b - b2 = {spec.b - spec.b2!r}, excluded for {spec.family.value})"
                )
        elif pair == ("csc", "sec"):
            if dist_to_int(spec.b - spec.b2 - 0.5) <= EPS_EXCL:
                raise ParameterError(
                    "parameter on singular set: b - b2 congruent to 1/2 mod 1 "
                    f"(b - b2 = {spec.b - spec.b2!r}, excluded for {spec.family.value})"
                )
    return spec
