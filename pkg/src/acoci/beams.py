"""Stepped cantilever (weight) and I-section beam (deflection) design problems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import Bounds, EvaluationError, Problem, ValidationError

CANTILEVER_WEIGHT = 0.0624
CANTILEVER_NUMERATORS = (61.0, 37.0, 19.0, 7.0, 1.0)
CANTILEVER_BOUNDS = (0.01, 100.0)
CANTILEVER_OPTIMUM = 1.3400

IBEAM_E = 20000.0  # kN/cm^2
IBEAM_Q = 50.0  # kN
IBEAM_AREA_LIMIT = 300.0  # cm^2
IBEAM_STRESS_LIMIT = 6.0  # kN/cm^2
IBEAM_LOWER = (10.0, 10.0, 0.9, 0.9)  # h, b, t_w, t_f (cm)
IBEAM_UPPER = (100.0, 60.0, 6.0, 6.0)
# value substituted for objective/stress when h <= 2 t_f
DEGENERATE_VALUE = 1e9


def cantilever_weight(x) -> float:
    return CANTILEVER_WEIGHT * float(np.sum(x))


def cantilever_constraint(x) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.sum(np.asarray(CANTILEVER_NUMERATORS) / x**3)) - 1.0


def cantilever_problem() -> Problem:
    return Problem(
        name="cantilever",
        dimension=5,
        objective=cantilever_weight,
        bounds=Bounds.uniform(*CANTILEVER_BOUNDS, 5),
        constraints=(cantilever_constraint,),
        known_optimum=CANTILEVER_OPTIMUM,
        constraint_names=("deflection",),
    )


@dataclass(frozen=True)
class IBeamSpec:
    """Load case for the I-section beam. Lengths in cm, forces in kN."""

    length: float
    load: float
    lateral_load: float = IBEAM_Q
    modulus: float = IBEAM_E

    def __post_init__(self):
        for name in ("length", "load", "lateral_load", "modulus"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive, got {getattr(self, name)}")


def _web_height(x) -> float:
    h, _, _, tf = x
    return h - 2.0 * tf


def ibeam_inertia(x) -> float:
    """Second moment of area (cm^4) of the section ``(h, b, t_w, t_f)``."""
    h, b, tw, tf = (float(v) for v in x)
    web = h - 2.0 * tf
    if web <= 0.0:
        raise EvaluationError(f"degenerate I-section: h={h} <= 2*t_f={2 * tf}")
    return tw * web**3 / 12.0 + b * tf**3 / 6.0 + 2.0 * b * tf * ((h - tf) / 2.0) ** 2


def ibeam_area(x) -> float:
    h, b, tw, tf = (float(v) for v in x)
    return 2.0 * b * tf + tw * (h - 2.0 * tf)


def ibeam_stress(x, spec: IBeamSpec) -> float:
    h, b, tw, tf = (float(v) for v in x)
    web = h - 2.0 * tf
    if web <= 0.0:
        raise EvaluationError(f"degenerate I-section: h={h} <= 2*t_f={2 * tf}")
    vertical = 1.5 * spec.load * spec.length * h / (tw * web**3 + 2.0 * b * tw * (4.0 * tf**2 + 3.0 * h * web))
    lateral = 1.5 * spec.lateral_load * spec.length * b / (tw**3 * web + 2.0 * tw * b**3)
    return vertical + lateral


def ibeam_deflection(x, spec: IBeamSpec) -> float:
    return spec.load * spec.length**3 / (48.0 * spec.modulus * ibeam_inertia(x))


def ibeam_problem(
    length: float,
    load: float,
    lateral_load: float = IBEAM_Q,
    modulus: float = IBEAM_E,
    name: Optional[str] = None,
) -> Problem:
    """Vertical deflection of a simply supported I-beam with area and stress limits.

    Degenerate sections (``h <= 2 t_f``) evaluate to a large finite value so
    the search can step over them; call the ``ibeam_*`` helpers directly to
    get an error instead.
    """
    spec = IBeamSpec(length, load, lateral_load, modulus)

    def deflection(x):
        if _web_height(x) <= 0.0:
            return DEGENERATE_VALUE
        return ibeam_deflection(x, spec)

    def area(x):
        return ibeam_area(x) - IBEAM_AREA_LIMIT

    def stress(x):
        if _web_height(x) <= 0.0:
            return DEGENERATE_VALUE
        return ibeam_stress(x, spec) - IBEAM_STRESS_LIMIT

    return Problem(
        name=name or f"ibeam-L{length:g}-P{load:g}",
        dimension=4,
        objective=deflection,
        bounds=Bounds(np.array(IBEAM_LOWER), np.array(IBEAM_UPPER)),
        constraints=(area, stress),
        constraint_names=("area", "stress"),
    )


@dataclass(frozen=True)
class IBeamCase:
    case: int
    length: float
    load: float
    target: float

    def problem(self, **kwargs) -> Problem:
        kwargs.setdefault("name", f"ibeam-case{self.case}")
        return ibeam_problem(self.length, self.load, **kwargs)


# best deflections reported for the hybrid method, one per load case
_CASES = (
    (1, 120.0, 652.0, 0.002018),
    (2, 350.0, 520.0, 0.049381),
    (3, 285.0, 743.0, 0.038774),
    (4, 150.0, 200.0, 0.001209),
    (5, 345.0, 264.0, 0.020572),
    (6, 100.0, 690.0, 0.001235),
    (7, 250.0, 442.0, 0.012915),
    (8, 310.0, 675.0, 0.045771),
    (9, 270.0, 482.0, 0.018464),
    (10, 220.0, 355.0, 0.006771),
)


def ibeam_cases() -> list[IBeamCase]:
    return [IBeamCase(*row) for row in _CASES]


def ibeam_case(number: int) -> IBeamCase:
    for case in ibeam_cases():
        if case.case == number:
            return case
    raise KeyError(f"no I-beam case {number}; valid cases are 1-{len(_CASES)}")
