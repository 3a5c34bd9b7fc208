"""Unconstrained test functions with known global minima.

Each entry carries its standard search box, a documented minimizer and the
value at that minimizer. Table-row labels and reference values for the
hybrid method are an inferred mapping from published optima, not a
definition taken from anywhere authoritative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Bounds, Problem

SCALABLE_DIMENSION = 30


@dataclass(frozen=True, eq=False)
class BenchmarkEntry:
    name: str
    problem: Problem
    known_optimum: float
    optimizer: np.ndarray
    reference_best: Optional[float] = None
    table_row: Optional[str] = None  # inferred

    def evaluate(self, x) -> float:
        return float(self.problem.objective(np.asarray(x, dtype=float)))


# --- definitions -----------------------------------------------------------


def sphere(x):
    return float(np.sum(x * x))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def ackley(x):
    n = x.size
    a = -20.0 * math.exp(-0.2 * math.sqrt(float(np.sum(x * x)) / n))
    b = -math.exp(float(np.sum(np.cos(2.0 * math.pi * x))) / n)
    return a + b + 20.0 + math.e


def rastrigin(x):
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * math.pi * x)))


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def levy(x):
    w = 1.0 + (x - 1.0) / 4.0
    head = math.sin(math.pi * w[0]) ** 2
    mid = np.sum((w[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * w[:-1] + 1.0) ** 2))
    tail = (w[-1] - 1.0) ** 2 * (1.0 + math.sin(2.0 * math.pi * w[-1]) ** 2)
    return float(head + mid + tail)


def schwefel(x):
    """Minimum of -418.9829 per variable at 420.9687."""
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def matyas(x):
    return 0.26 * (x[0] ** 2 + x[1] ** 2) - 0.48 * x[0] * x[1]


def booth(x):
    return (x[0] + 2.0 * x[1] - 7.0) ** 2 + (2.0 * x[0] + x[1] - 5.0) ** 2


def easom(x):
    return -math.cos(x[0]) * math.cos(x[1]) * math.exp(-((x[0] - math.pi) ** 2) - (x[1] - math.pi) ** 2)


def branin(x):
    b = 5.1 / (4.0 * math.pi**2)
    c = 5.0 / math.pi
    t = 1.0 / (8.0 * math.pi)
    return (x[1] - b * x[0] ** 2 + c * x[0] - 6.0) ** 2 + 10.0 * (1.0 - t) * math.cos(x[0]) + 10.0


def goldstein_price(x):
    x1, x2 = x[0], x[1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return a * b


def six_hump_camel(x):
    x1, x2 = x[0], x[1]
    return (4.0 - 2.1 * x1**2 + x1**4 / 3.0) * x1**2 + x1 * x2 + (-4.0 + 4.0 * x2**2) * x2**2


def shubert(x):
    i = np.arange(1, 6)
    return float(np.prod([np.sum(i * np.cos((i + 1) * xi + i)) for xi in x]))


_HARTMANN_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
_HARTMANN3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
_HARTMANN3_P = 1e-4 * np.array([[3689, 1170, 2673], [4699, 4387, 7470], [1091, 8732, 5547], [381, 5743, 8828]])
_HARTMANN6_A = np.array(
    [
        [10, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3, 3.5, 1.7, 10, 17, 8],
        [17, 8, 0.05, 10, 0.1, 14],
    ]
)
_HARTMANN6_P = 1e-4 * np.array(
    [
        [1312, 1696, 5569, 124, 8283, 5886],
        [2329, 4135, 8307, 3736, 1004, 9991],
        [2348, 1451, 3522, 2883, 3047, 6650],
        [4047, 8828, 8732, 5743, 1091, 381],
    ]
)


def _hartmann(x, a, p):
    return float(-np.sum(_HARTMANN_ALPHA * np.exp(-np.sum(a * (x - p) ** 2, axis=1))))


def hartmann3(x):
    return _hartmann(x, _HARTMANN3_A, _HARTMANN3_P)


def hartmann6(x):
    return _hartmann(x, _HARTMANN6_A, _HARTMANN6_P)


_SHEKEL_A = np.array(
    [
        [4, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ],
    dtype=float,
)
_SHEKEL_C = np.array([1, 2, 2, 4, 4, 6, 3, 7, 5, 5]) / 10.0


def shekel(m: int) -> Callable[[np.ndarray], float]:
    a, c = _SHEKEL_A[:m], _SHEKEL_C[:m]

    def f(x):
        return float(-np.sum(1.0 / (np.sum((x - a) ** 2, axis=1) + c)))

    f.__name__ = f"shekel{m}"
    return f


# --- registry --------------------------------------------------------------

# name: (function, lower, upper, scalable, optimizer, optimum, table row, reference best)
_SPECS: dict[str, tuple] = {
    "sphere": (sphere, -100.0, 100.0, True, 0.0, 0.0, None, None),
    "rosenbrock": (rosenbrock, -30.0, 30.0, True, 1.0, 0.0, None, None),
    "ackley": (ackley, -32.768, 32.768, True, 0.0, 0.0, None, None),
    "rastrigin": (rastrigin, -5.12, 5.12, True, 0.0, 0.0, None, None),
    "griewank": (griewank, -600.0, 600.0, True, 0.0, 0.0, None, None),
    "levy": (levy, -10.0, 10.0, True, 1.0, 0.0, None, None),
    "schwefel": (schwefel, -500.0, 500.0, True, 420.96874657644923, -418.9828872724338, "F36", -817.0),
    "matyas": (matyas, [-10.0, -10.0], [10.0, 10.0], False, [0.0, 0.0], 0.0, None, None),
    "booth": (booth, [-10.0, -10.0], [10.0, 10.0], False, [1.0, 3.0], 0.0, None, None),
    "easom": (easom, [-100.0, -100.0], [100.0, 100.0], False, [math.pi, math.pi], -1.0, "F14", -3.0e-9),
    "branin": (
        branin, [-5.0, 0.0], [10.0, 15.0], False,
        [math.pi, 2.275], 0.39788735772973816, "F11", 0.4033,
    ),
    "goldstein-price": (goldstein_price, [-2.0, -2.0], [2.0, 2.0], False, [0.0, -1.0], 3.0, "F2", 3.1298),
    "hartmann-3": (
        hartmann3, [0.0] * 3, [1.0] * 3, False,
        [0.11458888122541287, 0.5556488954739371, 0.8525469842172746],
        -3.862779787332663, "F19", -3.7948,
    ),
    "hartmann-6": (
        hartmann6, [0.0] * 6, [1.0] * 6, False,
        [0.20168950909365746, 0.15001069354111374, 0.4768739729250998,
         0.2753324275220782, 0.3116516172395686, 0.6573005345536702],
        -3.3223680114155147, "F20", -2.882,
    ),
    "six-hump-camel": (
        six_hump_camel, [-3.0, -2.0], [3.0, 2.0], False,
        [0.08984200893527233, -0.712656403019058], -1.0316284534898774, "F46", -1.0300,
    ),
    "shekel-5": (
        shekel(5), [0.0] * 4, [10.0] * 4, False,
        [4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425],
        -10.153199679058229, "F42", -2.70,
    ),
    "shekel-7": (
        shekel(7), [0.0] * 4, [10.0] * 4, False,
        [4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923],
        -10.402940566818662, "F44", -4.4832,
    ),
    "shekel-10": (
        shekel(10), [0.0] * 4, [10.0] * 4, False,
        [4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975],
        -10.536409816692045, "F40", -4.36,
    ),
    "shubert": (
        shubert, [-10.0, -10.0], [10.0, 10.0], False,
        [-7.083506409397382, 4.858056877022195], -186.73090883102392, "F45", -186.14,
    ),
}


def names() -> list[str]:
    return list(_SPECS)


def is_scalable(name: str) -> bool:
    if name not in _SPECS:
        raise KeyError(f"unknown benchmark {name!r}; choose from {', '.join(_SPECS)}")
    return _SPECS[name][3]


def get(name: str, dimension: Optional[int] = None) -> BenchmarkEntry:
    """Build the entry for ``name``; ``dimension`` applies to scalable functions only."""
    try:
        fn, lo, hi, scalable, xstar, fstar, row, ref = _SPECS[name]
    except KeyError:
        raise KeyError(f"unknown benchmark {name!r}; choose from {', '.join(_SPECS)}") from None
    if scalable:
        dim = SCALABLE_DIMENSION if dimension is None else int(dimension)
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        if name in ("rosenbrock", "levy") and dim < 2:
            raise ValueError(f"{name} needs at least 2 variables")
        bounds = Bounds.uniform(lo, hi, dim)
        optimizer = np.full(dim, xstar, dtype=float)
        optimum = fstar * dim
        if row is not None and dim != SCALABLE_DIMENSION:
            row = ref = None
    else:
        bounds = Bounds(np.asarray(lo, dtype=float), np.asarray(hi, dtype=float))
        dim = bounds.dimension
        if dimension is not None and int(dimension) != dim:
            raise ValueError(f"{name} is fixed at {dim} variables, got dimension={dimension}")
        optimizer = np.asarray(xstar, dtype=float)
        optimum = fstar
    problem = Problem(name=name, dimension=dim, objective=fn, bounds=bounds, known_optimum=optimum)
    return BenchmarkEntry(name, problem, optimum, optimizer, ref, row)


def registry(dimension: Optional[int] = None) -> list[BenchmarkEntry]:
    return [get(name, dimension if is_scalable(name) else None) for name in _SPECS]


def evaluate(name: str, x) -> float:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError("x must be a 1-D point")
    entry = get(name, x.size if is_scalable(name) else None)
    if x.size != entry.problem.dimension:
        raise ValueError(f"{name} expects {entry.problem.dimension} variables, got {x.size}")
    return entry.evaluate(x)
