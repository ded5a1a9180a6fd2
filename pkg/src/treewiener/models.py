"""The two single-edge-seeded model families.

``T_odot(t, m)``: ``t`` rounds of the m-vertex-operation on an edge; order
``2 (m+1)^t``, exponential degree distribution.

``T_star(t, m+1)``: ``t`` rounds of the (1,m)-star-fractal operation on an
edge; order ``(m+2)^t + 1``, fractal. ``m = 1`` is the T-graph.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .closed_form import WienerState, exact_div, iterate_closed_form
from .errors import IntegrityError, InvalidArgumentError, TooLargeError
from .growth_ops import GrowthOp, iterate
from .tree_core import TreeGraph, degree_histogram, diameter, new_single_edge, wiener_subtree

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 10**6

__all__ = [
    "DEFAULT_MAX_ORDER",
    "ModelParams",
    "ModelReport",
    "MetricsReport",
    "odot_order",
    "star_order",
    "build_t_odot",
    "build_t_star",
    "odot_wiener",
    "odot_wiener_recursive",
    "star_wiener",
    "star_wiener_recursive",
    "odot_diameter",
    "star_diameter",
    "odot_mfpt",
    "star_dimensions",
    "odot_metrics",
    "star_metrics",
    "odot_degree_profile",
    "degree_ccdf",
    "power_law_exponent",
    "measure",
]


@dataclass(frozen=True)
class ModelParams:
    t: int
    m: int
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if self.t < 0:
            raise InvalidArgumentError(f"t must be >= 0, got {self.t}")
        if self.m < 1:
            raise InvalidArgumentError(f"m must be >= 1, got {self.m}")


@dataclass(frozen=True)
class ModelReport:
    order: int
    wiener: int
    avg_distance: Fraction
    diameter: int
    mfpt: Fraction
    dims: tuple[float, float, float] | None = None


@dataclass(frozen=True)
class MetricsReport:
    """Quantities measured on an explicit tree."""

    order: int
    size: int
    wiener: int
    avg_distance: Fraction
    diameter: int
    degree_histogram: dict[int, int]
    mfpt: Fraction


def _report(order: int, wiener: int, diam: int, dims=None) -> ModelReport:
    return ModelReport(
        order=order,
        wiener=wiener,
        avg_distance=Fraction(2 * wiener, order * (order - 1)),
        diameter=diam,
        mfpt=Fraction(2 * wiener, order),
        dims=dims,
    )


def measure(tree: TreeGraph) -> MetricsReport:
    n = tree.n
    w = wiener_subtree(tree)
    return MetricsReport(
        order=n,
        size=tree.num_edges,
        wiener=w,
        avg_distance=Fraction(2 * w, n * (n - 1)) if n > 1 else Fraction(0),
        diameter=diameter(tree),
        degree_histogram=degree_histogram(tree),
        mfpt=Fraction(2 * w, n),
    )


# -- orders and construction ------------------------------------------------------

def odot_order(p: ModelParams) -> int:
    return 2 * (p.m + 1) ** p.t


def star_order(p: ModelParams) -> int:
    return (p.m + 2) ** p.t + 1


def _guard(order: int, p: ModelParams) -> None:
    if order > p.max_order:
        raise TooLargeError(f"order {order} exceeds max_order {p.max_order} (t={p.t}, m={p.m})")


def build_t_odot(p: ModelParams) -> TreeGraph:
    _guard(odot_order(p), p)
    return iterate(new_single_edge(), GrowthOp.vertex(p.m), p.t)


def build_t_star(p: ModelParams) -> TreeGraph:
    _guard(star_order(p), p)
    return iterate(new_single_edge(), GrowthOp.star(p.m), p.t)


# -- distance sums ------------------------------------------------------------------

def odot_wiener(p: ModelParams) -> int:
    """``(m+1)^(t-1) * (2 + (4mt + m - 1)(m+1)^t)``; 1 at ``t = 0``."""
    t, m = p.t, p.m
    if t == 0:
        return 1
    return (m + 1) ** (t - 1) * (2 + (4 * m * t + m - 1) * (m + 1) ** t)


def odot_wiener_recursive(p: ModelParams) -> int:
    return iterate_closed_form(WienerState(1, 2), GrowthOp.vertex(p.m), p.t).s


def star_wiener(p: ModelParams) -> int:
    t, m = p.t, p.m
    if t == 0:
        return 1
    a = m + 2
    tail = exact_div((m + 1) * a**t * ((2 * a) ** t - 1), 2 * a - 1)
    return (2 * a * a) ** t - (2**t - 1) * a ** (2 * t - 1) - tail


def star_wiener_recursive(p: ModelParams) -> int:
    """Iterate ``S_t = 2(m+2)^2 S_{t-1} - (m+2)(N_{t-1} - 1)(m + N_{t-1})`` from ``S_0 = 1``."""
    a = p.m + 2
    s, n = 1, 2
    for _ in range(p.t):
        s = 2 * a * a * s - a * (n - 1) * (p.m + n)
        n = n + (p.m + 1) * (n - 1)
    return s


# -- derived quantities ---------------------------------------------------------------

def odot_diameter(p: ModelParams) -> int:
    return 2 * p.t + 1


def star_diameter(p: ModelParams) -> int:
    return 2**p.t


def odot_mfpt(p: ModelParams) -> Fraction:
    """``2/(m+1) + (4mt + m - 1)(m+1)^(t-1)``, the analytic value of ``2S/N``."""
    t, m = p.t, p.m
    return Fraction(2, m + 1) + (4 * m * t + m - 1) * Fraction(m + 1) ** (t - 1)


def star_dimensions(m: int) -> tuple[float, float, float]:
    """Fractal, walk and spectral dimensions of ``T_star(., m+1)``."""
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    d_f = math.log(m + 2) / math.log(2)
    d_w = math.log(2 * (m + 2)) / math.log(2)
    return d_f, d_w, 2 * d_f / d_w


def odot_metrics(p: ModelParams) -> ModelReport:
    rep = _report(odot_order(p), odot_wiener(p), odot_diameter(p))
    if rep.mfpt != odot_mfpt(p):
        raise IntegrityError(f"mfpt closed form disagrees with 2S/N at t={p.t}, m={p.m}")
    return rep


def star_metrics(p: ModelParams) -> ModelReport:
    # 2S/N with N = (m+2)^t + 1
    return _report(star_order(p), star_wiener(p), star_diameter(p), star_dimensions(p.m))


# -- degree structure of T_odot ---------------------------------------------------------

def odot_degree_profile(p: ModelParams) -> list[tuple[int, int, int]]:
    """``(birth_step, count, degree)`` per birth class of the built ``T_odot``.

    Degrees are measured, and a class whose members disagree raises
    :class:`IntegrityError`.
    """
    tree = build_t_odot(p)
    by_step: dict[int, set[int]] = {}
    counts: dict[int, int] = {}
    for v in range(tree.n):
        b = tree.birth[v]
        by_step.setdefault(b, set()).add(tree.degree(v))
        counts[b] = counts.get(b, 0) + 1
    profile = []
    for b in sorted(counts):
        degs = by_step[b]
        if len(degs) != 1:
            raise IntegrityError(f"birth class {b} has mixed degrees {sorted(degs)}")
        (deg,) = degs
        expected = 2 if b == 0 else 2 * p.m * (p.m + 1) ** (b - 1)
        if counts[b] != expected:
            raise IntegrityError(f"birth class {b} has {counts[b]} vertices, expected {expected}")
        if b > 0:
            log.debug("step %d: measured degree %d, 2(t - t_i + 1) = %d", b, deg, 2 * (p.t - b + 1))
        profile.append((b, counts[b], deg))
    return profile


def degree_ccdf(hist: dict[int, int]) -> list[tuple[int, Fraction]]:
    """``(k, P(degree >= k))`` for every degree present, ascending in ``k``."""
    total = sum(hist.values())
    out = []
    remaining = total
    for k in sorted(hist):
        out.append((k, Fraction(remaining, total)))
        remaining -= hist[k]
    return out


def power_law_exponent(alpha: float, beta: float) -> float:
    """Exponent ``1 - alpha/beta`` of the weight law when ``P(k) ~ exp(alpha k)``
    and ``w_k ~ exp(beta k)``."""
    if beta == 0:
        raise InvalidArgumentError("beta must be non-zero")
    return 1 - alpha / beta
