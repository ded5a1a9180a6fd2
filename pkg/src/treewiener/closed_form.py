"""Exact Wiener-index transforms for the three growth operations.

Everything here is integer arithmetic on ``(S, n)`` pairs; no graph is
built. Each single-step transform also evaluates its per-vertex-class
decomposition and checks that the pieces add up to the closed form, raising
:class:`IntegrityError` otherwise. The pieces are exposed so tests can
compare them against class-restricted distance sums on real graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegrityError, InvalidArgumentError
from .growth_ops import GrowthOp, OpKind

__all__ = [
    "WienerState",
    "exact_div",
    "subdivision_cases",
    "subdivision_wiener",
    "subdivision_wiener_t",
    "vertexop_cases",
    "vertexop_wiener",
    "starfractal_cases",
    "starfractal_wiener",
    "step",
    "iterate_closed_form",
]


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise IntegrityError(f"{a} is not divisible by {b}")
    return q


@dataclass(frozen=True)
class WienerState:
    """Distance sum ``s`` of a tree on ``n`` vertices."""

    s: int
    n: int

    def __post_init__(self):
        n, s = self.n, self.s
        if n < 2:
            raise InvalidArgumentError(f"need n >= 2, got {n}")
        # star minimises and path maximises the Wiener index among trees
        if s < (n - 1) ** 2:
            raise InvalidArgumentError(f"s={s} below the tree minimum {(n - 1) ** 2} for n={n}")
        if s > exact_div(n * (n - 1) * (n + 1), 6):
            raise InvalidArgumentError(f"s={s} above the path value for n={n}")


def _pairs(n: int) -> int:
    """Sum of ``n - i`` for ``i`` in ``1..n-1``."""
    return exact_div(n * (n - 1), 2)


def _check_total(name: str, cases: dict[str, int], expected: int) -> None:
    total = sum(cases.values())
    if total != expected:
        raise IntegrityError(f"{name}: case sums total {total}, closed form gives {expected}")


# -- first-order subdivision --------------------------------------------------

def subdivision_cases(state: WienerState) -> dict[str, int]:
    """Pair-class sums after subdivision: original/original, midpoint/midpoint,
    original/midpoint."""
    s, n = state.s, state.n
    orig = 2 * s
    mid = orig - 2 * _pairs(n)
    cross = 2 * orig - n * (n - 1)
    return {"original-original": orig, "midpoint-midpoint": mid, "original-midpoint": cross}


def subdivision_wiener(state: WienerState) -> WienerState:
    s, n = state.s, state.n
    s_new = 8 * s - 2 * n * (n - 1)
    _check_total("subdivision", subdivision_cases(state), s_new)
    return WienerState(s_new, 2 * n - 1)


def subdivision_wiener_t(state: WienerState, t: int) -> WienerState:
    """Closed form for ``t`` consecutive subdivisions."""
    if t < 0:
        raise InvalidArgumentError(f"t must be >= 0, got {t}")
    if t == 0:
        return state
    s, e = state.s, state.n - 1
    linear = exact_div(2 ** (3 * t) - 2**t, 3)
    quad = 2 ** (2 * t - 1) - 2 ** (3 * t - 1)
    s_t = 8**t * s - linear * e + quad * e * e
    return WienerState(s_t, 2**t * e + 1)


# -- m-vertex-operation ---------------------------------------------------------

def vertexop_cases(state: WienerState, m: int) -> dict[str, int]:
    """Pair-class sums after attaching ``m`` leaves to every vertex."""
    s, n = state.s, state.n
    return {
        "original-original": s,
        "leaf-leaf same star": n * m * (m - 1),
        "leaf-leaf different stars": m * m * s + 2 * m * m * _pairs(n),
        "leaf-original": m * n * n + 2 * m * s,
    }


def vertexop_wiener(state: WienerState, m: int) -> WienerState:
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    s, n = state.s, state.n
    s_new = (1 + m) ** 2 * s + m * (m + 1) * n * n - m * n
    _check_total("vertex-op", vertexop_cases(state, m), s_new)
    return WienerState(s_new, (m + 1) * n)


# -- (1,m)-star-fractal -----------------------------------------------------------

def starfractal_cases(state: WienerState, m: int) -> dict[str, int]:
    """Pair-class sums after the star-fractal step.

    Classes: X original vertices, Y2 inserted midpoints, Y1 star leaves.
    """
    s, n = state.s, state.n
    xx = 2 * s
    leaves_same = (n - 1) * m * (m - 1)
    mid_mid = xx - 2 * _pairs(n)
    x_mid = 2 * mid_mid + n * (n - 1)
    # sum of (n - 1 - i) for i in 1..n-2
    leaves_diff = m * m * mid_mid + 2 * m * m * exact_div((n - 1) * (n - 2), 2)
    x_leaf = m * x_mid + m * n * (n - 1)
    leaf_mid = 2 * m * mid_mid + m * (n - 1) ** 2
    return {
        "original-original": xx,
        "leaf-leaf same star": leaves_same,
        "midpoint-midpoint": mid_mid,
        "original-midpoint": x_mid,
        "leaf-leaf different stars": leaves_diff,
        "original-leaf": x_leaf,
        "leaf-midpoint": leaf_mid,
    }


def starfractal_wiener(state: WienerState, m: int) -> WienerState:
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    s, n = state.s, state.n
    s_new = 2 * (m + 2) ** 2 * s - (m + 2) * (n - 1) * (m + n)
    _check_total("star-fractal", starfractal_cases(state, m), s_new)
    return WienerState(s_new, n + (1 + m) * (n - 1))


def step(state: WienerState, op: GrowthOp) -> WienerState:
    if op.kind is OpKind.SUBDIVISION:
        return subdivision_wiener(state)
    if op.kind is OpKind.STAR_FRACTAL:
        return starfractal_wiener(state, op.m)
    return vertexop_wiener(state, op.m)


def iterate_closed_form(state: WienerState, op: GrowthOp, t: int) -> WienerState:
    if t < 0:
        raise InvalidArgumentError(f"t must be >= 0, got {t}")
    for _ in range(t):
        state = step(state, op)
    return state
