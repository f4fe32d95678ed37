"""Stochastic lower-bound search for the best total side length.

This is the one module allowed to use floating point: a simulated
annealing loop over n axis-parallel squares in the unit square, maximizing
the total side length under exact-in-float containment and disjointness
(touching edges allowed, matching the half-open convention).  Records can
be snapped back to exact rationals with :func:`rationalize` and re-checked
by the exact validator.

The inner loop is JIT-compiled with numba; restarts are seeded
independently so results are reproducible for a fixed config.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numba import njit
from scipy.optimize import linprog

from .geometry import Packing, Square


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    iterations: int = 1_000_000
    restarts: int = 8
    initial_temperature: float = 0.05
    cooling_rate: float = 0.999
    shrink_epsilon: float = 1e-9

    def __post_init__(self) -> None:
        if self.iterations < 1 or self.restarts < 1:
            raise ValueError("iterations and restarts must be >= 1")
        if not (0.0 < self.cooling_rate < 1.0):
            raise ValueError("cooling_rate must lie strictly between 0 and 1")


@dataclass(frozen=True)
class FloatPacking:
    """Approximate packing found by the search; coordinates are floats."""

    squares: tuple[tuple[float, float, float], ...]  # (x, y, side)
    best_total: float
    restart: int = field(default=0)


@njit(cache=True)
def _max_side(xs, ys, ss, n, skip, px, py):
    """Largest side a square at (px, py) can have without overlap."""
    cap = min(1.0 - px, 1.0 - py)
    for j in range(n):
        if j == skip:
            continue
        if xs[j] + ss[j] <= px or ys[j] + ss[j] <= py:
            continue
        block = max(xs[j] - px, ys[j] - py)
        if block < cap:
            cap = block
    return cap


@njit(cache=True)
def _fits(xs, ys, ss, n, skip, px, py, side):
    if px < 0.0 or py < 0.0 or px + side > 1.0 or py + side > 1.0:
        return False
    for j in range(n):
        if j == skip:
            continue
        if px < xs[j] + ss[j] and xs[j] < px + side and \
           py < ys[j] + ss[j] and ys[j] < py + side:
            return False
    return True


@njit(cache=True)
def _slide_home(xs, ys, ss, n, i):
    """Slide square i left then down until contact.

    Blockers are classified by origin comparison (xs[j] < xs[i]), not by
    comparing the computed far edge with xs[i]: for touching neighbours the
    rounded edge can land an ulp past xs[i], and an edge-based test would
    let the square tunnel straight through.  The slide never moves i away
    from the origin.
    """
    lim = 0.0
    for j in range(n):
        if j == i:
            continue
        if xs[j] < xs[i] and \
           ys[j] < ys[i] + ss[i] and ys[i] < ys[j] + ss[j]:
            edge = xs[j] + ss[j]
            if edge > lim:
                lim = edge
    if lim < xs[i]:
        xs[i] = lim
    lim = 0.0
    for j in range(n):
        if j == i:
            continue
        if ys[j] < ys[i] and \
           xs[j] < xs[i] + ss[i] and xs[i] < xs[j] + ss[j]:
            edge = ys[j] + ss[j]
            if edge > lim:
                lim = edge
    if lim < ys[i]:
        ys[i] = lim


@njit(cache=True)
def _polish(xs, ys, ss, n):
    """Compact everything toward the origin and regrow; returns the total."""
    for _ in range(3):
        for i in range(n):
            _slide_home(xs, ys, ss, n, i)
            cap = _max_side(xs, ys, ss, n, i, xs[i], ys[i])
            if cap > ss[i]:
                ss[i] = cap
    return ss.sum()


@njit(cache=True)
def _anneal(n, seed, iterations, t0, cooling):
    np.random.seed(seed)
    xs = np.zeros(n)
    ys = np.zeros(n)
    ss = np.zeros(n)

    # Greedy random initialization: tiny seeds grown to their local maximum.
    for i in range(n):
        placed = False
        for _ in range(200):
            px = np.random.random()
            py = np.random.random()
            cap = _max_side(xs, ys, ss, n, i, px, py)
            if cap > 1e-4:
                xs[i] = px
                ys[i] = py
                ss[i] = min(cap, 0.05 + 0.3 * np.random.random())
                placed = True
                break
        if not placed:
            xs[i] = 0.0
            ys[i] = 0.0
            ss[i] = 0.0

    total = ss.sum()
    best_total = total
    bx = xs.copy()
    by = ys.copy()
    bs = ss.copy()

    # Reheat in cycles: geometric cooling flattens out after a few thousand
    # steps, so long runs restart the schedule to escape local optima.
    cycle = 25_000 if iterations > 25_000 else iterations
    temp = t0
    for it in range(iterations):
        if it % cycle == 0:
            total = _polish(xs, ys, ss, n)
            if total > best_total:
                best_total = total
                bx[:] = xs
                by[:] = ys
                bs[:] = ss
            # Ruin-and-recreate: demolish a few squares so the next cycle
            # rebuilds from a different basin instead of re-freezing.
            if it > 0:
                for _ in range(1 + n // 3):
                    v = np.random.randint(n)
                    ss[v] = 0.0
                    xs[v] = np.random.random()
                    ys[v] = np.random.random()
                    cap = _max_side(xs, ys, ss, n, v, xs[v], ys[v])
                    if cap > 0.0:
                        ss[v] = min(cap, 0.02)
                total = ss.sum()
            temp = t0
        elif temp > 2e-3:
            # Floor well above zero: side rebalancing in jammed structures
            # needs small downhill shrinks to stay live.
            temp *= cooling
        i = np.random.randint(n)
        r = np.random.random()
        if r < 0.10:
            # Teleport: restart the square somewhere it can grow.
            px = np.random.random()
            py = np.random.random()
            cap = _max_side(xs, ys, ss, n, i, px, py)
            if cap <= 0.0:
                continue
            delta = cap - ss[i]
            if delta >= 0.0 or np.random.random() < np.exp(delta / max(temp, 1e-9)):
                xs[i] = px
                ys[i] = py
                ss[i] = cap
                total += delta
        elif r < 0.30:
            # Jittered translation at the current side.
            step = 0.01 + temp
            px = xs[i] + step * (np.random.random() * 2.0 - 1.0)
            py = ys[i] + step * (np.random.random() * 2.0 - 1.0)
            px = min(max(px, 0.0), 1.0 - ss[i])
            py = min(max(py, 0.0), 1.0 - ss[i])
            if _fits(xs, ys, ss, n, i, px, py, ss[i]):
                xs[i] = px
                ys[i] = py
        elif r < 0.50:
            # Snap to another square's edges (possibly on both axes); exact
            # contact is what lets the grow move reach grid-aligned optima.
            j = np.random.randint(n)
            if j == i:
                continue
            px = xs[i]
            py = ys[i]
            if np.random.random() < 0.7:
                cx = np.random.randint(5)
                if cx == 0:
                    px = xs[j] + ss[j]
                elif cx == 1:
                    px = xs[j] - ss[i]
                elif cx == 2:
                    px = xs[j]
                elif cx == 3:
                    px = 0.0
                else:
                    px = 1.0 - ss[i]
            if np.random.random() < 0.7:
                cy = np.random.randint(5)
                if cy == 0:
                    py = ys[j] + ss[j]
                elif cy == 1:
                    py = ys[j] - ss[i]
                elif cy == 2:
                    py = ys[j]
                elif cy == 3:
                    py = 0.0
                else:
                    py = 1.0 - ss[i]
            if _fits(xs, ys, ss, n, i, px, py, ss[i]):
                xs[i] = px
                ys[i] = py
        elif r < 0.70:
            # Grow in place to the local maximum (never worsens).
            cap = _max_side(xs, ys, ss, n, i, xs[i], ys[i])
            if cap > ss[i]:
                total += cap - ss[i]
                ss[i] = cap
        elif r < 0.78:
            # Shrink (accepted by the Metropolis rule) to unlock neighbours;
            # fine shrinks rebalance jammed sides, coarse ones clear space.
            if np.random.random() < 0.5:
                new_side = ss[i] * (0.9 + 0.1 * np.random.random())
            else:
                new_side = ss[i] * (0.3 + 0.7 * np.random.random())
            delta = new_side - ss[i]
            if np.random.random() < np.exp(delta / max(temp, 1e-9)):
                total += delta
                ss[i] = new_side
        elif r < 0.85:
            # Match a peer's side; uniform sides are what grid optima need.
            j = np.random.randint(n)
            if j == i or ss[j] <= 0.0:
                continue
            delta = ss[j] - ss[i]
            if _fits(xs, ys, ss, n, i, xs[i], ys[i], ss[j]) and (
                delta >= 0.0
                or np.random.random() < np.exp(delta / max(temp, 1e-9))
            ):
                total += delta
                ss[i] = ss[j]
        else:
            # Compact: slide toward the origin until contact.
            _slide_home(xs, ys, ss, n, i)
        if total > best_total:
            best_total = total
            bx[:] = xs
            by[:] = ys
            bs[:] = ss
    final = _polish(bx, by, bs, n)
    if final > best_total:
        best_total = final
    return best_total, bx, by, bs


def _float_valid(xs, ys, ss, tol):
    n = len(ss)
    for i in range(n):
        if xs[i] < -tol or ys[i] < -tol or \
           xs[i] + ss[i] > 1 + tol or ys[i] + ss[i] > 1 + tol:
            return False
        for j in range(i + 1, n):
            pen_x = min(xs[i] + ss[i], xs[j] + ss[j]) - max(xs[i], xs[j])
            pen_y = min(ys[i] + ss[i], ys[j] + ss[j]) - max(ys[i], ys[j])
            if pen_x > tol and pen_y > tol:
                return False
    return True


def _lp_polish(xs, ys, ss):
    """Maximize total side with the current contact structure frozen.

    For each pair, keep the separating constraint with the largest margin
    (i left of j, j left of i, i below j, or j below i) and solve the
    resulting linear program over positions and sides.  The annealed state
    is feasible by construction, so this never loses ground; when the
    combinatorial structure is already optimal it closes the remaining
    continuous gap exactly.
    """
    n = len(ss)
    num_vars = 3 * n
    cost = np.zeros(num_vars)
    cost[2 * n:] = -1.0
    rows = []
    rhs = []

    def constrain(le_pos, le_side, ge_pos):
        # position[le_pos] + side[le_side] - position[ge_pos] <= 0
        row = np.zeros(num_vars)
        row[le_pos] = 1.0
        row[2 * n + le_side] = 1.0
        row[ge_pos] = -1.0
        rows.append(row)
        rhs.append(0.0)

    for i in range(n):
        for var in (i, n + i):  # x_i + s_i <= 1 and y_i + s_i <= 1
            row = np.zeros(num_vars)
            row[var] = 1.0
            row[2 * n + i] = 1.0
            rows.append(row)
            rhs.append(1.0)
        for j in range(i + 1, n):
            margins = (
                (xs[j] - xs[i] - ss[i], (i, i, j)),          # i left of j
                (xs[i] - xs[j] - ss[j], (j, j, i)),          # j left of i
                (ys[j] - ys[i] - ss[i], (n + i, i, n + j)),  # i below j
                (ys[i] - ys[j] - ss[j], (n + j, j, n + i)),  # j below i
            )
            _, (a, b, c) = max(margins, key=lambda m: m[0])
            constrain(a, b, c)

    result = linprog(
        cost,
        A_ub=np.array(rows),
        b_ub=np.array(rhs),
        bounds=[(0.0, 1.0)] * num_vars,
        method="highs",
    )
    if not result.success:
        return None
    sol = result.x
    return sol[:n], sol[n:2 * n], sol[2 * n:]


def optimize(n: int, cfg: SearchConfig | None = None) -> FloatPacking:
    """Best packing of n squares found by annealing across all restarts.

    Deterministic for a fixed config; ties between restarts go to the
    smallest restart index.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if cfg is None:
        cfg = SearchConfig()
    best: FloatPacking | None = None
    for r in range(cfg.restarts):
        seed = (cfg.seed * 1_000_003 + r) & 0x7FFFFFFF
        total, bx, by, bs = _anneal(
            n, seed, cfg.iterations, cfg.initial_temperature, cfg.cooling_rate
        )
        polished = _lp_polish(bx, by, bs)
        if polished is not None:
            px, py, ps = polished
            ptotal = float(ps.sum())
            if ptotal > total and _float_valid(px, py, ps, cfg.shrink_epsilon):
                bx, by, bs, total = px, py, ps, ptotal
        if best is None or total > best.best_total:
            best = FloatPacking(
                squares=tuple(
                    (float(bx[i]), float(by[i]), float(bs[i])) for i in range(n)
                ),
                best_total=float(total),
                restart=r,
            )
    assert best is not None
    return best


def rationalize(fp: FloatPacking, max_denominator: int) -> Packing:
    """Snap a float packing to exact rationals and repair it minimally.

    Positions and sides are replaced by the closest fractions with
    denominator <= max_denominator, then each side is reduced by the least
    exact amount that restores containment and disjointness against the
    already-fixed earlier squares.  Raises ValueError when no positive
    side survives the repair.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    fixed: list[Square] = []
    for idx, (fx, fy, fs) in enumerate(fp.squares):
        x = min(max(Fraction(fx).limit_denominator(max_denominator), 0), 1)
        y = min(max(Fraction(fy).limit_denominator(max_denominator), 0), 1)
        side = Fraction(fs).limit_denominator(max_denominator)
        side = min(side, 1 - x, 1 - y)
        for prev in fixed:
            if prev.x_end <= x or prev.y_end <= y:
                continue
            cap = max(prev.x - x, prev.y - y)
            side = min(side, cap)
        if side <= 0:
            raise ValueError(
                f"square {idx} cannot be repaired at denominator {max_denominator}"
            )
        fixed.append(Square(x, y, side))
    return Packing(tuple(fixed))
