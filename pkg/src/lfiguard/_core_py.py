"""Pure-Python implementations of the two hot kernels.

`lfiguard._core` is the compiled twin; `lfiguard._backend` picks one at
import time. Both must return identical results: the solver follows a
fixed branching rule (first unfixed variable, lower half first) and
bounds-consistency propagation, whose fixpoint is order-independent, so
pruning strength may differ between twins but never the outcome.

All solver arithmetic is on plain integers; callers pre-scale rational
coefficients.
"""

from __future__ import annotations

from collections import deque

import numpy as np

STATUS_INFEASIBLE = 0
STATUS_OPTIMAL = 1

REL_LE = -1
REL_EQ = 0
REL_GE = 1


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _propagate(lo, hi, rows, var_rows, seed):
    """Tighten domains to the bounds-consistency fixpoint.

    Returns False when some constraint is proven unsatisfiable.
    """
    pending = deque(seed)
    queued = [False] * len(rows)
    for r in pending:
        queued[r] = True
    while pending:
        r = pending.popleft()
        queued[r] = False
        idxs, coeffs, rel, rhs = rows[r]
        min_s = 0
        max_s = 0
        for v, a in zip(idxs, coeffs):
            if a > 0:
                min_s += a * lo[v]
                max_s += a * hi[v]
            else:
                min_s += a * hi[v]
                max_s += a * lo[v]
        if rel != REL_GE and min_s > rhs:
            return False
        if rel != REL_LE and max_s < rhs:
            return False
        for v, a in zip(idxs, coeffs):
            new_lo = lo[v]
            new_hi = hi[v]
            if rel != REL_GE:
                # a*x <= rhs - (min_s - own minimal contribution)
                if a > 0:
                    cap = lo[v] + (rhs - min_s) // a
                    if cap < new_hi:
                        new_hi = cap
                else:
                    c = rhs - min_s + a * hi[v]
                    floor_lo = _ceil_div(c, a)
                    if floor_lo > new_lo:
                        new_lo = floor_lo
            if rel != REL_LE:
                # a*x >= rhs - (max_s - own maximal contribution)
                if a > 0:
                    c = rhs - max_s + a * hi[v]
                    base = _ceil_div(c, a)
                    if base > new_lo:
                        new_lo = base
                else:
                    c = rhs - max_s + a * lo[v]
                    cap = c // a
                    if cap < new_hi:
                        new_hi = cap
            if new_lo > new_hi:
                return False
            if new_lo != lo[v] or new_hi != hi[v]:
                lo[v] = new_lo
                hi[v] = new_hi
                for rr in var_rows[v]:
                    if not queued[rr]:
                        queued[rr] = True
                        pending.append(rr)
    return True


def _select_cover_rows(lb, ub, obj, rows):
    """Pick >=-rows with unit coefficients over binaries and disjoint supports.

    They feed an admissible objective lower bound: each unsatisfied row
    must still raise its LHS using its own (cost-sorted) variables.
    """
    selected = []
    used = set()
    for idxs, coeffs, rel, rhs in rows:
        if rel != REL_GE:
            continue
        if any(a != 1 for a in coeffs):
            continue
        if any(lb[v] < 0 or ub[v] > 1 for v in idxs):
            continue
        if any(obj[v] < 0 for v in idxs):
            continue
        if all(obj[v] == 0 for v in idxs):
            continue
        if any(v in used for v in idxs):
            continue
        used.update(idxs)
        by_cost = tuple(sorted(idxs, key=lambda v: (obj[v], v)))
        selected.append((by_cost, rhs))
    return tuple(selected)


def solve_bb(lb, ub, obj, rows):
    """Exact minimization of a bounded integer program by DFS branch and bound.

    Parameters
    ----------
    lb, ub : per-variable integer bounds (finite).
    obj : per-variable integer objective coefficients (minimized).
    rows : list of (var_indices, coefficients, relation, rhs) with
        relation -1/0/1 for <= / == / >=.

    Returns (status, values, objective) with values None when infeasible.
    Branches on the first unfixed variable, lower half first; objective
    ties resolve to the lexicographically smallest assignment.
    """
    nvars = len(lb)
    var_rows = [[] for _ in range(nvars)]
    for r, (idxs, _, _, _) in enumerate(rows):
        for v in idxs:
            var_rows[v].append(r)

    obj_terms = tuple((v, c) for v, c in enumerate(obj) if c != 0)
    cover_rows = _select_cover_rows(lb, ub, obj, rows)

    best_val = None
    best_assign = None

    stack = [(list(lb), list(ub), range(len(rows)))]
    while stack:
        lo, hi, seed = stack.pop()
        if not _propagate(lo, hi, rows, var_rows, seed):
            continue

        bound = 0
        for v, c in obj_terms:
            bound += c * (lo[v] if c > 0 else hi[v])
        feasible = True
        for by_cost, rhs in cover_rows:
            have = 0
            for v in by_cost:
                have += lo[v]
            need = rhs - have
            if need <= 0:
                continue
            taken = 0
            for v in by_cost:
                if lo[v] == 0 and hi[v] == 1:
                    bound += obj[v]
                    taken += 1
                    if taken == need:
                        break
            if taken < need:
                feasible = False
                break
        if not feasible:
            continue
        if best_val is not None and bound >= best_val:
            continue

        branch_var = -1
        for v in range(nvars):
            if lo[v] < hi[v]:
                branch_var = v
                break
        if branch_var < 0:
            value = 0
            for v, c in obj_terms:
                value += c * lo[v]
            if best_val is None or value < best_val:
                best_val = value
                best_assign = list(lo)
            continue

        mid = (lo[branch_var] + hi[branch_var]) // 2
        lo_high = list(lo)
        lo_high[branch_var] = mid + 1
        stack.append((lo_high, list(hi), var_rows[branch_var]))
        hi_low = list(hi)
        hi_low[branch_var] = mid
        stack.append((list(lo), hi_low, var_rows[branch_var]))

    if best_val is None:
        return STATUS_INFEASIBLE, None, None
    return STATUS_OPTIMAL, best_assign, best_val


def sweep_cover_masks(points, rects, diameter, y_lo, y_hi, z_lo, z_hi, step):
    """Scan laser centers on a grid and collect distinct coverage masks.

    points : sequence of (py, pz, bit) sensitive points; a center covers
        one when 4*dist^2 < diameter^2 (strictly).
    rects : sequence of (ry0, rz0, ry1, rz1, bit); covered when the open
        disk meets the rectangle.
    Returns {mask: (wy, wz)} with the lexicographically smallest witness
    center per mask; the empty mask is omitted.
    """
    ys = np.arange(y_lo, y_hi + 1, step, dtype=np.int64)
    zs = np.arange(z_lo, z_hi + 1, step, dtype=np.int64)
    if len(ys) == 0 or len(zs) == 0:
        return {}
    gy, gz = np.meshgrid(ys, zs, indexing="ij")
    mask = np.zeros(gy.shape, dtype=np.int64)
    dd = int(diameter) * int(diameter)
    for py, pz, bit in points:
        cond = 4 * ((gy - py) ** 2 + (gz - pz) ** 2) < dd
        mask[cond] |= np.int64(1 << bit)
    for ry0, rz0, ry1, rz1, bit in rects:
        dy = np.maximum(np.maximum(ry0 - gy, gy - ry1), 0)
        dz = np.maximum(np.maximum(rz0 - gz, gz - rz1), 0)
        cond = 4 * (dy * dy + dz * dz) < dd
        mask[cond] |= np.int64(1 << bit)

    flat = mask.ravel()  # row-major: index order matches lexicographic (y, z)
    uniq, first = np.unique(flat, return_index=True)
    out = {}
    nz = len(zs)
    for m, pos in zip(uniq.tolist(), first.tolist()):
        if m == 0:
            continue
        out[int(m)] = (int(ys[pos // nz]), int(zs[pos % nz]))
    return out
