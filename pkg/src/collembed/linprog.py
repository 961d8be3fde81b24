"""Exact rational linear programming at small scale.

Solves   maximize c·x  subject to  Ax = b, x >= 0   with all data rational,
via the two-phase simplex method using Bland's smallest-index rule, which
guarantees termination and makes the pivot path deterministic.

Every status carries an exactly checkable certificate:

* ``optimal``    a primal solution x and a dual vector y with yᵀA >= c
                 componentwise and y·b = c·x (weak duality closes the gap);
* ``infeasible`` a Farkas vector y with yᵀA <= 0 and y·b > 0;
* ``unbounded``  a feasible x and a ray r >= 0 with Ar = 0 and c·r > 0.

Certificates are re-verified internally before a result is returned, so a
bookkeeping bug fails loudly instead of producing a wrong verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None


class _Tableau:
    """Dense simplex tableau over Fractions.

    rows[i] = coefficients of the i-th equality constraint followed by the
    right-hand side; ``basis[i]`` is the variable basic in row i.
    """

    def __init__(self, rows: list[list[Fraction]], basis: list[int], ncols: int):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols  # number of variables (columns excluding rhs)

    def pivot(self, r: int, c: int) -> None:
        piv_row = self.rows[r]
        piv = piv_row[c]
        inv = _ONE / piv
        self.rows[r] = [e * inv for e in piv_row]
        piv_row = self.rows[r]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, piv_row)]
        self.basis[r] = c

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        # cost[j] - (cost of basis) · (column j), computed row-wise
        red = list(cost)
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb != 0:
                for j in range(self.ncols):
                    if row[j] != 0:
                        red[j] -= cb * row[j]
        return red

    def objective(self, cost: list[Fraction]) -> Fraction:
        return sum(cost[self.basis[i]] * row[-1] for i, row in enumerate(self.rows))

    def solution(self, nvars: int) -> list[Fraction]:
        x = [_ZERO] * nvars
        for i, j in enumerate(self.basis):
            if j < nvars:
                x[j] = self.rows[i][-1]
        return x

    def simplex(self, cost: list[Fraction], allowed: int) -> int | None:
        """Run Bland-rule pivots maximizing ``cost`` over columns < allowed.

        Returns None at optimality, or the entering column proving
        unboundedness (positive reduced cost, no positive column entry).
        """
        while True:
            red = self.reduced_costs(cost)
            enter = next((j for j in range(allowed) if red[j] > 0), None)
            if enter is None:
                return None
            leave = None
            best: Fraction | None = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return enter
            self.pivot(leave, enter)


def _as_fraction_matrix(a) -> list[list[Fraction]]:
    return [[Fraction(e) for e in row] for row in a]


def lp_solve(c, a, b) -> LPResult:
    """Maximize c·x subject to Ax = b, x >= 0, exactly.

    ``c`` is a sequence of length n, ``a`` a sequence of m rows of length n,
    ``b`` a sequence of length m; entries may be ints or Fractions.
    Raises ValueError on inconsistent dimensions.
    """
    cost0 = [Fraction(e) for e in c]
    mat = _as_fraction_matrix(a)
    rhs = [Fraction(e) for e in b]
    n = len(cost0)
    m = len(mat)
    if len(rhs) != m or any(len(row) != n for row in mat):
        raise ValueError("inconsistent LP dimensions")

    # Normalize to b >= 0, remembering row flips for the certificates.
    flip = [False] * m
    for i in range(m):
        if rhs[i] < 0:
            flip[i] = True
            mat[i] = [-e for e in mat[i]]
            rhs[i] = -rhs[i]

    # Phase 1: artificial variable per row, minimize their sum.
    total = n + m
    rows = [mat[i] + [_ONE if k == i else _ZERO for k in range(m)] + [rhs[i]]
            for i in range(m)]
    t = _Tableau(rows, list(range(n, total)), total)
    phase1_cost = [_ZERO] * n + [Fraction(-1)] * m
    unb = t.simplex(phase1_cost, total)
    assert unb is None  # phase-1 objective is bounded above by 0
    if t.objective(phase1_cost) != 0:
        y = _phase1_farkas(t, phase1_cost, n, m, flip)
        _check_farkas(_as_fraction_matrix(a), [Fraction(e) for e in b], y)
        return LPResult(INFEASIBLE, farkas=tuple(y))

    _evict_artificials(t, n)

    # Phase 2 over the original columns only.
    unb = t.simplex(cost0 + [_ZERO] * m, n)
    x = t.solution(n)
    if unb is not None:
        ray = [_ZERO] * n
        ray[unb] = _ONE
        for i, j in enumerate(t.basis):
            if j < n:
                ray[j] = -t.rows[i][unb]
        _check_ray(_as_fraction_matrix(a), [Fraction(e) for e in b], cost0, x, ray)
        return LPResult(UNBOUNDED, x=tuple(x), ray=tuple(ray))

    y = _dual_from_basis(t, cost0, n, m, flip)
    value = sum(ci * xi for ci, xi in zip(cost0, x))
    _check_optimal(_as_fraction_matrix(a), [Fraction(e) for e in b], cost0, x, y, value)
    return LPResult(OPTIMAL, value=value, x=tuple(x), dual=tuple(y))


def _evict_artificials(t: _Tableau, n: int) -> None:
    """Pivot basic artificials (level 0 after phase 1) onto original columns;
    rows that cannot pivot are redundant and are dropped."""
    keep_rows = []
    for i in range(len(t.rows)):
        if t.basis[i] >= n:
            col = next((j for j in range(n) if t.rows[i][j] != 0), None)
            if col is None:
                continue  # 0 = 0 row
            t.pivot(i, col)
        keep_rows.append(i)
    if len(keep_rows) != len(t.rows):
        t.rows = [t.rows[i] for i in keep_rows]
        t.basis = [t.basis[i] for i in keep_rows]


def _phase1_farkas(t: _Tableau, phase1_cost, n: int, m: int, flip) -> list[Fraction]:
    # Simplex multipliers: y_i = phase-1 cost of artificial i minus its
    # reduced cost.  At optimality with negative objective, -y certifies
    # infeasibility of the sign-normalized system; unflip to match the input.
    red = t.reduced_costs(phase1_cost)
    y = []
    for i in range(m):
        yi = phase1_cost[n + i] - red[n + i]
        y.append(yi if flip[i] else -yi)
    return y


def _dual_from_basis(t: _Tableau, cost0, n: int, m: int, flip) -> list[Fraction]:
    # The artificial block started as the identity and only row operations
    # were applied, so column n+i of the tableau records how much of the
    # i-th input row is mixed into each current row.  The multipliers are
    # therefore y_i = sum over rows of (basic cost) * rows[r][n+i]; rows
    # dropped as redundant simply contribute nothing.
    y = [_ZERO] * m
    for i in range(m):
        col = n + i
        yi = _ZERO
        for r, row in enumerate(t.rows):
            cb = cost0[t.basis[r]] if t.basis[r] < n else _ZERO
            if cb != 0 and row[col] != 0:
                yi += cb * row[col]
        y[i] = -yi if flip[i] else yi
    return y


def _check_farkas(a, b, y) -> None:
    m = len(a)
    n = len(a[0]) if a else 0
    for j in range(n):
        assert sum(y[i] * a[i][j] for i in range(m)) <= 0, "Farkas: yᵀA <= 0 fails"
    assert sum(y[i] * b[i] for i in range(m)) > 0, "Farkas: y·b > 0 fails"


def _check_ray(a, b, c, x, r) -> None:
    m = len(a)
    n = len(c)
    assert all(xi >= 0 for xi in x) and all(ri >= 0 for ri in r)
    for i in range(m):
        assert sum(a[i][j] * x[j] for j in range(n)) == b[i], "ray: x infeasible"
        assert sum(a[i][j] * r[j] for j in range(n)) == 0, "ray: Ar != 0"
    assert sum(c[j] * r[j] for j in range(n)) > 0, "ray: c·r <= 0"


def _check_optimal(a, b, c, x, y, value) -> None:
    m = len(a)
    n = len(c)
    assert all(xi >= 0 for xi in x), "optimal: x has a negative entry"
    for i in range(m):
        assert sum(a[i][j] * x[j] for j in range(n)) == b[i], "optimal: Ax != b"
    for j in range(n):
        assert sum(y[i] * a[i][j] for i in range(m)) >= c[j], "optimal: dual infeasible"
    assert sum(y[i] * b[i] for i in range(m)) == value, "optimal: duality gap"
