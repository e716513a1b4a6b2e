"""Dense tableau simplex for small problems ``max c.y  s.t.  A y <= b, y >= 0, b >= 0``.

The origin is always feasible, so no phase one is needed. Pivoting uses
Bland's rule (smallest entering index, smallest leaving basis index on ratio
ties), which rules out cycling and makes the pivot path deterministic.
"""

import numpy as np


class LPUnbounded(ArithmeticError):
    pass


def simplex_max(c, A, b, tol=1e-11, max_pivots=20000):
    """Return ``(y, objective)`` for the canonical-form LP above."""
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    m, n = A.shape
    if np.any(b < 0):
        raise ValueError("origin must be feasible (b >= 0)")

    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -c
    basis = np.arange(n, n + m)

    for _ in range(max_pivots):
        neg = np.flatnonzero(T[m, :-1] < -tol)
        if neg.size == 0:
            break
        j = neg[0]
        col = T[:m, j]
        rows = np.flatnonzero(col > tol)
        if rows.size == 0:
            raise LPUnbounded("objective unbounded")
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        tied = rows[ratios <= best + tol * max(1.0, abs(best))]
        i = tied[np.argmin(basis[tied])]
        T[i] /= T[i, j]
        others = np.arange(m + 1) != i
        T[others] -= np.outer(T[others, j], T[i])
        basis[i] = j
    else:
        raise RuntimeError("simplex pivot limit reached")

    y = np.zeros(n + m)
    y[basis] = T[:m, -1]
    y = np.maximum(y[:n], 0.0)
    return y, float(c @ y)
