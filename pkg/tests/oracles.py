"""Independent brute-force enumeration oracle for the tests.

Plain recursive search over a coefficient box in diagonal coordinates
(+1, -1, ..., -1), sharing no code with the package kernels.  Pruning is
restricted to provable infeasibility (square budget, linear reach, and a
parity cut when every remaining linear coefficient is odd), so the scan
is exhaustive within the box.
"""

from __future__ import annotations

import itertools
from math import isqrt


def brute_force_diag(s, bounds, rows, targets):
    """All integer vectors v in the box with v0^2 - sum v_i^2 = s, rows @ v = targets."""
    r = len(bounds)
    nrows = len(rows)
    sq_suffix = [0] * (r + 1)
    for i in range(r - 1, 0, -1):
        sq_suffix[i] = sq_suffix[i + 1] + bounds[i] * bounds[i]
    reach = [[0] * (r + 1) for _ in range(nrows)]
    odd_suffix = [[True] * (r + 1) for _ in range(nrows)]
    a2_suffix = [[0] * (r + 1) for _ in range(nrows)]
    for j in range(nrows):
        for i in range(r - 1, -1, -1):
            reach[j][i] = reach[j][i + 1] + abs(rows[j][i]) * bounds[i]
            odd_suffix[j][i] = odd_suffix[j][i + 1] and (rows[j][i] % 2 == 1)
            a2_suffix[j][i] = a2_suffix[j][i + 1] + rows[j][i] * rows[j][i]

    out = []
    v = [0] * r
    partial = [0] * nrows

    def rec(i, qrem):
        if i == r:
            if qrem == 0 and all(partial[j] == targets[j] for j in range(nrows)):
                out.append(tuple(v))
            return
        if i >= 1 and (qrem < 0 or qrem > sq_suffix[i]):
            return
        for j in range(nrows):
            need = targets[j] - partial[j]
            if need > reach[j][i] or -need > reach[j][i]:
                return
            if i >= 1:
                if odd_suffix[j][i] and (need - qrem) % 2 != 0:
                    return
                # Cauchy-Schwarz: (sum a_k v_k)^2 <= (sum a_k^2)(sum v_k^2)
                if need * need > a2_suffix[j][i] * qrem:
                    return
        b = bounds[i]
        if i >= 1:
            b = min(b, isqrt(qrem))  # val^2 must fit the remaining square budget
        for val in range(-b, b + 1):
            v[i] = val
            q2 = (qrem - val * val) if i >= 1 else (val * val - s)
            for j in range(nrows):
                partial[j] += rows[j][i] * val
            rec(i + 1, q2)
            for j in range(nrows):
                partial[j] -= rows[j][i] * val
        v[i] = 0

    rec(0, 0)
    return sorted(out)


def literal_box_scan(s, bounds, rows, targets):
    """No pruning at all; only usable for tiny ranks."""
    axes = [range(-b, b + 1) for b in bounds]
    out = []
    for v in itertools.product(*axes):
        q = v[0] * v[0] - sum(x * x for x in v[1:])
        if q != s:
            continue
        if all(sum(a * x for a, x in zip(row, v)) == t for row, t in zip(rows, targets)):
            out.append(v)
    return sorted(out)


def diag_rows_for_class(model, cls):
    """Constraint row for pair(cls, x) on a diagonal-Gram model."""
    return [model.gram[i][i] * cls.coeffs[i] for i in range(model.rank)]
