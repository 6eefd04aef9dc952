"""Pure-Python (numpy) implementation of the solver's hot kernel.

Mirrors temprel._kernels exactly: per-element arithmetic happens in the same
order (per-constraint accumulation into an adjustment matrix, then one add
onto the raw scores), so both backends produce bit-identical penalized
scores and therefore identical argmax assignments.
"""

from __future__ import annotations

import numpy as np


def lr_iteration(scores, match_rows, match_offsets, relations, pstars, lambdas,
                 out_assignment, out_counts):
    """One relaxed-objective maximization pass over a packed pair block.

    For each constraint t = (type pair, relation r) with multiplier lam,
    every matching pair's score row gets -lam*p_star added to all labels and
    +lam extra on label r (net: +lam*(1-p_star) on r, -lam*p_star elsewhere).
    Each pair then takes the argmax of its adjusted row (ties to the lowest
    label index).

    Writes the per-pair label choice into out_assignment and, per constraint,
    the number of matching pairs assigned its relation into out_counts.
    Returns (raw objective, penalized objective): the sum of raw scores and
    of adjusted scores at the chosen labels.
    """
    n = scores.shape[0]
    n_constraints = len(relations)
    if n == 0:
        out_counts[:] = 0
        return 0.0, 0.0

    adjust = np.zeros_like(scores)
    for t in range(n_constraints):
        rows = match_rows[match_offsets[t]:match_offsets[t + 1]]
        if len(rows) == 0:
            continue
        adjust[rows, :] -= lambdas[t] * pstars[t]
        adjust[rows, relations[t]] += lambdas[t]

    penalized = scores + adjust
    choice = np.argmax(penalized, axis=1)
    out_assignment[:] = choice

    rows_idx = np.arange(n)
    raw_objective = float(np.sum(scores[rows_idx, choice]))
    penalized_objective = float(np.sum(penalized[rows_idx, choice]))

    for t in range(n_constraints):
        rows = match_rows[match_offsets[t]:match_offsets[t + 1]]
        out_counts[t] = int(np.count_nonzero(choice[rows] == relations[t]))
    return raw_objective, penalized_objective
