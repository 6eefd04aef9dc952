# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernel: one relaxed-objective maximization pass.

Same contract and arithmetic order as temprel._kernels_py.lr_iteration.
"""

import numpy as np


def lr_iteration(double[:, ::1] scores,
                 long long[::1] match_rows,
                 long long[::1] match_offsets,
                 long long[::1] relations,
                 double[::1] pstars,
                 double[::1] lambdas,
                 long long[::1] out_assignment,
                 long long[::1] out_counts):
    cdef Py_ssize_t n = scores.shape[0]
    cdef Py_ssize_t n_labels = scores.shape[1]
    cdef Py_ssize_t n_constraints = relations.shape[0]
    cdef Py_ssize_t t, i, j, l, rel, best
    cdef double lam, shift, value, best_value
    cdef double raw_objective = 0.0
    cdef double penalized_objective = 0.0

    for t in range(n_constraints):
        out_counts[t] = 0
    if n == 0:
        return 0.0, 0.0

    adjust_arr = np.zeros((n, n_labels), dtype=np.float64)
    cdef double[:, ::1] adjust = adjust_arr

    for t in range(n_constraints):
        lam = lambdas[t]
        shift = lam * pstars[t]
        rel = relations[t]
        for j in range(match_offsets[t], match_offsets[t + 1]):
            i = match_rows[j]
            for l in range(n_labels):
                adjust[i, l] -= shift
            adjust[i, rel] += lam

    for i in range(n):
        best = 0
        best_value = scores[i, 0] + adjust[i, 0]
        for l in range(1, n_labels):
            value = scores[i, l] + adjust[i, l]
            if value > best_value:
                best = l
                best_value = value
        out_assignment[i] = best
        raw_objective += scores[i, best]
        penalized_objective += best_value

    for t in range(n_constraints):
        rel = relations[t]
        for j in range(match_offsets[t], match_offsets[t + 1]):
            if out_assignment[match_rows[j]] == rel:
                out_counts[t] += 1

    return raw_objective, penalized_objective
