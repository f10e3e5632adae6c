# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled agent-visit kernel. Same draw layout and arithmetic as _pykernel."""

import numpy as np
cimport numpy as cnp

cdef int DRAW_ROLE = 0
cdef int DRAW_PARTS = 1
cdef int DRAW_NEIGHBORS = 19
cdef double OP_STEP = 0.1
cdef int PARTNER[6]
PARTNER[:] = [1, 0, 3, 2, -1, -1]


cdef inline void signals(const signed char* s, int* m, int* sym) noexcept nogil:
    cdef int i
    m[0] = 0
    for i in range(6):
        if s[i] != 0:
            m[0] += 1
    sym[0] = 0
    if s[0] != 0 and s[1] != 0 and s[0] != s[1]:
        sym[0] += 1
    if s[2] != 0 and s[3] != 0 and s[2] != s[3]:
        sym[0] += 1


def step_agents(signed char[:, ::1] states, double[::1] fitness, double[:, ::1] p_im,
                double[::1] p_sym, const double[::1] invent_rate,
                const cnp.int64_t[:, ::1] nbrs, const cnp.int64_t[::1] nbr_count,
                const cnp.int64_t[::1] order, const double[:, ::1] draws,
                double change_prob, double w_move, double w_sym):
    cdef Py_ssize_t n = states.shape[0], t, a, b, j, r, k, kk
    cdef int i, partner, m1, s1, m2, s2
    cdef signed char cand[6]
    cdef signed char st
    cdef cnp.int64_t buf[64]
    cdef cnp.int64_t tmp
    cdef double f2
    cdef long n_inv = 0, n_imi = 0
    cdef const double* u

    if nbrs.shape[1] > 64:
        raise ValueError("at most 64 neighbours supported")
    if draws.shape[0] != n or draws.shape[1] < DRAW_NEIGHBORS + nbrs.shape[1] - 1:
        raise ValueError("draw matrix has the wrong shape")

    with nogil:
        for t in range(order.shape[0]):
            a = order[t]
            u = &draws[a, 0]
            if u[DRAW_ROLE] < invent_rate[a]:
                for i in range(6):
                    cand[i] = states[a, i]
                for i in range(6):
                    kk = DRAW_PARTS + 3 * i
                    if u[kk] >= change_prob:
                        continue
                    st = cand[i]
                    if u[kk + 1] < p_im[a, i]:
                        if st == 0:
                            partner = PARTNER[i]
                            if partner >= 0 and cand[partner] != 0:
                                if u[kk + 2] < p_sym[a]:
                                    cand[i] = 3 - cand[partner]
                                else:
                                    cand[i] = cand[partner]
                            else:
                                cand[i] = 1 if u[kk + 2] < 0.5 else 2
                        else:
                            cand[i] = 3 - st
                    else:
                        cand[i] = 0
                signals(cand, &m2, &s2)
                f2 = w_move * m2 + w_sym * s2
                if not f2 > fitness[a]:
                    continue
                n_inv += 1
            else:
                k = nbr_count[a]
                for j in range(k):
                    buf[j] = nbrs[a, j]
                b = -1
                for j in range(k):
                    if j < k - 1:
                        r = j + <Py_ssize_t>(u[DRAW_NEIGHBORS + j] * (k - j))
                        tmp = buf[j]
                        buf[j] = buf[r]
                        buf[r] = tmp
                    if fitness[buf[j]] > fitness[a]:
                        b = buf[j]
                        break
                if b < 0:
                    continue
                for i in range(6):
                    cand[i] = states[b, i]
                signals(cand, &m2, &s2)
                f2 = fitness[b]
                n_imi += 1
            signals(&states[a, 0], &m1, &s1)
            if m2 > m1:
                for i in range(6):
                    p_im[a, i] = min(1.0, p_im[a, i] + OP_STEP)
            elif m2 < m1:
                for i in range(6):
                    p_im[a, i] = max(0.0, p_im[a, i] - OP_STEP)
            if s2 > s1:
                p_sym[a] = min(1.0, p_sym[a] + OP_STEP)
            elif s2 < s1:
                p_sym[a] = max(0.0, p_sym[a] - OP_STEP)
            for i in range(6):
                states[a, i] = cand[i]
            fitness[a] = f2
    return n_inv, n_imi
