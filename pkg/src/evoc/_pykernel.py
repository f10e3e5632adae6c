"""Pure-Python agent-visit kernel.

Mirrors ``_ckernel.pyx`` operation for operation; both consume the same
pre-drawn uniforms so they produce identical trajectories.

Per-visit draw layout (one row of ``draws`` per agent):

    [0]              invent-or-imitate dispatch
    [1 + 3*i + 0]    part i: does a change event occur
    [1 + 3*i + 1]    part i: increase (vs decrease) movement
    [1 + 3*i + 2]    part i: direction for a part that starts moving
    [19 + j]         neighbor shuffle, j-th Fisher-Yates pick
"""

from __future__ import annotations

DRAW_ROLE = 0
DRAW_PARTS = 1
DRAW_NEIGHBORS = 19
OP_STEP = 0.1

_PARTNER = (1, 0, 3, 2, -1, -1)


def visit_draws(max_neighbors: int) -> int:
    """Uniforms consumed per agent visit."""
    return DRAW_NEIGHBORS + max(max_neighbors - 1, 0)


def signals(s) -> tuple[int, int]:
    m = (s[0] != 0) + (s[1] != 0) + (s[2] != 0) + (s[3] != 0) + (s[4] != 0) + (s[5] != 0)
    sym = 0
    if s[0] != 0 and s[1] != 0 and s[0] != s[1]:
        sym += 1
    if s[2] != 0 and s[3] != 0 and s[2] != s[3]:
        sym += 1
    return m, sym


def mutate(cur, p_im, p_sym: float, change_prob: float, u) -> list[int]:
    """Candidate action built from ``cur`` with draws ``u`` (one visit row)."""
    cand = list(cur)
    for i in range(6):
        k = DRAW_PARTS + 3 * i
        if u[k] >= change_prob:
            continue
        st = cand[i]
        if u[k + 1] < p_im[i]:
            if st == 0:
                partner = _PARTNER[i]
                if partner >= 0 and cand[partner] != 0:
                    if u[k + 2] < p_sym:
                        cand[i] = 3 - cand[partner]
                    else:
                        cand[i] = cand[partner]
                else:
                    cand[i] = 1 if u[k + 2] < 0.5 else 2
            else:
                cand[i] = 3 - st
        else:
            cand[i] = 0
    return cand


def update_operators(p_im, p_sym: float, m1: int, s1: int, m2: int, s2: int) -> float:
    """Adjust ``p_im`` in place; return the new ``p_sym``."""
    if m2 > m1:
        for i in range(6):
            p_im[i] = min(1.0, p_im[i] + OP_STEP)
    elif m2 < m1:
        for i in range(6):
            p_im[i] = max(0.0, p_im[i] - OP_STEP)
    if s2 > s1:
        p_sym = min(1.0, p_sym + OP_STEP)
    elif s2 < s1:
        p_sym = max(0.0, p_sym - OP_STEP)
    return p_sym


def pick_fitter(own_fitness: float, nbrs, fitness, u) -> int:
    """First strictly fitter neighbor in random order, or -1."""
    cand = list(nbrs)
    k = len(cand)
    for j in range(k):
        if j < k - 1:
            r = j + int(u[DRAW_NEIGHBORS + j] * (k - j))
            cand[j], cand[r] = cand[r], cand[j]
        if fitness[cand[j]] > own_fitness:
            return cand[j]
    return -1


def step_agents(states, fitness, p_im, p_sym, invent_rate, nbrs, nbr_count, order, draws,
                change_prob, w_move, w_sym):
    """Visit every agent once in ``order``; arrays are updated in place.

    Returns ``(invention_adoptions, imitation_adoptions)``.
    """
    S = states.tolist()
    F = fitness.tolist()
    P = p_im.tolist()
    Q = p_sym.tolist()
    rates = invent_rate.tolist()
    NB = [row[:c] for row, c in zip(nbrs.tolist(), nbr_count.tolist())]
    U = draws.tolist()
    n_inv = n_imi = 0
    for a in order.tolist():
        u = U[a]
        cur = S[a]
        if u[DRAW_ROLE] < rates[a]:
            cand = mutate(cur, P[a], Q[a], change_prob, u)
            m2, s2 = signals(cand)
            f2 = w_move * m2 + w_sym * s2
            if not f2 > F[a]:
                continue
            n_inv += 1
        else:
            b = pick_fitter(F[a], NB[a], F, u)
            if b < 0:
                continue
            cand = list(S[b])
            m2, s2 = signals(cand)
            f2 = F[b]
            n_imi += 1
        m1, s1 = signals(cur)
        Q[a] = update_operators(P[a], Q[a], m1, s1, m2, s2)
        S[a] = cand
        F[a] = f2
    states[...] = S
    fitness[...] = F
    p_im[...] = P
    p_sym[...] = Q
    return n_inv, n_imi
