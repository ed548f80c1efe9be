"""Kernel implementations shared by the numba and numpy backends.

Every function here is written against plain numpy arrays in a style that
numba's nopython mode compiles directly; the numpy backend runs the same
source uncompiled. Keeping one source guarantees both backends produce
byte-identical results.
"""

import numpy as np

# search status codes shared with the wrappers in coloring.py
RUNNING = 0
SAT = 1
UNSAT = 2
NODE_BUDGET = 3


def dfs_forest(indptr, indices, start, stop_at_conflict):
    """Iterative DFS forest with depth labels and odd-cycle edge detection.

    Roots are `start` first, then the lowest-indexed unvisited vertices in
    ascending order; neighbors are scanned in ascending index order (the
    adjacency rows are sorted). A non-tree edge whose endpoints have equal
    depth parity closes an odd cycle; the first one met in traversal order
    is reported as (conf_u, conf_v), or (-1, -1) if none exists.
    """
    n = indptr.shape[0] - 1
    dfi = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    root = np.full(n, -1, dtype=np.int64)
    stack_v = np.empty(n, dtype=np.int64)
    stack_p = np.empty(n, dtype=np.int64)
    conf_u = np.int64(-1)
    conf_v = np.int64(-1)
    for ridx in range(n + 1):
        r = start if ridx == 0 else ridx - 1
        if dfi[r] >= 0:
            continue
        dfi[r] = 0
        root[r] = r
        top = 0
        stack_v[0] = r
        stack_p[0] = indptr[r]
        while top >= 0:
            v = stack_v[top]
            p = stack_p[top]
            if p < indptr[v + 1]:
                stack_p[top] = p + 1
                u = indices[p]
                if u == parent[v]:
                    continue
                if dfi[u] < 0:
                    dfi[u] = dfi[v] + 1
                    parent[u] = v
                    root[u] = root[v]
                    top += 1
                    stack_v[top] = u
                    stack_p[top] = indptr[u]
                elif conf_u < 0 and ((dfi[v] - dfi[u]) & 1) == 0:
                    conf_u = v
                    conf_v = u
                    if stop_at_conflict:
                        return dfi, parent, root, conf_u, conf_v
            else:
                top -= 1
    return dfi, parent, root, conf_u, conf_v


def greedy_fill(indptr, indices, order):
    """First-fit coloring along `order`; returns (colors, colors_used).

    `mark[c] == v` stamps color c as blocked while processing vertex v,
    so the scratch array never needs clearing between vertices.
    """
    n = indptr.shape[0] - 1
    colors = np.full(n, -1, dtype=np.int64)
    mark = np.full(n + 1, -1, dtype=np.int64)
    used = 0
    for i in range(n):
        v = order[i]
        for p in range(indptr[v], indptr[v + 1]):
            cu = colors[indices[p]]
            if cu >= 0:
                mark[cu] = v
        c = 0
        while mark[c] == v:
            c += 1
        colors[v] = c
        if c + 1 > used:
            used = c + 1
    return colors, used


def decide_step(indptr, indices, k, colors, avail, dof,
                frame_vertex, frame_color, frame_next, frame_new, frame_trail,
                trail, state, max_nodes, quota):
    """Resumable exact k-coloring search; runs at most `quota` loop steps.

    Backtracking with forward checking: `avail[v, c]` tracks colors not yet
    taken by a colored neighbor and `dof[v]` its row count (the number of
    colors still open for v); any assignment that zeroes some neighbor's
    dof is undone immediately. The branch vertex is always the uncolored
    vertex with the fewest open colors, ties broken by higher saturation
    then lower index. Color values are tried ascending, and a new color may
    only be introduced if it equals the number of colors already in use,
    which pins the first vertex to color 0 and removes palette symmetry.

    All search state lives in the caller's arrays, so the wrapper can
    interleave wall-clock checks between calls. `state` holds
    [mode, depth, assigned, colors_in_use, trail_len, nodes, backtracks,
    status]; the return value is the status code.
    """
    n = colors.shape[0]
    mode = state[0]
    depth = state[1]
    assigned = state[2]
    in_use = state[3]
    tlen = state[4]
    nodes = state[5]
    backs = state[6]
    status = RUNNING
    steps = 0
    while steps < quota:
        steps += 1
        if mode == 0:
            # pick the next branch vertex
            if assigned == n:
                status = SAT
                break
            best = -1
            best_dof = k + 1
            best_sat = -1
            for v in range(n):
                if colors[v] < 0:
                    dv = dof[v]
                    sv = k - dv
                    if dv < best_dof or (dv == best_dof and sv > best_sat):
                        best = v
                        best_dof = dv
                        best_sat = sv
            frame_vertex[depth] = best
            frame_next[depth] = 0
            frame_color[depth] = -1
            mode = 1
        else:
            v = frame_vertex[depth]
            if frame_color[depth] >= 0:
                # undo the current assignment at this depth
                c_old = frame_color[depth]
                ts = frame_trail[depth]
                for i in range(ts, tlen):
                    u = trail[i]
                    avail[u, c_old] = True
                    dof[u] += 1
                tlen = ts
                colors[v] = -1
                assigned -= 1
                if frame_new[depth] == 1:
                    in_use -= 1
                frame_color[depth] = -1
                backs += 1
            cmax = in_use + 1
            if cmax > k:
                cmax = k
            c = -1
            cc = frame_next[depth]
            while cc < cmax:
                if avail[v, cc]:
                    c = cc
                    break
                cc += 1
            if c < 0:
                # colors exhausted here: give the parent its next try
                depth -= 1
                if depth < 0:
                    status = UNSAT
                    break
                mode = 1
            else:
                if nodes >= max_nodes:
                    status = NODE_BUDGET
                    break
                nodes += 1
                frame_next[depth] = c + 1
                frame_color[depth] = c
                if c == in_use:
                    frame_new[depth] = 1
                    in_use += 1
                else:
                    frame_new[depth] = 0
                colors[v] = c
                assigned += 1
                frame_trail[depth] = tlen
                ok = True
                for p in range(indptr[v], indptr[v + 1]):
                    u = indices[p]
                    if colors[u] < 0 and avail[u, c]:
                        avail[u, c] = False
                        dof[u] -= 1
                        trail[tlen] = u
                        tlen += 1
                        if dof[u] == 0:
                            ok = False
                if ok:
                    depth += 1
                    mode = 0
                # on failure stay in mode 1: the loop top undoes and advances
    state[0] = mode
    state[1] = depth
    state[2] = assigned
    state[3] = in_use
    state[4] = tlen
    state[5] = nodes
    state[6] = backs
    state[7] = status
    return status
