# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; see ``_kernels_py`` for the reference implementation."""

from libc.stdint cimport int64_t

cdef enum:
    UNDEF = -1
    OUT = -2
    STEPS = -3
    NONDET = -4

cdef int64_t CAP = <int64_t>1 << 41


cdef inline int64_t _apply(const int64_t[:] pieces, Py_ssize_t lo, Py_ssize_t hi, int64_t n) nogil:
    cdef Py_ssize_t i = lo
    cdef int64_t d, e, q
    while i < hi:
        d = pieces[i]
        if (n & ((<int64_t>1 << d) - 1)) == pieces[i + 1]:
            q = n >> d
            if q == 0:
                return pieces[i + 3]
            e = pieces[i + 2]
            if e >= 41 or q >= (CAP >> e):
                return CAP
            return (q << e) + pieces[i + 3]
        i += 4
    return UNDEF


def window_apply(const int64_t[:] pieces, Py_ssize_t n_window):
    cdef list out = [UNDEF] * n_window
    cdef Py_ssize_t n, hi = pieces.shape[0]
    cdef int64_t v
    for n in range(n_window):
        v = _apply(pieces, 0, hi, n)
        if v >= n_window:
            v = OUT
        out[n] = v
    return out


cdef inline int64_t _step(int code, int64_t n) nogil:
    if code == 0:
        return n >> 1 if (n & 1) == 0 else UNDEF
    if code == 1:
        return n >> 1 if (n & 1) else UNDEF
    if code == 2:
        return n << 1
    if code == 3:
        return (n << 1) | 1
    if code == 4:
        return n + 1 if (n & 1) == 0 else n - 1
    if code == 5:
        if (n & 1) == 0:
            return n << 1
        return n + 1 if (n & 3) == 1 else (n - 1) >> 1
    if code == 6:
        if n & 1:
            return (n << 1) | 1
        return n >> 1 if (n & 3) == 0 else n - 1
    if code == 7:
        return n
    return UNDEF


def word_window(const int64_t[:] codes, Py_ssize_t n_window):
    cdef list out = [UNDEF] * n_window
    cdef Py_ssize_t n, k, m = codes.shape[0]
    cdef int64_t v
    for n in range(n_window):
        v = n
        for k in range(m):
            v = _step(<int>codes[k], v)
            if v < 0:
                break
            if v >= CAP:
                v = OUT
                break
        out[n] = v
    return out


def token_window(const int64_t[:] pieces, const int64_t[:] edges, const int64_t[:] node_start,
                 Py_ssize_t n_inputs, const int64_t[:] input_nodes, const int64_t[:] output_kind,
                 Py_ssize_t n_window, int64_t step_bound):
    cdef Py_ssize_t n_outputs = 0, k, j, x
    cdef int64_t node, val, steps, code, slot, nxt_node, nxt_val, v
    for k in range(output_kind.shape[0]):
        if output_kind[k] >= 0:
            n_outputs += 1
    cdef list out = [UNDEF] * n_window
    for x in range(n_window):
        node = input_nodes[x % n_inputs]
        val = x // n_inputs
        steps = 0
        while True:
            slot = output_kind[node]
            if slot >= 0:
                code = val * n_outputs + slot
                if code >= n_window:
                    code = OUT
                break
            if steps >= step_bound:
                code = STEPS
                break
            steps += 1
            nxt_node = -1
            nxt_val = UNDEF
            for j in range(node_start[node], node_start[node + 1]):
                v = _apply(pieces, edges[3 * j + 1], edges[3 * j + 2], val)
                if v >= 0:
                    if nxt_node >= 0:
                        return NONDET, x
                    nxt_node = edges[3 * j]
                    nxt_val = v
            if nxt_node < 0:
                code = UNDEF
                break
            if nxt_val >= CAP:
                code = OUT
                break
            node = nxt_node
            val = nxt_val
        out[x] = code
    return out, -1


def square_window(const int64_t[:] g, const int64_t[:] f, const int64_t[:] table,
                  Py_ssize_t n_window, int64_t step_bound):
    cdef list out = [UNDEF] * n_window
    cdef Py_ssize_t x
    cdef int64_t node, val, steps, code, idx, r, which
    for x in range(n_window):
        node = x & 1
        val = x >> 1
        steps = 0
        while True:
            if node >= 4:
                code = 2 * val + (node - 4)
                if code >= n_window:
                    code = OUT
                break
            if steps >= step_bound:
                code = STEPS
                break
            steps += 1
            which = table[4 * node]
            idx = 2 * val + table[4 * node + 1]
            if idx >= n_window:
                code = OUT
                break
            r = g[idx] if which == 0 else f[idx]
            if r < 0:
                code = r if r != STEPS else OUT
                break
            node = table[4 * node + 3] if (r & 1) else table[4 * node + 2]
            val = r >> 1
        out[x] = code
    return out
