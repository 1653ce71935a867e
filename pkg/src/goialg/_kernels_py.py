"""Pure-Python kernels; same contract as the compiled ``_kernels`` module.

Pieces arrive as flat ``array('q')`` quadruples ``d, r, e, s`` already clamped
by :func:`goialg._accel.pack_pieces`.  Window codes: ``>= 0`` a value,
``UNDEF`` undefined, ``OUT`` out of window, ``STEPS`` step bound exceeded.
"""

UNDEF = -1
OUT = -2
STEPS = -3
NONDET = -4

CAP = 1 << 41

# generator codes for the stepwise word evaluator
P, Q, PD, QD, SIG, TAU, TAUI, ID, ZERO = range(9)


def _apply(pieces, lo, hi, n):
    i = lo
    while i < hi:
        d = pieces[i]
        if (n & ((1 << d) - 1)) == pieces[i + 1]:
            q = n >> d
            if q == 0:
                return pieces[i + 3]
            e = pieces[i + 2]
            if e >= 41 or q >= (CAP >> e):
                return CAP
            return (q << e) + pieces[i + 3]
        i += 4
    return UNDEF


def window_apply(pieces, n_window):
    out = [UNDEF] * n_window
    hi = len(pieces)
    for n in range(n_window):
        v = _apply(pieces, 0, hi, n)
        if v >= n_window:
            v = OUT
        out[n] = v
    return out


def _step(code, n):
    if code == P:
        return n >> 1 if n & 1 == 0 else UNDEF
    if code == Q:
        return n >> 1 if n & 1 else UNDEF
    if code == PD:
        return n << 1
    if code == QD:
        return (n << 1) | 1
    if code == SIG:
        return n + 1 if n & 1 == 0 else n - 1
    if code == TAU:
        if n & 1 == 0:
            return n << 1
        return n + 1 if n & 3 == 1 else (n - 1) >> 1
    if code == TAUI:
        if n & 1:
            return (n << 1) | 1
        return n >> 1 if n & 3 == 0 else n - 1
    if code == ID:
        return n
    return UNDEF


def word_window(codes, n_window):
    """Evaluate a word (codes in application order) at every ``n < n_window``."""
    out = [UNDEF] * n_window
    for n in range(n_window):
        v = n
        for c in codes:
            v = _step(c, v)
            if v < 0:
                break
            if v >= CAP:
                v = OUT
                break
        out[n] = v
    return out


def token_window(pieces, edges, node_start, n_inputs, input_nodes, output_kind,
                 n_window, step_bound):
    """Bounce one token per window point through a digraph labelled by pieces.

    ``edges`` is a flat array of ``(dst, lo, hi)`` triples into ``pieces``;
    node k's out-edges are ``edges[node_start[k]*3 : node_start[k+1]*3]``.
    Point x enters at ``input_nodes[x % n_inputs]`` with value ``x // n_inputs``;
    ``output_kind[k]`` is -1 for internal nodes, otherwise the output slot,
    and the final value is ``m * n_outputs + slot``.
    """
    n_outputs = sum(1 for k in output_kind if k >= 0)
    out = [UNDEF] * n_window
    for x in range(n_window):
        node = input_nodes[x % n_inputs]
        val = x // n_inputs
        steps = 0
        code = UNDEF
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
            node, val = nxt_node, nxt_val
        out[x] = code
    return out, -1


def square_window(g, f, table, n_window, step_bound):
    """Token simulation of a composite of two endomorphisms known only on a window.

    ``table`` has one row ``(which, col, dst0, dst1)`` per node 0..3 (node 0
    takes even points, node 1 odd ones); nodes 4 and 5 are the output slots
    0 and 1.  A node reads ``(g, f)[which]`` at ``2v + col`` and moves to
    ``dst0`` or ``dst1`` by the parity of the result.
    """
    out = [UNDEF] * n_window
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
            which, col, dst0, dst1 = table[4 * node], table[4 * node + 1], table[4 * node + 2], table[4 * node + 3]
            idx = 2 * val + col
            if idx >= n_window:
                code = OUT
                break
            r = (g if which == 0 else f)[idx]
            if r < 0:
                code = r if r != STEPS else OUT
                break
            node = dst1 if r & 1 else dst0
            val = r >> 1
        out[x] = code
    return out
