"""Summing over paths in a finite digraph labelled by partial injections.

Trace, horizontal (Int) composition and vertical (GoI) composition of rook
squares are all instances: a few boundary nodes, a few internal feedback
nodes, and the answer for each (input, output) pair is the union over all
paths between them of the composite of the edge labels.
"""

from __future__ import annotations

import os

from .dyadic import ONE, ZERO, DyadicPInj, compose, union
from .errors import TraceDivergence

DEFAULT_MAX_ITER = 256


def default_max_iter() -> int:
    """Iteration bound for feedback sums; ``GOI_MAX_ITER`` overrides it."""
    raw = os.environ.get("GOI_MAX_ITER")
    if raw is None or raw == "":
        return DEFAULT_MAX_ITER
    value = int(raw)
    if value < 0:
        raise ValueError("GOI_MAX_ITER must be a natural number")
    return value


def sum_paths(edges, inputs, outputs, max_iter=None):
    """Return ``{(src, dst): DyadicPInj}`` for every input src and output dst.

    ``edges`` maps ``(u, v)`` to the partial injection carried from node u to
    node v.  Inputs must have no incoming edges and outputs no outgoing ones.
    The walk stops once no token is left on an internal node; if tokens are
    still circulating after ``max_iter`` rounds, :class:`TraceDivergence` is
    raised.  Unions of distinct paths are checked to be disjoint, so a
    non-rook labelling surfaces as :class:`NotDisjoint`.
    """
    if max_iter is None:
        max_iter = default_max_iter()
    out_edges: dict = {}
    for (u, v), label in edges.items():
        if label.pieces:
            out_edges.setdefault(u, []).append((v, label))
    outputs = set(outputs)
    result = {}
    for src in inputs:
        acc = {dst: ZERO for dst in outputs}
        frontier = {src: ONE}
        rounds = 0
        while frontier:
            if rounds > max_iter:
                raise TraceDivergence(max_iter)
            rounds += 1
            nxt: dict[object, DyadicPInj] = {}
            for node, state in frontier.items():
                for dst, label in out_edges.get(node, ()):
                    moved = compose(label, state)
                    if not moved.pieces:
                        continue
                    if dst in outputs:
                        acc[dst] = union(acc[dst], moved)
                    else:
                        nxt[dst] = union(nxt[dst], moved) if dst in nxt else moved
            frontier = nxt
        for dst in outputs:
            result[(src, dst)] = acc[dst]
    return result
