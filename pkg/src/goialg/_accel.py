"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``GOIALG_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

kernels = _kernels_py
COMPILED = False
if os.environ.get("GOIALG_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        kernels = _compiled
        COMPILED = True
    except ImportError:
        pass

CAP = _kernels_py.CAP


def _clamp_piece(pc) -> tuple:
    d, r, e, s = pc
    if d > 62:
        # only n == r can match for n < CAP
        d, r = 62, (r if r < CAP else -1)
    return d, r, min(e, 41), min(s, CAP)


def pack_pieces(f, into: array | None = None) -> array:
    buf = array("q") if into is None else into
    for pc in f.pieces:
        buf.extend(_clamp_piece(pc))
    return buf


def pack_graph(nodes: list, edges: dict, inputs: list, outputs: list):
    """Flatten a labelled digraph for :func:`token_window`.

    ``edges`` maps ``(u, v)`` to a DyadicPInj; ``outputs`` lists output nodes in slot order.
    """
    index = {name: k for k, name in enumerate(nodes)}
    pieces = array("q")
    flat = array("q")
    starts = array("q", [0])
    for name in nodes:
        for (u, v), label in edges.items():
            if u != name or not label.pieces:
                continue
            lo = len(pieces)
            pack_pieces(label, pieces)
            flat.extend((index[v], lo, len(pieces)))
        starts.append(len(flat) // 3)
    kinds = array("q", [-1] * len(nodes))
    for slot, name in enumerate(outputs):
        kinds[index[name]] = slot
    return pieces, flat, starts, array("q", [index[x] for x in inputs]), kinds
