"""Time the compiled window kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 16384] [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit
from array import array

from goialg import _kernels_py, expr as ex, oracle
from goialg._accel import pack_graph, pack_pieces
from goialg.traced import decompose

try:
    from goialg import _kernels
except ImportError:  # no compiler at install time
    _kernels = None


def workloads(n):
    f = ex.evaluate(ex.parse("(id # V) o T' o (D # id)"))
    g = ex.evaluate(ex.parse("t . (s * t') . x3"))
    pieces = pack_pieces(f)
    word = oracle.word_codes(["τ", "p‡", "σ", "τ′", "q", "τ", "σ", "p‡"])
    m = decompose(ex.evaluate(ex.parse("t . (t * s) . t'")))
    edges = {("in", "out"): m.f00, ("in", "u"): m.f10, ("u", "out"): m.f01, ("u", "u"): m.f11}
    graph = pack_graph(["in", "u", "out"], edges, ["in"], ["out"])
    gp, fl, st, ins, kinds = graph
    wg = array("q", oracle.truncate(g, n).codes)
    wf = array("q", oracle.truncate(f, n).codes)
    return {
        "window_apply": lambda k: k.window_apply(pieces, n),
        "word_window": lambda k: k.word_window(word, n),
        "token_window": lambda k: k.token_window(gp, fl, st, len(ins), ins, kinds, n, 1024),
        "square_window": lambda k: k.square_window(wg, wf, oracle._INT_TABLE, n, 1024),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1 << 14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"window n = {args.n}, best of {args.repeat}")
    print(f"{'kernel':14s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, job in workloads(args.n).items():
        py = min(timeit.repeat(lambda: job(_kernels_py), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:14s} {py:10.1f} {'-':>10s} {'-':>8s}")
            continue
        assert job(_kernels) == job(_kernels_py), name
        cy = min(timeit.repeat(lambda: job(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:14s} {py:10.1f} {cy:10.2f} {py / cy:7.0f}x")


if __name__ == "__main__":
    main()
