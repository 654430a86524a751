"""Benchmark the jitted scoring kernel against the pure-numpy fallback.

Builds a synthetic corpus, then times full top-1000 retrieval for a
batch of queries through each kernel path. Run:

    python benchmarks/bench_bm25.py [--docs 20000] [--queries 300]

The pure-numpy path is also selectable package-wide with QARANK_NUMBA=0.
"""
import argparse
import time

import numpy as np

import qarank.bm25.kernels as kernels
from qarank.bm25 import InvertedIndex
from qarank.bm25.search import _query_tids, _topk_arrays
from qarank.types import Bm25Params, Collection, Document


def make_corpus(n_docs: int, vocab_size: int = 20000, seed: int = 0) -> Collection:
    rng = np.random.default_rng(seed)
    vocab = np.array([f"w{i}" for i in range(vocab_size)], dtype=object)
    weights = 1.0 / np.arange(1, vocab_size + 1) ** 1.1
    weights /= weights.sum()
    docs = [
        Document(f"d{i}", " ".join(rng.choice(vocab, size=rng.integers(40, 240), p=weights)))
        for i in range(n_docs)
    ]
    return Collection(docs)


def make_queries(n: int, vocab_size: int = 20000, seed: int = 1) -> list[list[str]]:
    rng = np.random.default_rng(seed)
    return [
        [f"w{i}" for i in rng.integers(0, vocab_size, size=rng.integers(2, 8))]
        for _ in range(n)
    ]


def run_batch(index, queries, kernel, params=Bm25Params()):
    scores = np.zeros(index.N)
    norm = index.norm(params.k1, params.b)
    total_entries = 0
    for terms in queries:
        tids = _query_tids(index, terms)
        scores[:] = 0.0
        if tids.size:
            rsj = index.rsj(index.df[tids].astype(np.float64))
            kernel(index.offsets, index.post_docs, index.post_tf, tids, rsj, norm, scores)
        cand = np.flatnonzero(scores > 0.0)
        order = np.lexsort((index.tie_rank[cand], -scores[cand]))[:1000]
        total_entries += order.size
    return total_entries


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--docs", type=int, default=20000)
    ap.add_argument("--queries", type=int, default=300)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"building corpus: {args.docs} docs...")
    coll = make_corpus(args.docs)
    t0 = time.time()
    index = InvertedIndex.build(coll)
    print(f"indexed {index.N} docs / {len(index.terms)} terms in {time.time() - t0:.1f}s")
    queries = make_queries(args.queries)

    paths = [("numpy-fallback", kernels.accumulate_scores_numpy)]
    if kernels.NUMBA_ENABLED:
        kernels.warmup()
        paths.append(("numba-jit", kernels.accumulate_scores))
    else:
        print("numba unavailable or disabled (QARANK_NUMBA=0): timing fallback only")

    results = {}
    for name, kernel in paths:
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.time()
            run_batch(index, queries, kernel)
            best = min(best, time.time() - t0)
        results[name] = best
        qps = args.queries / best
        print(f"{name:16s} {best:7.3f}s for {args.queries} queries ({qps:8.1f} q/s)")
    if len(results) == 2:
        speedup = results["numpy-fallback"] / results["numba-jit"]
        print(f"numba speedup: {speedup:.2f}x")


if __name__ == "__main__":
    main()
