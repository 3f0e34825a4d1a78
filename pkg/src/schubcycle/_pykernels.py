"""Pure-Python versions of the enumeration kernels.

Same signatures and outputs as the compiled ``_ckernels`` module; used when
the extension is not built or when ``SCHUBCYCLE_BACKEND=python``.
"""

import numpy as np


def enumerate_minors(n, gamma):
    """All minors >= gamma with entries <= n, in lexicographic order."""
    b = [int(x) for x in gamma]
    m = len(b)
    c = list(b)
    rows = [tuple(c)]
    while True:
        j = m - 1
        while j >= 0 and c[j] == n - (m - 1 - j):
            j -= 1
        if j < 0:
            break
        c[j] += 1
        for k in range(j + 1, m):
            c[k] = max(b[k], c[k - 1] + 1)
        rows.append(tuple(c))
    return np.array(rows, dtype=np.int64).reshape(len(rows), m)


def cover_edges(n, gamma, entries):
    """Upper covers of every element: raise one entry by one where legal.

    Edges come out sorted by (lower, upper) index.
    """
    index = {tuple(row): k for k, row in enumerate(entries.tolist())}
    m = entries.shape[1]
    edges = []
    for r, row in enumerate(entries.tolist()):
        ups = []
        for i in range(m):
            v = row[i] + 1
            limit = row[i + 1] if i + 1 < m else n + 1
            if v < limit:
                up = list(row)
                up[i] = v
                ups.append(index[tuple(up)])
        ups.sort()
        edges.extend((r, u) for u in ups)
    return np.array(edges, dtype=np.int64).reshape(len(edges), 2)


def chain_lengths(size, edges):
    """Longest and shortest cover-path lengths from each element to a maximal one.

    Requires every edge (lo, hi) to satisfy lo < hi.
    """
    up = [[] for _ in range(size)]
    for lo, hi in edges.tolist():
        up[lo].append(hi)
    longest = [0] * size
    shortest = [0] * size
    for x in range(size - 1, -1, -1):
        if up[x]:
            longest[x] = 1 + max(longest[y] for y in up[x])
            shortest[x] = 1 + min(shortest[y] for y in up[x])
    return np.array(longest, dtype=np.int64), np.array(shortest, dtype=np.int64)


def induced_covers(entries):
    """Cover relation of the componentwise order restricted to ``entries``.

    ``entries`` must be lexicographically sorted, which makes index order a
    linear extension.
    """
    rows = [tuple(r) for r in entries.tolist()]
    k = len(rows)
    edges = []
    for i in range(k):
        above = [j for j in range(i + 1, k) if all(x <= y for x, y in zip(rows[i], rows[j]))]
        for pos, j in enumerate(above):
            if not any(
                all(x <= y for x, y in zip(rows[l], rows[j])) for l in above[:pos]
            ):
                edges.append((i, j))
    return np.array(edges, dtype=np.int64).reshape(len(edges), 2)
