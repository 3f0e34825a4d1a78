# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; mirrors ``_pykernels`` exactly."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def enumerate_minors(Py_ssize_t n, gamma):
    cdef const i64[::1] b = np.ascontiguousarray(gamma, dtype=np.int64)
    cdef Py_ssize_t m = b.shape[0]
    cdef Py_ssize_t total = _count(n, b)
    out_arr = np.empty((total, m), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    cdef i64[::1] c = np.array(b, dtype=np.int64)
    cdef Py_ssize_t r = 0, j, k
    while True:
        for k in range(m):
            out[r, k] = c[k]
        r += 1
        j = m - 1
        while j >= 0 and c[j] == n - (m - 1 - j):
            j -= 1
        if j < 0:
            break
        c[j] += 1
        for k in range(j + 1, m):
            c[k] = b[k] if b[k] > c[k - 1] + 1 else c[k - 1] + 1
    return out_arr


cdef Py_ssize_t _count(Py_ssize_t n, const i64[::1] b):
    cdef i64[:, ::1] cnt = _completion_table(n, b)
    cdef Py_ssize_t v, total = 0
    for v in range(b[0], n + 1):
        total += cnt[0, v]
    return total


cdef i64[:, ::1] _completion_table(Py_ssize_t n, const i64[::1] b):
    # cnt[j, v]: ways to fill positions j+1..m-1 given entry j equals v
    cdef Py_ssize_t m = b.shape[0], j, v, lo
    cdef i64[:, ::1] cnt = np.zeros((m, n + 2), dtype=np.int64)
    cdef i64[::1] suffix = np.zeros(n + 2, dtype=np.int64)
    for v in range(b[m - 1], n + 1):
        cnt[m - 1, v] = 1
    for j in range(m - 2, -1, -1):
        suffix[n + 1] = 0
        for v in range(n, 0, -1):
            suffix[v] = suffix[v + 1] + cnt[j + 1, v]
        for v in range(b[j], n + 1):
            lo = v + 1 if v + 1 > b[j + 1] else b[j + 1]
            cnt[j, v] = suffix[lo] if lo <= n else 0
    return cnt


def cover_edges(Py_ssize_t n, gamma, entries):
    cdef const i64[::1] b = np.ascontiguousarray(gamma, dtype=np.int64)
    cdef const i64[:, ::1] e = np.ascontiguousarray(entries, dtype=np.int64)
    cdef Py_ssize_t size = e.shape[0], m = e.shape[1]
    cdef i64[:, ::1] cnt = _completion_table(n, b)
    cdef Py_ssize_t r, i, v, limit, count = 0
    cdef i64 target
    # each element has at most m upper covers
    out_arr = np.empty((size * m, 2), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    for r in range(size):
        # descending i yields ascending upper rank
        for i in range(m - 1, -1, -1):
            v = e[r, i] + 1
            limit = e[r, i + 1] if i + 1 < m else n + 1
            if v >= limit:
                continue
            # rank shift: skip the block with entry i == e[r, i]; if position
            # i+1's lower bound rises, drop the block it loses
            target = r + cnt[i, e[r, i]]
            if i + 1 < m and v >= b[i + 1]:
                target -= cnt[i + 1, v]
            out[count, 0] = r
            out[count, 1] = target
            count += 1
    return out_arr[:count].copy()


def chain_lengths(Py_ssize_t size, edges):
    cdef const i64[:, ::1] ed = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    cdef Py_ssize_t ne = ed.shape[0], k, x, y
    longest_arr = np.zeros(size, dtype=np.int64)
    shortest_arr = np.zeros(size, dtype=np.int64)
    cdef i64[::1] longest = longest_arr
    cdef i64[::1] shortest = shortest_arr
    cdef i64[::1] seen = np.zeros(size, dtype=np.int64)
    # edges sorted by lower index; sweep from the back
    for k in range(ne - 1, -1, -1):
        x = ed[k, 0]
        y = ed[k, 1]
        if seen[x] == 0:
            longest[x] = longest[y] + 1
            shortest[x] = shortest[y] + 1
            seen[x] = 1
        else:
            if longest[y] + 1 > longest[x]:
                longest[x] = longest[y] + 1
            if shortest[y] + 1 < shortest[x]:
                shortest[x] = shortest[y] + 1
    return longest_arr, shortest_arr


def induced_covers(entries):
    cdef const i64[:, ::1] e = np.ascontiguousarray(entries, dtype=np.int64)
    cdef Py_ssize_t k = e.shape[0], m = e.shape[1]
    cdef Py_ssize_t i, j, l, t, na
    cdef bint between
    above_arr = np.empty(k, dtype=np.int64)
    cdef i64[::1] above = above_arr
    edges = []
    for i in range(k):
        na = 0
        for j in range(i + 1, k):
            if _leq(e, i, j, m):
                above[na] = j
                na += 1
        for t in range(na):
            j = above[t]
            between = False
            for l in range(t):
                if _leq(e, above[l], j, m):
                    between = True
                    break
            if not between:
                edges.append((i, j))
    return np.array(edges, dtype=np.int64).reshape(len(edges), 2)


cdef inline bint _leq(const i64[:, ::1] e, Py_ssize_t a, Py_ssize_t b, Py_ssize_t m):
    cdef Py_ssize_t t
    for t in range(m):
        if e[a, t] > e[b, t]:
            return False
    return True
