# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two cubic inner loops.

Contracts match ``_pure`` exactly; see that module for the semantics.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline int _find(cnp.int32_t* parent, int i) nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


cdef inline void _union(cnp.int32_t* parent, cnp.int32_t* rank,
                        int a, int b) nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    if ra == rb:
        return
    if rank[ra] < rank[rb]:
        ra, rb = rb, ra
    parent[rb] = ra
    if rank[ra] == rank[rb]:
        rank[ra] += 1


def class_labels(cnp.uint8_t[:, ::1] adj):
    cdef int n = adj.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] parent_arr = \
        np.arange(n * n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] rank_arr = \
        np.zeros(n * n, dtype=np.int32)
    cdef cnp.int32_t* parent = <cnp.int32_t*> parent_arr.data
    cdef cnp.int32_t* rank = <cnp.int32_t*> rank_arr.data
    cdef int x, y, z, p
    cdef cnp.uint8_t axy, ayx
    with nogil:
        for x in range(n):
            for y in range(n):
                if x == y or (adj[x, y] == 0 and adj[y, x] == 0):
                    continue
                p = x * n + y
                axy = adj[x, y]
                ayx = adj[y, x]
                for z in range(n):
                    if z != y:
                        # shared first coordinate: (x,y) forces (x,z)
                        if (ayx and adj[x, z] and not adj[y, z]) or \
                           (adj[z, x] and axy and not adj[z, y]):
                            _union(parent, rank, p, x * n + z)
                    if z != x:
                        # shared second coordinate: (x,y) forces (z,y)
                        if (axy and adj[y, z] and not adj[x, z]) or \
                           (adj[z, y] and ayx and not adj[z, x]):
                            _union(parent, rank, p, z * n + y)
    # relabel roots in lexicographic order of each class's smallest pair
    cdef cnp.ndarray[cnp.int32_t, ndim=1] labels_arr = \
        np.full(n * n, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] labels = labels_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] root_label_arr = \
        np.full(n * n, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] root_label = root_label_arr
    cdef int next_label = 0, r
    for x in range(n):
        for y in range(n):
            if x == y or (adj[x, y] == 0 and adj[y, x] == 0):
                continue
            p = x * n + y
            r = _find(parent, p)
            if root_label[r] < 0:
                root_label[r] = next_label
                next_label += 1
            labels[p] = root_label[r]
    return labels_arr


def compose_scan(cnp.uint8_t[:, ::1] adj, cnp.int32_t[::1] labels,
                 cnp.uint8_t[:, ::1] t, cnp.int32_t[::1] new_pairs,
                 cnp.uint8_t[::1] in_pool, cnp.uint8_t[::1] enqueued):
    cdef int n = adj.shape[0]
    cdef int k = new_pairs.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out_arr = \
        np.empty(in_pool.shape[0], dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef int count = 0
    cdef int i, a, b, z
    cdef cnp.int32_t lab
    with nogil:
        for i in range(k):
            a = new_pairs[i] / n
            b = new_pairs[i] % n
            for z in range(n):
                if t[b, z] and z != a and (adj[a, z] or adj[z, a]):
                    lab = labels[a * n + z]
                    if in_pool[lab] and not enqueued[lab]:
                        enqueued[lab] = 1
                        out[count] = lab
                        count += 1
                if t[z, a] and z != b and (adj[z, b] or adj[b, z]):
                    lab = labels[z * n + b]
                    if in_pool[lab] and not enqueued[lab]:
                        enqueued[lab] = 1
                        out[count] = lab
                        count += 1
    return out_arr[:count].copy()
