# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for group enumeration and bulk point application.

Contracts match laguerre_dd.backends.pure; see that module for the
integer encodings of dual numbers, points and matrices.
"""

import numpy as np


cdef inline int dmul(int x, int y, int q, const int* mul, const int* add) noexcept nogil:
    cdef int a1 = x / q, b1 = x % q, a2 = y / q, b2 = y % q
    return mul[a1 * q + a2] * q + add[mul[a1 * q + b2] * q + mul[b1 * q + a2]]


cdef inline int dadd(int x, int y, int q, const int* add) noexcept nogil:
    cdef int a1 = x / q, b1 = x % q, a2 = y / q, b2 = y % q
    return add[a1 * q + a2] * q + add[b1 * q + b2]


cdef inline int dsub(int x, int y, int q, const int* add, const int* neg) noexcept nogil:
    cdef int a1 = x / q, b1 = x % q, a2 = y / q, b2 = y % q
    return add[a1 * q + neg[a2]] * q + add[b1 * q + neg[b2]]


cdef inline int dinv(int x, int q, const int* mul, const int* inv, const int* neg) noexcept nogil:
    cdef int a = x / q, b = x % q
    cdef int ia = inv[a]
    return ia * q + neg[mul[mul[ia * q + ia] * q + b]]


def enumerate_group_rows(int q, fadd, fmul, finv, fneg):
    cdef int[:, ::1] addm = np.ascontiguousarray(fadd, dtype=np.int32)
    cdef int[:, ::1] mulm = np.ascontiguousarray(fmul, dtype=np.int32)
    cdef int[::1] invm = np.ascontiguousarray(finv, dtype=np.int32)
    cdef int[::1] negm = np.ascontiguousarray(fneg, dtype=np.int32)
    cdef const int* add = &addm[0, 0]
    cdef const int* mul = &mulm[0, 0]
    cdef const int* inv = &invm[0]
    cdef const int* neg = &negm[0]

    cdef int qq = q * q
    cdef int v = qq + q
    cdef long long n_expected = (<long long> q) ** 4 * (qq - 1)
    out_arr = np.empty((n_expected, 4), dtype=np.int32)
    cdef int[:, ::1] out = out_arr

    x1s_arr = np.empty(v, dtype=np.int32)
    x2s_arr = np.empty(v, dtype=np.int32)
    cls_arr = np.empty(v, dtype=np.int32)
    cdef int[::1] x1s = x1s_arr
    cdef int[::1] x2s = x2s_arr
    cdef int[::1] cls = cls_arr
    cdef int pid
    for pid in range(v):
        if pid < qq:
            x1s[pid] = pid
            x2s[pid] = q  # dual one
            cls[pid] = pid / q
        else:
            x1s[pid] = q
            x2s[pid] = pid - qq
            cls[pid] = q

    cdef long long row = 0
    cdef int pid1, pid2, pid3, c1, c2, c3
    cdef int p1, q1, p2, q2, p3, q3
    cdef int idelta, l1, l2, a, b, c, d, u, iu
    with nogil:
        for pid1 in range(v):
            c1 = cls[pid1]
            p1 = x1s[pid1]
            q1 = x2s[pid1]
            for pid2 in range(v):
                c2 = cls[pid2]
                if c2 == c1:
                    continue
                p2 = x1s[pid2]
                q2 = x2s[pid2]
                idelta = dinv(
                    dsub(dmul(p1, q2, q, mul, add), dmul(p2, q1, q, mul, add), q, add, neg),
                    q, mul, inv, neg)
                for pid3 in range(v):
                    c3 = cls[pid3]
                    if c3 == c1 or c3 == c2:
                        continue
                    p3 = x1s[pid3]
                    q3 = x2s[pid3]
                    l1 = dmul(
                        dsub(dmul(p3, q2, q, mul, add), dmul(p2, q3, q, mul, add), q, add, neg),
                        idelta, q, mul, add)
                    l2 = dmul(
                        dsub(dmul(p1, q3, q, mul, add), dmul(p3, q1, q, mul, add), q, add, neg),
                        idelta, q, mul, add)
                    a = dmul(l1, p1, q, mul, add)
                    b = dmul(l1, q1, q, mul, add)
                    c = dmul(l2, p2, q, mul, add)
                    d = dmul(l2, q2, q, mul, add)
                    u = a if a >= q else (b if b >= q else (c if c >= q else d))
                    iu = dinv(u, q, mul, inv, neg)
                    out[row, 0] = dmul(a, iu, q, mul, add)
                    out[row, 1] = dmul(b, iu, q, mul, add)
                    out[row, 2] = dmul(c, iu, q, mul, add)
                    out[row, 3] = dmul(d, iu, q, mul, add)
                    row += 1
    return out_arr


def point_images(int q, fadd, fmul, finv, fneg, rows, point_ids):
    cdef int[:, ::1] addm = np.ascontiguousarray(fadd, dtype=np.int32)
    cdef int[:, ::1] mulm = np.ascontiguousarray(fmul, dtype=np.int32)
    cdef int[::1] invm = np.ascontiguousarray(finv, dtype=np.int32)
    cdef int[::1] negm = np.ascontiguousarray(fneg, dtype=np.int32)
    cdef const int* add = &addm[0, 0]
    cdef const int* mul = &mulm[0, 0]
    cdef const int* inv = &invm[0]
    cdef const int* neg = &negm[0]

    cdef int[:, ::1] mats = np.ascontiguousarray(rows, dtype=np.int32)
    pid_arr = np.ascontiguousarray(point_ids, dtype=np.int32)
    cdef int[::1] pids = pid_arr

    cdef int qq = q * q
    cdef Py_ssize_t n = mats.shape[0]
    cdef Py_ssize_t m = pids.shape[0]
    out_arr = np.empty((n, m), dtype=np.int32)
    cdef int[:, ::1] out = out_arr

    x1_arr = np.empty(m, dtype=np.int32)
    x2_arr = np.empty(m, dtype=np.int32)
    cdef int[::1] x1s = x1_arr
    cdef int[::1] x2s = x2_arr
    cdef Py_ssize_t j
    for j in range(m):
        if pids[j] < qq:
            x1s[j] = pids[j]
            x2s[j] = q
        else:
            x1s[j] = q
            x2s[j] = pids[j] - qq

    cdef Py_ssize_t i
    cdef int a, b, c, d, x1, x2, y1, y2
    with nogil:
        for i in range(n):
            a = mats[i, 0]
            b = mats[i, 1]
            c = mats[i, 2]
            d = mats[i, 3]
            for j in range(m):
                x1 = x1s[j]
                x2 = x2s[j]
                y1 = dadd(dmul(x1, a, q, mul, add), dmul(x2, c, q, mul, add), q, add)
                y2 = dadd(dmul(x1, b, q, mul, add), dmul(x2, d, q, mul, add), q, add)
                if y2 >= q:
                    out[i, j] = dmul(y1, dinv(y2, q, mul, inv, neg), q, mul, add)
                else:
                    out[i, j] = qq + dmul(y2, dinv(y1, q, mul, inv, neg), q, mul, add)
    return out_arr
