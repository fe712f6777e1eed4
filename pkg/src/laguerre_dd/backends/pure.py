"""Pure-Python kernels: reference implementation of the two hot loops.

Same contracts as the compiled backend (`_fastcore`):

* enumerate_group_rows -- all canonical 2x2 projectivity matrices over
  D(GF(q)), one per ordered transversal point triple, as dual-number
  encodings (row-major a,b,c,d).
* point_images -- image point ids of a fixed id list under every matrix.

Dual numbers, points and matrices are plain integers throughout: a dual
number (a, b) is a*q + b; point ids < q^2 are proper points (id = the
encoding of the representative), the rest improper.  Field arithmetic
comes in as lookup tables.
"""

from __future__ import annotations

from array import array

import numpy as np


def _as_lists(fadd, fmul, finv, fneg):
    return (
        [list(r) for r in np.asarray(fadd)],
        [list(r) for r in np.asarray(fmul)],
        list(np.asarray(finv)),
        list(np.asarray(fneg)),
    )


def _point_pairs(q: int) -> tuple[list[int], list[int]]:
    """Representative pair (x1, x2) per point id, as dual encodings."""
    qq = q * q
    one = q  # dual (1, 0)
    x1s = [pid for pid in range(qq)] + [one] * q
    x2s = [one] * qq + [d for d in range(q)]  # improper: (0, d) encodes as d
    return x1s, x2s


def enumerate_group_rows(q, fadd, fmul, finv, fneg):
    add, mul, inv, neg = _as_lists(fadd, fmul, finv, fneg)
    qq = q * q
    v = qq + q
    x1s, x2s = _point_pairs(q)
    cls = [pid // q for pid in range(qq)] + [q] * q

    def dmul(x, y):
        a1, b1 = divmod(x, q)
        a2, b2 = divmod(y, q)
        return mul[a1][a2] * q + add[mul[a1][b2]][mul[b1][a2]]

    def dsub(x, y):
        a1, b1 = divmod(x, q)
        a2, b2 = divmod(y, q)
        return add[a1][neg[a2]] * q + add[b1][neg[b2]]

    def dinv(x):
        a, b = divmod(x, q)
        ia = inv[a]
        return ia * q + neg[mul[mul[ia][ia]][b]]

    out = array("i")
    append = out.extend
    for pid1 in range(v):
        c1 = cls[pid1]
        p1, q1 = x1s[pid1], x2s[pid1]
        for pid2 in range(v):
            c2 = cls[pid2]
            if c2 == c1:
                continue
            p2, q2 = x1s[pid2], x2s[pid2]
            idelta = dinv(dsub(dmul(p1, q2), dmul(p2, q1)))
            for pid3 in range(v):
                c3 = cls[pid3]
                if c3 == c1 or c3 == c2:
                    continue
                p3, q3 = x1s[pid3], x2s[pid3]
                l1 = dmul(dsub(dmul(p3, q2), dmul(p2, q3)), idelta)
                l2 = dmul(dsub(dmul(p1, q3), dmul(p3, q1)), idelta)
                a = dmul(l1, p1)
                b = dmul(l1, q1)
                c = dmul(l2, p2)
                d = dmul(l2, q2)
                u = a if a >= q else (b if b >= q else (c if c >= q else d))
                iu = dinv(u)
                append((dmul(a, iu), dmul(b, iu), dmul(c, iu), dmul(d, iu)))
    return np.frombuffer(out, dtype=np.int32).reshape(-1, 4).copy()


def point_images(q, fadd, fmul, finv, fneg, rows, point_ids):
    add, mul, inv, neg = _as_lists(fadd, fmul, finv, fneg)
    qq = q * q
    x1s, x2s = _point_pairs(q)
    pids = list(np.asarray(point_ids))
    pairs = [(x1s[p], x2s[p]) for p in pids]
    flat = np.ascontiguousarray(rows, dtype=np.int32).ravel().tolist()

    def dmul(x, y):
        a1, b1 = divmod(x, q)
        a2, b2 = divmod(y, q)
        return mul[a1][a2] * q + add[mul[a1][b2]][mul[b1][a2]]

    def dadd(x, y):
        a1, b1 = divmod(x, q)
        a2, b2 = divmod(y, q)
        return add[a1][a2] * q + add[b1][b2]

    def dinv(x):
        a, b = divmod(x, q)
        ia = inv[a]
        return ia * q + neg[mul[mul[ia][ia]][b]]

    out = array("i")
    append = out.append
    for base in range(0, len(flat), 4):
        a, b, c, d = flat[base], flat[base + 1], flat[base + 2], flat[base + 3]
        for x1, x2 in pairs:
            y1 = dadd(dmul(x1, a), dmul(x2, c))
            y2 = dadd(dmul(x1, b), dmul(x2, d))
            if y2 >= q:
                append(dmul(y1, dinv(y2)))
            else:
                append(qq + dmul(y2, dinv(y1)))
    return np.frombuffer(out, dtype=np.int32).reshape(len(rows), len(pids)).copy()
