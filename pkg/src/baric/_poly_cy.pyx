# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernel; see _poly_py for the reference semantics.

Coefficients stay arbitrary-precision Python ints (symbolic expansion
overflows machine words), so the win over the pure kernel is loop and
dispatch overhead, not integer arithmetic.
"""

from math import gcd

BACKEND = "compiled"

ZERO_T = (0, 0, 1)
ONE_T = (1, 0, 1)


cpdef tuple fe_norm(an, bn, den):
    if den < 0:
        an, bn, den = -an, -bn, -den
    g = gcd(gcd(an, bn), den)
    if g > 1:
        return an // g, bn // g, den // g
    return an, bn, den


cpdef tuple fe_add(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return fe_norm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


cpdef tuple fe_mul(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return fe_norm(
        2 * a1 * a2 - 3 * b1 * b2,
        2 * (a1 * b2 + b1 * a2) - b1 * b2,
        2 * d1 * d2,
    )


cpdef tuple fe_neg(tuple x):
    return (-x[0], -x[1], x[2])


cpdef dict poly_add(dict p, dict q):
    cdef dict out = dict(p)
    cdef tuple e, c, s
    for e, c in q.items():
        old = out.get(e)
        if old is None:
            out[e] = c
        else:
            s = fe_add(<tuple> old, c)
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


cpdef dict poly_sub(dict p, dict q):
    cdef dict out = dict(p)
    cdef tuple e, c, s
    for e, c in q.items():
        old = out.get(e)
        if old is None:
            out[e] = fe_neg(c)
        else:
            s = fe_add(<tuple> old, fe_neg(c))
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


cpdef dict poly_scale(dict p, tuple c):
    cdef dict out = {}
    cdef tuple e, v, s
    if c[0] == 0 and c[1] == 0:
        return out
    for e, v in p.items():
        s = fe_mul(v, c)
        if s[0] != 0 or s[1] != 0:
            out[e] = s
    return out


cpdef dict poly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple e1, e2, c1, c2, e, c
    cdef Py_ssize_t i, n
    if len(p) > len(q):
        p, q = q, p
    for e1, c1 in p.items():
        n = len(e1)
        for e2, c2 in q.items():
            e = tuple([e1[i] + e2[i] for i in range(n)])
            c = fe_mul(c1, c2)
            old = out.get(e)
            if old is not None:
                c = fe_add(<tuple> old, c)
            if c[0] == 0 and c[1] == 0:
                out.pop(e, None)
            else:
                out[e] = c
    return out
