"""Pure-Python polynomial kernel.

A polynomial is a dict mapping exponent tuples to coefficient triples
(an, bn, den): the value (an + bn*l)/den reduced so den > 0 and
gcd(an, bn, den) = 1, with l^2 = (-3 - l)/2.  The compiled kernel
(_poly_cy) mirrors this module function for function; results must be
identical dicts.
"""

from math import gcd

BACKEND = "pure"

ZERO_T = (0, 0, 1)
ONE_T = (1, 0, 1)


def fe_norm(an, bn, den):
    if den < 0:
        an, bn, den = -an, -bn, -den
    g = gcd(gcd(an, bn), den)
    if g > 1:
        return an // g, bn // g, den // g
    return an, bn, den


def fe_add(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return fe_norm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def fe_mul(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return fe_norm(
        2 * a1 * a2 - 3 * b1 * b2,
        2 * (a1 * b2 + b1 * a2) - b1 * b2,
        2 * d1 * d2,
    )


def fe_neg(x):
    a, b, d = x
    return -a, -b, d


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        old = out.get(e)
        if old is None:
            out[e] = c
        else:
            s = fe_add(old, c)
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def poly_sub(p, q):
    out = dict(p)
    for e, c in q.items():
        old = out.get(e)
        if old is None:
            out[e] = fe_neg(c)
        else:
            s = fe_add(old, fe_neg(c))
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def poly_scale(p, c):
    if c[0] == 0 and c[1] == 0:
        return {}
    out = {}
    for e, v in p.items():
        s = fe_mul(v, c)
        if s[0] != 0 or s[1] != 0:
            out[e] = s
    return out


def poly_mul(p, q):
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = fe_mul(c1, c2)
            old = out.get(e)
            if old is not None:
                c = fe_add(old, c)
            if c[0] == 0 and c[1] == 0:
                out.pop(e, None)
            else:
                out[e] = c
    return out
