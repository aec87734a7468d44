"""Dense polynomial helpers over an arbitrary FieldCtx.

Coefficients are encoded field elements, constant term first, trailing
zeros stripped; [] is the zero polynomial.  The character-sum machinery
needs gcds, formal derivatives, and char-p squarefree decomposition over
F_q itself, not just over prime fields, so these work element-wise through
the field tables.
"""

from __future__ import annotations

from .field import FieldCtx


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(ctx: FieldCtx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return trim(out)


def scale(ctx: FieldCtx, a, c):
    return trim([ctx.mul(x, c) for x in a])


def mul(ctx: FieldCtx, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ca, cb))
    return trim(out)


def pdivmod(ctx: FieldCtx, a, b):
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv_lead = ctx.inv(b[-1])
    rem = list(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            qc = ctx.mul(c, inv_lead)
            quot[i - db] = qc
            for t in range(db + 1):
                rem[i - db + t] = ctx.sub(rem[i - db + t], ctx.mul(qc, b[t]))
    return trim(quot), trim(rem[:db])


def monic(ctx: FieldCtx, a):
    a = trim(a)
    if not a or a[-1] == 1:
        return a
    return scale(ctx, a, ctx.inv(a[-1]))


def pgcd(ctx: FieldCtx, a, b):
    a, b = trim(a), trim(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, pdivmod(ctx, a, b)[1]
    return monic(ctx, a)


def derivative(ctx: FieldCtx, a):
    return trim([ctx.mul(c, i % ctx.p) for i, c in enumerate(a)][1:])


def evaluate(ctx: FieldCtx, a, x):
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def pth_root(ctx: FieldCtx, a):
    """b with b^p = a; valid when a only has exponents divisible by p."""
    p, q = ctx.p, ctx.q
    out = []
    for i, c in enumerate(a):
        if i % p == 0:
            out.append(ctx.pow(c, q // p))
        elif c:
            raise ValueError("polynomial is not a p-th power")
    return trim(out)


def squarefree_decomposition(ctx: FieldCtx, f):
    """[(g, m)] with monic(f) = prod g^m, the g monic squarefree and
    pairwise coprime, each m the exact multiplicity of g's roots.  Handles
    the char-p wrinkle where the derivative vanishes on p-th powers."""
    f = monic(ctx, f)
    if degree(f) < 1:
        return []
    out = []
    fp = derivative(ctx, f)
    if not fp:
        for g, m in squarefree_decomposition(ctx, pth_root(ctx, f)):
            out.append((g, m * ctx.p))
        return out
    c = pgcd(ctx, f, fp)
    w = pdivmod(ctx, f, c)[0]
    i = 1
    while degree(w) > 0:
        y = pgcd(ctx, w, c)
        z = pdivmod(ctx, w, y)[0]
        if degree(z) > 0:
            out.append((z, i))
        w = y
        c = pdivmod(ctx, c, y)[0]
        i += 1
    if degree(c) > 0:
        for g, m in squarefree_decomposition(ctx, pth_root(ctx, c)):
            out.append((g, m * ctx.p))
    return out


def radical_degree(ctx: FieldCtx, f):
    """Number of distinct roots of f in its splitting field."""
    return sum(degree(g) for g, _ in squarefree_decomposition(ctx, f))


def is_const_times_power(ctx: FieldCtx, f, k):
    """True iff f is a constant times a k-th power of a polynomial."""
    f = trim(f)
    if not f:
        raise ValueError("undefined for the zero polynomial")
    return all(m % k == 0 for _, m in squarefree_decomposition(ctx, f))
