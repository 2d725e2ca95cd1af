"""Dense univariate polynomials over the integers.

Polynomials are plain lists of ``int`` in ascending order with no trailing
zeros; the zero polynomial is ``[]``.  Everything here is internal plumbing
for :class:`~curvesym.exactnum.polynomial.Polynomial`.
"""

from math import gcd, isqrt

try:
    # GMP multiplies multi-megabit integers far faster than CPython does.
    from gmpy2 import gcd as _big_gcd
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - pure Python fallback
    _mpz = None
    _big_gcd = gcd

# Below this operand length schoolbook multiplication beats packing.
KRONECKER_MIN = 16
# Above this many bits the big-integer product is handed to GMP.
GMP_MIN_BITS = 20000


def big_mul(x, y):
    if _mpz is not None and x.bit_length() + y.bit_length() > GMP_MIN_BITS:
        return int(_mpz(x) * _mpz(y))
    return x * y


def big_gcd(x, y):
    if _mpz is not None and x.bit_length() + y.bit_length() > GMP_MIN_BITS:
        return int(_big_gcd(x, y))
    return gcd(x, y)


def strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return strip(out)


def sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return strip(out)


def scale(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    if len(b) < KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    out[i + j] += x * y
        return out
    return _kronecker_mul(a, b)


def _pack(a, nbytes):
    pos = b"".join((x if x > 0 else 0).to_bytes(nbytes, "little") for x in a)
    neg = b"".join((-x if x < 0 else 0).to_bytes(nbytes, "little") for x in a)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value, n, nbytes):
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (value + offset).to_bytes(nbytes * n, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
            for i in range(n)]


def _kronecker_mul(a, b):
    # Evaluate at 2**bits, multiply the two big integers, read digits back.
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 1
    nbytes = bits // 8 + 1
    prod = big_mul(_pack(a, nbytes), _pack(b, nbytes))
    return strip(_unpack(prod, len(a) + len(b) - 1, nbytes))


def power(a, n):
    result = [1]
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def content(a):
    return gcd(*a) if a else 0


def primitive(a):
    """Return ``(c, p)`` with ``a = c * p``, ``p`` primitive with positive lc."""
    if not a:
        return 0, []
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, list(a)
    return c, [x // c for x in a]


def derivative(a):
    return [i * a[i] for i in range(1, len(a))]


def evaluate(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def evaluate_homogeneous(a, p, q):
    """Return ``q**deg(a) * a(p/q)`` as an integer (``q > 0`` keeps the sign)."""
    if not a:
        return 0
    v = 0
    qk = 1
    for c in reversed(a):
        v = v * p + c * qk
        qk *= q
    return v


def sign(x):
    return (x > 0) - (x < 0)


def pseudo_rem(f, g):
    """``lc(g)**(deg f - deg g + 1) * f`` modulo ``g``."""
    m = len(g) - 1
    if len(f) - 1 < m:
        return list(f)
    steps = len(f) - 1 - m + 1
    lc = g[-1]
    r = list(f)
    while r and len(r) - 1 >= m:
        j = len(r) - 1 - m
        c = r[-1]
        r = [lc * x for x in r]
        for i, y in enumerate(g):
            r[i + j] -= c * y
        strip(r)
        steps -= 1
    if steps and r:
        k = lc ** steps
        r = [k * x for x in r]
    return r


def exact_quotient(f, g):
    """Return ``q`` with ``f == q * g`` over the integers, or ``None``."""
    if not f:
        return []
    m = len(g) - 1
    n = len(f) - 1
    if n < m:
        return None
    lc = g[-1]
    r = list(f)
    q = [0] * (n - m + 1)
    for k in range(n - m, -1, -1):
        c = r[k + m]
        if c:
            qk, rem = divmod(c, lc)
            if rem:
                return None
            q[k] = qk
            for i, y in enumerate(g):
                r[i + k] -= qk * y
    if any(r[:m]):
        return None
    return q


def _interpolate(h, x):
    # Balanced base-x digits of h.
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _heuristic_gcd(f, g):
    """GCDHEU on primitive inputs; ``None`` when the heuristic gives up."""
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    bound = 2 * min(fn, gn) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff = evaluate(f, x)
        gg = evaluate(g, x)
        if ff and gg:
            h = big_gcd(ff, gg)
            _, cand = primitive(_interpolate(h, x))
            if cand and exact_quotient(f, cand) is not None \
                    and exact_quotient(g, cand) is not None:
                return cand
            _, cof = primitive(_interpolate(ff // h, x))
            if cof:
                q = exact_quotient(f, cof)
                if q is not None:
                    _, q = primitive(q)
                    if exact_quotient(g, q) is not None:
                        return q
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def subresultant_gcd(f, g):
    """Primitive gcd via the subresultant PRS (inputs primitive, nonzero)."""
    if len(f) < len(g):
        f, g = g, f
    r0, r1 = f, g
    d = len(r0) - len(r1)
    beta = -1 if d % 2 == 0 else 1
    psi = -1
    while True:
        r = pseudo_rem(r0, r1)
        if not r:
            break
        r = [c // beta for c in r]
        d_prev = d
        lc_prev = r1[-1]
        r0, r1 = r1, r
        d = len(r0) - len(r1)
        if d_prev >= 1:
            psi = (-lc_prev) ** d_prev // psi ** (d_prev - 1)
        beta = -lc_prev * psi ** d
        if len(r1) == 1:
            return [1]
    return primitive(r1)[1]


def poly_gcd(f, g):
    """Primitive gcd with positive leading coefficient; ``gcd(0, 0) = []``."""
    if not f:
        return primitive(g)[1]
    if not g:
        return primitive(f)[1]
    _, f = primitive(f)
    _, g = primitive(g)
    if len(f) == 1 or len(g) == 1:
        return [1]
    if f == g:
        return f
    h = _heuristic_gcd(f, g)
    if h is None:
        h = subresultant_gcd(f, g)
    return h
