"""Small dense linear algebra over any exact field type.

Entries may be Fractions, RationalFunctions or AlgValues; all that is
required is ring arithmetic, division, and a zero test.  Matrices are lists
of rows.
"""

from fractions import Fraction


def is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(r) for r in zip(*m)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def mat_vec(m, v):
    return [_dot(row, v) for row in m]


def _dot(u, v):
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


dot = _dot


def cross(u, v):
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]


def det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    raise ValueError("det only for n <= 3")


def inverse(m):
    """Inverse of a 2x2 or 3x3 matrix by the adjugate."""
    d = det(m)
    if is_zero(d):
        raise ZeroDivisionError("singular matrix")
    if len(m) == 2:
        return [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return [[cof[j][i] / d for j in range(3)] for i in range(3)]


def row_echelon(m):
    """Reduced row echelon form and pivot columns, pivots tested exactly."""
    m = [list(r) for r in m]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if not is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m):
    return len(row_echelon(m)[1])


def solve_affine(m, rhs, zero=Fraction(0), one=Fraction(1)):
    """Solution set of ``m x = rhs`` as ``(particular, nullspace basis)``.

    Returns None when the system is inconsistent.
    """
    n = len(m[0])
    aug = [list(row) + [v] for row, v in zip(m, rhs)]
    red, pivots = row_echelon(aug)
    if n in pivots:
        return None
    x = [zero] * n
    for i, c in enumerate(pivots):
        x[c] = red[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return x, basis
