"""Dense linear algebra and univariate polynomial helpers over GF(q).

Matrices are 2-d numpy arrays of element encodings.  Everything here is
Gaussian elimination driven by the field's table arithmetic; sizes stay in the
low thousands, so no effort is spent beyond vectorizing the inner row updates.
"""

import numpy as np

from .gf import DTYPE


def row_reduce(gf, mat):
    """Reduced row echelon form.  Returns (rref, pivot_columns)."""
    a = np.array(mat, dtype=DTYPE)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        pr = r + int(hits[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = gf.mul(a[r], gf.inv(int(a[r, c])))
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = gf.sub(a[mask], gf.mul(col[mask, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(gf, mat):
    return len(row_reduce(gf, mat)[1])


def solve(gf, mat, rhs):
    """One solution x of mat @ x = rhs (free variables 0), or None."""
    a = np.asarray(mat, dtype=DTYPE)
    b = np.asarray(rhs, dtype=DTYPE).reshape(-1, 1)
    aug, pivots = row_reduce(gf, np.hstack([a, b]))
    if a.shape[1] in pivots:
        return None
    x = gf.zeros(a.shape[1])
    for i, c in enumerate(pivots):
        x[c] = aug[i, -1]
    return x


def kernel(gf, mat):
    """Rows spanning {x : mat @ x = 0}; shape (nullity, cols)."""
    a = np.asarray(mat, dtype=DTYPE)
    rref, pivots = row_reduce(gf, a)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    out = gf.zeros((len(free), cols))
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for j, pc in enumerate(pivots):
            out[i, pc] = gf.neg(int(rref[j, fc]))
    return out


def mat_vec(gf, mat, vec):
    """mat @ vec over GF; mat is (r, c), vec is (c,)."""
    mat = np.asarray(mat, dtype=DTYPE)
    out = gf.zeros(mat.shape[0])
    for j in range(mat.shape[1]):
        v = int(vec[j])
        if v:
            out = gf.add(out, gf.mul(v, mat[:, j]))
    return out


def vec_mat(gf, vec, mat):
    """vec @ mat over GF; vec is (r,), mat is (r, c)."""
    mat = np.asarray(mat, dtype=DTYPE)
    out = gf.zeros(mat.shape[1])
    for i in range(mat.shape[0]):
        v = int(vec[i])
        if v:
            out = gf.add(out, gf.mul(v, mat[i]))
    return out


# --- univariate polynomials (coefficient lists, lowest degree first) ---

def poly_trim(f):
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return list(f[:i])


def poly_deg(f):
    """Degree, with deg 0 = -1 for the zero polynomial."""
    return len(poly_trim(f)) - 1


def poly_mul(gf, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = gf.add(out[i + j], gf.mul(a, b))
    return out


def poly_divmod(gf, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [0] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    inv_lead = gf.inv(g[-1])
    while len(rem) >= len(g):
        c = gf.mul(rem[-1], inv_lead)
        k = len(rem) - len(g)
        quo[k] = c
        for j, b in enumerate(g):
            rem[k + j] = gf.sub(rem[k + j], gf.mul(c, b))
        rem = poly_trim(rem)
        if not rem:
            break
    return poly_trim(quo), rem


def poly_eval_vec(gf, f, xs):
    """Evaluate a coefficient list at every entry of a numpy array."""
    xs = np.asarray(xs, dtype=DTYPE)
    out = gf.zeros(xs.shape)
    for c in reversed(poly_trim(f) or [0]):
        out = gf.add(gf.mul(out, xs), c)
    return out
