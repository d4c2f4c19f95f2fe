"""Decoders: exhaustive oracle, Reed-Solomon, and the recursive projective pair.

The projective decoders reduce a length-p_m problem to affine subproblems via
the block structure (first q^m symbols = affine chart, tail = smaller
projective space) and call pluggable affine decoders.  Any callable meeting
the bounded-distance contract can be registered per (m, d):

    decode(spec: RM CodeSpec, r) -> DecodeResult with, whenever r = c + e and
    wt(e) <= floor((wt-1)/2), Success(c, f), eval_affine(f, m) = c, f reduced
    of degree <= d.  Codes with wt 1 accept exactly the codewords.

`decode_prm` propagates an unsolvable base-case interpolation as a hard
Inconsistent failure; `decode_prm_robust` converts every such condition into
an ordinary branch failure and keeps going, which pays off on error patterns
that overload one block but satisfy check_error_pattern.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from . import linalg
from .codes import (PRM, RM, CodeSpec, NotInCodeError, code_params, eta,
                    generator_matrix, interpolate, interpolate_family,
                    prm_weight, replicate_scaled)
from .geometry import affine_array, num_projective_points
from .poly import (Poly, embed_poly, eval_projective, homogenize,
                   lift_to_degree, reduce_mod_affine, split_bad_good)

BEYOND_RADIUS = "BeyondRadius"
NOT_IN_CODE = "NotInCode"
INCONSISTENT = "Inconsistent"

DEFAULT_ENUM_BOUND = 2 ** 24


class EnumerationBoundError(RuntimeError):
    """Exhaustive decoding would exceed the configured work bound."""


class _InconsistentBase(Exception):
    # internal: unsolvable base-case interpolation under strict semantics
    pass


@dataclass(frozen=True)
class DecodeResult:
    codeword: object
    witness: object
    failure: str | None = None

    @property
    def ok(self):
        return self.failure is None

    @classmethod
    def success(cls, codeword, witness):
        return cls(codeword, witness, None)

    @classmethod
    def fail(cls, kind):
        return cls(None, None, kind)


def weight(vec):
    """Hamming weight."""
    return int(np.count_nonzero(np.asarray(vec)))


def _trace(trace, **event):
    if trace is not None:
        trace.append(event)


# --- exhaustive bounded-distance decoding (the oracle) ---

def _enum_bound():
    return int(os.environ.get("PRM_ENUM_BOUND", DEFAULT_ENUM_BOUND))


@lru_cache(maxsize=8)
def _codebook(spec):
    gf = spec.gf
    g = generator_matrix(spec)
    cb = gf.zeros((1, g.shape[1]))
    for i in range(g.shape[0]):
        cb = np.concatenate([gf.add(cb, gf.mul(v, g[i])) for v in range(gf.q)])
    cb.setflags(write=False)
    return cb


def _scan_codewords(spec, r, cap_t):
    gf = spec.gf
    g = generator_matrix(spec)
    k, n = g.shape
    q = gf.q
    if q ** k <= 2 ** 16:
        cb = _codebook(spec)
        dist = np.count_nonzero(cb != r[None, :], axis=1)
        j = int(np.argmin(dist))
        if dist[j] <= cap_t:
            return cb[j].copy()
        return None
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(0, q ** k, 4096):
        idx = np.arange(start, min(start + 4096, q ** k), dtype=np.int64)
        msgs = ((idx[:, None] // powers) % q).astype(g.dtype)
        cws = gf.zeros((len(idx), n))
        for i in range(k):
            cws = gf.add(cws, gf.mul(msgs[:, i][:, None], g[i][None, :]))
        dist = np.count_nonzero(cws != r[None, :], axis=1)
        j = int(np.argmin(dist))
        if dist[j] <= cap_t:
            return cws[j].copy()
    return None


@lru_cache(maxsize=8)
def _syndrome_table(spec):
    """Sorted syndrome-key tables of every error pattern of weight <= T."""
    gf = spec.gf
    params = code_params(spec)
    g = generator_matrix(spec)
    n, q, cap_t = params.n, gf.q, params.T
    h = linalg.kernel(gf, g)
    rows = h.shape[0]
    powers = q ** np.arange(rows, dtype=np.int64)
    classes = []
    for w in range(1, cap_t + 1):
        sups = np.array(list(combinations(range(n), w)), dtype=np.int16)
        vals = np.array(list(product(range(1, q), repeat=w)), dtype=np.int16)
        nv = len(vals)
        keys = np.empty(len(sups) * nv, dtype=np.int64)
        sup_idx = np.empty(len(sups) * nv, dtype=np.int32)
        val_idx = np.tile(np.arange(nv, dtype=np.int32), len(sups))
        chunk = max(1, 2 ** 21 // max(1, nv * rows))
        for lo in range(0, len(sups), chunk):
            sup = sups[lo:lo + chunk]
            syn = gf.zeros((len(sup), nv, rows))
            for slot in range(w):
                cols = h[:, sup[:, slot]].T  # (chunk, rows)
                syn = gf.add(syn, gf.mul(vals[None, :, slot, None], cols[:, None, :]))
            keys[lo * nv:(lo + len(sup)) * nv] = (syn.astype(np.int64) @ powers).ravel()
            sup_idx[lo * nv:(lo + len(sup)) * nv] = np.repeat(
                np.arange(lo, lo + len(sup), dtype=np.int32), nv)
        order = np.argsort(keys, kind="stable")
        classes.append((keys[order], sup_idx[order], val_idx[order], sups, vals))
    return h, powers, classes


def decode_exhaustive(spec, r, bound=None):
    """Bounded-distance decoding by brute force, radius floor((wt-1)/2).

    Scans whichever is smaller: the q^k codewords, or the syndromes of all
    error patterns within the radius.  Both scans exceeding `bound` (default
    2^24, env PRM_ENUM_BOUND) raises EnumerationBoundError.  Valid for both
    families; the projective decoders use it as the default affine engine
    for m >= 2 and the tests as the ground-truth oracle.
    """
    gf = spec.gf
    params = code_params(spec)
    r = gf.asarray(r)
    if r.shape != (params.n,):
        raise ValueError(f"received word length {r.shape} != n = {params.n}")
    if params.T == 0:
        try:
            return DecodeResult.success(r.copy(), interpolate(spec, r))
        except NotInCodeError:
            return DecodeResult.fail(BEYOND_RADIUS)
    q, n = gf.q, params.n
    work_cw = q ** params.k
    work_err = sum((q - 1) ** w * comb(n, w) for w in range(1, params.T + 1))
    if q ** (n - params.k) >= 2 ** 62:
        work_err = None
    bound = _enum_bound() if bound is None else bound
    if min(w for w in (work_cw, work_err) if w is not None) > bound:
        raise EnumerationBoundError(
            f"{spec}: codeword scan {work_cw}, pattern scan {work_err} "
            f"both exceed bound {bound}")
    if work_err is None or work_cw <= work_err:
        cw = _scan_codewords(spec, r, params.T)
        if cw is None:
            return DecodeResult.fail(BEYOND_RADIUS)
        return DecodeResult.success(cw, interpolate(spec, cw))
    h, powers, classes = _syndrome_table(spec)
    syn = linalg.mat_vec(gf, h, r)
    key = int(syn.astype(np.int64) @ powers)
    if key == 0:
        return DecodeResult.success(r.copy(), interpolate(spec, r))
    for keys, sup_idx, val_idx, sups, vals in classes:
        pos = int(np.searchsorted(keys, key))
        if pos < len(keys) and keys[pos] == key:
            e = gf.zeros(n)
            e[sups[sup_idx[pos]]] = vals[val_idx[pos]]
            cw = gf.sub(r, e)
            return DecodeResult.success(cw, interpolate(spec, cw))
    return DecodeResult.fail(BEYOND_RADIUS)


# --- Reed-Solomon decoding for the m = 1 affine codes ---

def decode_rs_affine(spec, r):
    """Berlekamp-Welch for RM(1, d) = RS over the q affine points.

    Solves Q(x_i) = r_i E(x_i) with deg Q <= d + T, E monic of degree
    T = floor((q-d-1)/2); any solution has f = Q/E exactly when wt(e) <= T.
    The division and a final residual check make the behavior strictly
    bounded-distance, mirroring decode_exhaustive.
    """
    gf = spec.gf
    if spec.family != RM or spec.m != 1:
        raise ValueError("decode_rs_affine handles RM specs with m = 1 only")
    params = code_params(spec)
    r = gf.asarray(r)
    if r.shape != (params.n,):
        raise ValueError(f"received word length {r.shape} != n = {params.n}")
    d, cap_t = spec.d, params.T
    if cap_t == 0:
        try:
            return DecodeResult.success(r.copy(), interpolate(spec, r))
        except NotInCodeError:
            return DecodeResult.fail(BEYOND_RADIUS)
    xs = affine_array(gf, 1)[:, 0]
    qcols = d + cap_t + 1
    mat = gf.zeros((gf.q, qcols + cap_t))
    rhs = gf.zeros(gf.q)
    for i in range(gf.q):
        x, ri = int(xs[i]), int(r[i])
        xp = 1
        for jj in range(qcols):
            mat[i, jj] = xp
            xp = gf.mul(xp, x)
        xp = 1
        for jj in range(cap_t):
            mat[i, qcols + jj] = gf.neg(gf.mul(ri, xp))
            xp = gf.mul(xp, x)
        rhs[i] = gf.mul(ri, xp)
    sol = linalg.solve(gf, mat, rhs)
    if sol is None:
        return DecodeResult.fail(BEYOND_RADIUS)
    qpoly = [int(v) for v in sol[:qcols]]
    epoly = [int(v) for v in sol[qcols:]] + [1]
    f, rem = linalg.poly_divmod(gf, qpoly, epoly)
    if rem:
        return DecodeResult.fail(BEYOND_RADIUS)
    cw = linalg.poly_eval_vec(gf, f, xs)
    if weight(gf.sub(r, cw)) > cap_t:
        return DecodeResult.fail(BEYOND_RADIUS)
    witness = Poly(gf, 2, [((0, e), c) for e, c in enumerate(f) if c])
    return DecodeResult.success(cw, witness)


# --- the pluggable affine-decoder registry ---

def _default_affine(spec, r):
    if spec.m == 1:
        return decode_rs_affine(spec, r)
    return decode_exhaustive(spec, r)


class AffineDecoders:
    """Maps (m, d) to an affine decoder; unknown keys use the default.

    The default runs Berlekamp-Welch for m = 1 and the exhaustive decoder
    otherwise.  Register alternatives to swap in faster engines per level.
    """

    def __init__(self, default=None):
        self._table = {}
        self._default = default or _default_affine

    def register(self, m, d, fn):
        self._table[(m, d)] = fn
        return self

    def decode(self, spec, r):
        fn = self._table.get((spec.m, spec.d), self._default)
        return fn(spec, r)


def exhaustive_decoders():
    """Registry that forces the exhaustive engine at every level."""
    return AffineDecoders(default=decode_exhaustive)


# --- projective Reed-Solomon decoding (m = 1), the recursion's blueprint ---

def decode_prs(gf, d, r, decoders=None):
    """Decode the [q+1, d+1, q-d+1] projective code from two affine passes.

    First try degree d on the q-point chart and read the last coordinate off
    the witness's x1^d coefficient; if the combined word is not within half
    the minimum distance, the last coordinate must be error-free, so subtract
    its replicated contribution and decode the chart at degree d-1.  Corrects
    every error of weight < (q-d+1)/2.
    """
    if not 1 <= d <= gf.q - 1:
        raise ValueError(f"degree {d} out of range [1, {gf.q - 1}]")
    r = gf.asarray(r)
    if r.shape != (gf.q + 1,):
        raise ValueError(f"received word length {r.shape} != {gf.q + 1}")
    decoders = decoders or AffineDecoders()
    t = Fraction(gf.q - d + 1, 2)
    r1, r2 = r[:-1], r[-1:]
    first = decoders.decode(CodeSpec(RM, gf, 1, d), r1)
    if first.ok:
        c2 = first.witness.coeff((0, d))
        cand = np.concatenate([first.codeword, gf.asarray([c2])])
        if weight(gf.sub(r, cand)) < t:
            return DecodeResult.success(cand, homogenize(first.witness, d))
    tail = replicate_scaled(gf, r2, d)
    second = decoders.decode(CodeSpec(RM, gf, 1, d - 1), gf.sub(r1, tail))
    if not second.ok:
        return DecodeResult.fail(BEYOND_RADIUS)
    f = homogenize(second.witness, d) + Poly(gf, 2, [((0, d), int(r2[0]))])
    cw = np.concatenate([gf.add(second.codeword, tail), r2])
    return DecodeResult.success(cw, f)


# --- recursive projective decoding ---

def _decode_level(gf, m, d, r, decoders, strict, trace):
    # Level m works on the last m+1 variables of its own (m+1)-variable ring;
    # witnesses travel upward via embed_poly, which prepends the parent lead.
    if m == 0:
        return DecodeResult.success(r.copy(), Poly(gf, 1, [((d,), int(r[0]))]))
    q = gf.q
    t = Fraction(prm_weight(q, m, d), 2)
    if t <= 1:
        # any correctable r is already a codeword; find its witness
        try:
            f = interpolate_family(gf, PRM, m, d, r)
        except NotInCodeError:
            _trace(trace, event="base", m=m, d=d, ok=False)
            if strict:
                raise _InconsistentBase()
            return DecodeResult.fail(NOT_IN_CODE)
        _trace(trace, event="base", m=m, d=d, ok=True)
        return DecodeResult.success(r.copy(), f)
    r1, r2 = r[:q ** m], r[q ** m:]

    # first part: trust the affine block
    first = decoders.decode(CodeSpec(RM, gf, m, d), r1)
    _trace(trace, event="affine", part="first", m=m, d=d, ok=first.ok)
    if first.ok:
        f0 = first.witness
        if d <= q - 1:
            f = homogenize(f0, d)
            cand = eval_projective(f, m)
            if weight(gf.sub(r, cand)) < t:
                _trace(trace, event="accept", part="first", m=m, d=d, f=f)
                return DecodeResult.success(cand, f)
            _trace(trace, event="reject", part="first", m=m, d=d)
        else:
            parts = split_bad_good(f0, d)
            _trace(trace, event="split", m=m, d=d, bad=parts.bad,
                   good_top=parts.good_top, good_low=parts.good_low)
            c_good = eval_projective(parts.good_top, m - 1)
            sub = _decode_level(gf, m - 1, d - (q - 1), gf.sub(r2, c_good),
                                decoders, strict, trace)
            if sub.ok:
                f_sub = embed_poly(sub.witness)
                g0 = reduce_mod_affine(f0 - f_sub - parts.good_top)
                _trace(trace, event="residue", m=m, d=d, f_sub=f_sub, g0=g0)
                if g0.degree <= d - 1:
                    f = homogenize(g0, d) + lift_to_degree(f_sub, d) + parts.good_top
                    cand = eval_projective(f, m)
                    if weight(gf.sub(r, cand)) < t:
                        _trace(trace, event="accept", part="first", m=m, d=d, f=f)
                        return DecodeResult.success(cand, f)
                    _trace(trace, event="reject", part="first", m=m, d=d)
                else:
                    # the affine witness cannot come from a degree-d form
                    _trace(trace, event="reject", part="first", m=m, d=d,
                           reason="residue degree")

    # second part: trust the projective tail
    second = _decode_level(gf, m - 1, d, r2, decoders, strict, trace)
    _trace(trace, event="tail", m=m, d=d, ok=second.ok,
           v=second.codeword, g=embed_poly(second.witness) if second.ok else None)
    if not second.ok:
        return DecodeResult.fail(BEYOND_RADIUS)
    v = second.codeword
    vxd = replicate_scaled(gf, v, d)
    aff = decoders.decode(CodeSpec(RM, gf, m, d - 1), gf.sub(r1, vxd))
    _trace(trace, event="affine", part="second", m=m, d=d - 1, ok=aff.ok,
           u=aff.codeword, f_low=aff.witness)
    if not aff.ok:
        return DecodeResult.fail(BEYOND_RADIUS)
    f = homogenize(aff.witness, d) + embed_poly(second.witness)
    cw = np.concatenate([gf.add(aff.codeword, vxd), v])
    _trace(trace, event="accept", part="second", m=m, d=d, f=f)
    return DecodeResult.success(cw, f)


def _decode_entry(gf, m, d, r, decoders, strict, trace):
    if m < 1 or not 1 <= d <= m * (gf.q - 1):
        raise ValueError(f"no projective code with m={m}, d={d} over GF({gf.q})")
    r = gf.asarray(r)
    n = num_projective_points(gf.q, m)
    if r.shape != (n,):
        raise ValueError(f"received word length {r.shape} != n = {n}")
    out = _decode_level(gf, m, d, r, decoders or AffineDecoders(), strict, trace)
    if out.ok:
        if not np.array_equal(eval_projective(out.witness, m), out.codeword):
            raise AssertionError("witness does not evaluate to the codeword")
    return out


def decode_prm(gf, m, d, r, decoders=None, trace=None):
    """Recursive projective decoding, guaranteed for wt(e) < eta/2.

    Strict variant: a base-case interpolation with no solution means the
    caller violated the radius contract and yields Failure(Inconsistent)
    immediately, with no fallback.
    """
    try:
        return _decode_entry(gf, m, d, r, decoders, True, trace)
    except _InconsistentBase:
        return DecodeResult.fail(INCONSISTENT)


def decode_prm_robust(gf, m, d, r, decoders=None, trace=None):
    """decode_prm with every internal failure downgraded to a branch failure.

    Identical within the guaranteed radius, but keeps trying the remaining
    branches when one block of the received word is hopeless; this recovers
    all patterns accepted by check_error_pattern even past eta/2.
    """
    return _decode_entry(gf, m, d, r, decoders, False, trace)


def check_error_pattern(gf, m, d, e):
    """Sufficient condition for decode_prm_robust to correct the pattern e.

    wt(e) must be below wt(PRM(m, d))/2, and for some level i the nested tail
    blocks must be cleanly decodable: every tail of length p_j (i < j <= m)
    carries fewer than wt(PRM(j, d))/2 errors, and the p_i tail fewer than
    eta(i, d)/2.
    """
    e = gf.asarray(e)
    q = gf.q
    if e.shape != (num_projective_points(q, m),):
        raise ValueError("pattern length mismatch")
    if not weight(e) < Fraction(prm_weight(q, m, d), 2):
        return False
    for i in range(m + 1):
        tail_i = e[len(e) - num_projective_points(q, i):]
        if not weight(tail_i) < Fraction(eta(q, i, d), 2):
            continue
        ok = True
        for j in range(i + 1, m + 1):
            tail_j = e[len(e) - num_projective_points(q, j):]
            if not weight(tail_j) < Fraction(prm_weight(q, j, d), 2):
                ok = False
                break
        if ok:
            return True
    return False
