"""Affine and projective evaluation codes of bounded-degree polynomials.

Two families over GF(q):

  RM(m, d):  length q^m, evaluations over F_q^m of reduced polynomials of
             degree <= d in m variables.
  PRM(m, d): length p_m = (q^(m+1)-1)/(q-1), evaluations over P^m of the
             degree-d forms in m+1 variables.

Parameters come from exact integer formulas and are cross-checked against an
independent monomial count; eta is the projective decoder's guaranteed
decoding diameter, computed by two routes and asserted equal.  All thresholds
that enter strict half-distance comparisons are exact Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import linalg
from .gf import GF
from .geometry import num_projective_points
from .poly import (Poly, affine_basis, eval_affine, eval_projective,
                   projective_basis)

RM = "RM"
PRM = "PRM"


class NotInCodeError(ValueError):
    """Raised when a vector asserted to be a codeword is not one."""


# --- parameter formulas ---

def rm_weight(q, m, d):
    """Minimum distance of RM(m, d); 1 once d reaches m(q-1)."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if d >= m * (q - 1):
        return 1
    nu, mu = divmod(d, q - 1)
    return (q - mu) * q ** (m - nu - 1)


def prm_weight(q, m, d):
    """Minimum distance of PRM(m, d); 1 once d exceeds m(q-1)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > m * (q - 1):
        return 1
    nu, mu = divmod(d - 1, q - 1)
    return (q - mu) * q ** (m - nu - 1)


def eta(q, m, d):
    """Guaranteed decoding diameter of the recursive projective decoder.

    Half of this quantity bounds the correctable error weight: one affine
    minimum distance is spent per recursion level, so eta is the sum of
    wt(RM(m - i, d)) over the levels the recursion visits, plus 1.  Computed
    by that sum and by a closed form, asserted equal.  eta <= wt(PRM(m, d)),
    with equality exactly when mu = 0 or nu = m - 1.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > m * (q - 1):
        return 1
    nu, mu = divmod(d - 1, q - 1)
    closed = (q - mu) * q ** (m - nu - 1) - mu * (q ** (m - nu - 1) - 1) // (q - 1)
    levels = 1 + sum(rm_weight(q, m - i, d) for i in range(m - nu))
    if closed != levels:
        raise AssertionError(f"eta mismatch for q={q} m={m} d={d}")
    return closed


def rm_dimension(q, m, d):
    """Number of reduced monomials of degree <= d, by inclusion-exclusion."""
    if d < 0:
        raise ValueError("d must be >= 0")
    k = 0
    for t in range(d + 1):
        for j in range(m + 1):
            a = t - j * q
            if a < 0:
                break
            k += (-1) ** j * comb(m, j) * comb(a + m - 1, a)
    return k


def prm_dimension(q, m, d):
    """Dimension of PRM(m, d), by inclusion-exclusion over degrees = d mod q-1."""
    if d < 1:
        raise ValueError("d must be >= 1")
    k = 0
    for t in range(1, d + 1):
        if (d - t) % (q - 1):
            continue
        for j in range(m + 2):
            a = t - j * q
            if a < 0:
                break
            k += (-1) ** j * comb(m + 1, j) * comb(a + m, a)
    return k


# independent count of the same monomial sets, by convolution rather than
# inclusion-exclusion; used as a construction-time cross-check

@lru_cache(maxsize=None)
def _bounded_sum_counts(parts, cap, upto):
    c = [1] + [0] * upto
    for _ in range(parts):
        c = [sum(c[t - v] for v in range(min(cap, t) + 1)) for t in range(upto + 1)]
    return tuple(c)


def _rm_monomial_count(q, m, d):
    counts = _bounded_sum_counts(m, q - 1, min(d, m * (q - 1)))
    return sum(counts)


def _prm_monomial_count(q, m, d):
    total = 0
    for lead in range(m + 1):
        trail = m - lead
        counts = _bounded_sum_counts(trail, q - 1, min(d - 1, trail * (q - 1)))
        for a in range(1, d + 1):
            if d - a <= trail * (q - 1):
                total += counts[d - a]
    return total


# --- specs and parameters ---

@dataclass(frozen=True)
class CodeSpec:
    """One code: family RM or PRM over gf, m variables axes, degree d."""
    family: str
    gf: GF
    m: int
    d: int

    def __post_init__(self):
        if self.family not in (RM, PRM):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        top = self.m * (self.gf.q - 1)
        lo = 0 if self.family == RM else 1
        if not lo <= self.d <= top:
            raise ValueError(
                f"degree {self.d} out of range [{lo}, {top}] for "
                f"{self.family} over GF({self.gf.q}) with m={self.m}")

    @property
    def n(self):
        q = self.gf.q
        return q ** self.m if self.family == RM else num_projective_points(q, self.m)


@dataclass(frozen=True)
class CodeParams:
    """Derived parameters; projective-only fields are None for RM."""
    n: int
    k: int
    wt: int
    nu: int
    mu: int
    eta: int | None
    T: int
    T0: int | None
    t: Fraction
    t0: Fraction | None
    t1: Fraction | None
    t2: Fraction | None


@lru_cache(maxsize=None)
def code_params(spec):
    q, m, d = spec.gf.q, spec.m, spec.d
    if spec.family == RM:
        wt = rm_weight(q, m, d)
        k = rm_dimension(q, m, d)
        if k != _rm_monomial_count(q, m, d):
            raise AssertionError(f"dimension mismatch for {spec}")
        nu, mu = divmod(d, q - 1)
        return CodeParams(n=q ** m, k=k, wt=wt, nu=nu, mu=mu, eta=None,
                          T=(wt - 1) // 2, T0=None, t=Fraction(wt, 2),
                          t0=None, t1=None, t2=None)
    wt = prm_weight(q, m, d)
    k = prm_dimension(q, m, d)
    if k != _prm_monomial_count(q, m, d):
        raise AssertionError(f"dimension mismatch for {spec}")
    nu, mu = divmod(d - 1, q - 1)
    et = eta(q, m, d)
    return CodeParams(
        n=num_projective_points(q, m), k=k, wt=wt, nu=nu, mu=mu, eta=et,
        T=(wt - 1) // 2, T0=(et - 1) // 2,
        t=Fraction(wt, 2),
        t0=Fraction(et, 2),
        t1=Fraction(rm_weight(q, m, d), 2),
        t2=Fraction(eta(q, m - 1, d), 2))


# --- generator matrices, encoding, interpolation ---

def basis_monomials(spec):
    if spec.family == PRM:
        return projective_basis(spec.gf, spec.m, spec.d)
    return affine_basis(spec.gf, spec.m, spec.d)


@lru_cache(maxsize=None)
def generator_matrix(spec):
    """k x n matrix whose rows evaluate the canonical basis monomials."""
    gf, m = spec.gf, spec.m
    ev = eval_projective if spec.family == PRM else eval_affine
    rows = [ev(Poly.monomial(gf, exps), m) for exps in basis_monomials(spec)]
    g = np.array(rows)
    if g.shape != (code_params(spec).k, spec.n):
        raise AssertionError(f"generator shape mismatch for {spec}")
    g.setflags(write=False)
    return g


def encode(spec, message):
    """Codeword and polynomial for basis coefficients `message` (length k)."""
    g = generator_matrix(spec)
    msg = spec.gf.asarray(message)
    if msg.shape != (g.shape[0],):
        raise ValueError(f"message length {msg.shape} != k = {g.shape[0]}")
    cw = linalg.vec_mat(spec.gf, msg, g)
    f = Poly(spec.gf, spec.m + 1, zip(basis_monomials(spec), msg))
    return cw, f


# low-level interpolation entry points: the recursive decoder needs these for
# (m, d) combinations where d exceeds m(q-1) and the code fills the whole
# space, which CodeSpec deliberately rejects

@lru_cache(maxsize=None)
def _solver(gf, family, m, d):
    if family == PRM:
        mons = projective_basis(gf, m, d)
        ev = eval_projective
    else:
        mons = affine_basis(gf, m, d)
        ev = eval_affine
    g = np.array([ev(Poly.monomial(gf, exps), m) for exps in mons])
    _, pivots = linalg.row_reduce(gf, g)
    if len(pivots) != len(mons):
        raise AssertionError(f"monomial basis is dependent: {family} m={m} d={d}")
    block = g[:, pivots]
    aug, piv2 = linalg.row_reduce(gf, np.hstack([block, np.eye(len(mons), dtype=g.dtype)]))
    assert piv2 == list(range(len(mons)))
    inv = aug[:, len(mons):]
    g.setflags(write=False)
    return mons, g, tuple(pivots), inv


def interpolate_family(gf, family, m, d, vec):
    """Polynomial over the canonical basis with evaluation `vec`."""
    mons, g, pivots, inv = _solver(gf, family, m, d)
    vec = gf.asarray(vec)
    if vec.shape != (g.shape[1],):
        raise ValueError(f"vector length {vec.shape} != n = {g.shape[1]}")
    msg = linalg.vec_mat(gf, vec[list(pivots)], inv)
    if not np.array_equal(linalg.vec_mat(gf, msg, g), vec):
        raise NotInCodeError(f"vector is not in {family}(m={m}, d={d}) over GF({gf.q})")
    return Poly(gf, m + 1, zip(mons, msg))


def interpolate(spec, c):
    """Unique basis-coefficient polynomial with eval = c; NotInCodeError else."""
    return interpolate_family(spec.gf, spec.family, spec.m, spec.d, c)


# --- the recursive codeword structure ---

def replicate_scaled(gf, v, d):
    """Concatenate (v, s^d v, s^(2d) v, ..., s^((q-2)d) v, 0), s primitive.

    For |v| = p_{m-1} this is the length-q^m expansion aligned with the
    affine point ordering; a projective codeword v expands to the affine
    evaluation of the lift of its polynomial.
    """
    v = gf.asarray(v)
    q = gf.q
    blocks = [gf.mul(gf.pow(gf.xi, s * d), v) for s in range(q - 1)]
    blocks.append(gf.zeros(1))
    return np.concatenate(blocks)


def recursive_compose(gf, u, v, d):
    """Assemble the projective codeword (u + replicate_scaled(v, d), v).

    u has affine length q^m, v projective length p_{m-1}; u from RM(m, d-1)
    and v from PRM(m-1, d) always land in PRM(m, d).
    """
    u = gf.asarray(u)
    v = gf.asarray(v)
    if len(u) != (gf.q - 1) * len(v) + 1:
        raise ValueError(f"block lengths {len(u)}, {len(v)} are not aligned")
    return np.concatenate([gf.add(u, replicate_scaled(gf, v, d)), v])
