"""Continued fractions of the recurrence, tails, and homographies.

The fraction attached to a scheme is

    R(z) = 1/(rho_0(z-c_0) - lam_1 W_1(z)/(rho_1(z-c_1) - lam_2 W_2(z)/(...)))

whose depth-n convergent equals Q_n(z)/P_n(z).  A CFracSpec may start at a
later coefficient index (start = kp+1 gives the (kp+1)-th tail, whose depth-m
convergent is the ratio of second- to first-kind associated polynomials of
that order), and perturbations are applied by absolute coefficient index.

Evaluation is bottom-up, so a vanishing denominator is detected at a specific
coefficient index: exact mode raises PoleError naming it, float mode returns a
signed infinity and lets the enclosing level absorb it.

Homographies u -> (a u + b)/(c u + d) with polynomial entries and nonzero
determinant tie the perturbed fraction to the unperturbed one:

    R_n(z; mu, nu) = apply(cof(S), R_n(z))        (matched truncation, n >= kp+1)

where S is the perturbation transfer matrix and cof its cofactor matrix.  The
identity is exact at every finite matched depth, not just in the limit,
because both sides reduce to the same tail value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PoleError
from .polymat import PolyMatrix2
from .schemes import Perturbation
from .transfer import f_matrix, perturbation_transfer


@dataclass(frozen=True)
class CFracSpec:
    scheme: object
    perturbation: object = None
    start: int = 0

    def pert(self):
        return self.perturbation or Perturbation.none()


def convergent(spec, depth, z):
    """Depth-n convergent (= Q_n/P_n of the shifted, perturbed families).

    depth 0 is the empty fraction, 0.  Exact z gives an exact scalar; float z
    runs in floating point, where a vanishing nested denominator produces a
    signed infinity instead of an error.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    numeric = isinstance(z, (float, complex))
    if depth == 0:
        return 0.0 if numeric else Fraction(0)
    scheme = spec.scheme
    pert = spec.pert()
    s = spec.start

    def b(m):
        rho, c = scheme.rho(m), pert.center(scheme, m)
        if numeric:
            return float(rho) * (z - float(c))
        return rho * (z - c)

    def a(m):
        lam = pert.coefficient(scheme, m)
        w = scheme.weight_at(m, z)
        if numeric:
            return float(lam) * w
        return lam * w

    t = b(s + depth - 1)
    for j in range(depth - 2, -1, -1):
        m = s + j + 1
        num = a(m)
        if not num:
            # A vanishing partial numerator truncates the fraction here
            # (e.g. the special form at z = +-i*omega).
            t = b(s + j)
            continue
        t = b(s + j) - _divide(num, t, m, numeric)
    return _divide(1, t, s, numeric)


def _divide(num, den, index, numeric):
    if numeric:
        if den == 0.0:
            return math.copysign(math.inf, float(num))
        return num / den
    if den == 0:
        raise PoleError(index)
    return num / den


def tail_convergent(scheme, kp, depth, z, perturbation=None):
    """Convergent of the fraction that remains after deleting indices <= kp.

    kp = -1 is the full fraction.  depth 0 returns 0 (the empty tail), the
    value the matched-truncation chain needs at n = kp+1.
    """
    if kp < -1:
        raise ValueError("kp must be >= -1")
    return convergent(CFracSpec(scheme, perturbation, kp + 1), depth, z)


class Homography:
    """u -> (a(z) u + b(z)) / (c(z) u + d(z)) with polynomial entries."""

    def __init__(self, matrix):
        if not isinstance(matrix, PolyMatrix2):
            raise TypeError("Homography wraps a PolyMatrix2")
        if matrix.det().is_zero():
            raise ValueError("homography determinant vanishes identically")
        self.matrix = matrix

    @staticmethod
    def identity():
        return Homography(PolyMatrix2.identity())

    def compose(self, other):
        """self after other (matrix product)."""
        return Homography(self.matrix @ other.matrix)

    def inverse(self):
        """Projective inverse: adj(M) undoes M wherever det(M)(z) != 0."""
        return Homography(self.matrix.adjugate())

    def apply(self, u, z):
        (a, b), (c, d) = self.matrix.eval_at(z)
        if isinstance(u, float) and math.isinf(u):
            num, den = a, c
        else:
            num, den = a * u + b, c * u + d
        if isinstance(u, (float, complex)) or isinstance(z, (float, complex)):
            num, den = complex(num), complex(den)
            if den == 0:
                return math.copysign(math.inf, num.real if num.real else 1.0)
            value = num / den
            return value.real if value.imag == 0 else value
        if den == 0:
            raise PoleError(message="homography denominator vanished at z = %s" % (z,))
        return num / den


def apply_homography(h, u, z):
    return h.apply(u, z)


def lemma1_matrix(scheme, k=None, kp=None, mu=None, nu=None):
    """The homography mapping the plain (kp+1)-th tail to the perturbed fraction.

    Entries (g = lambda_{kp+1} W_{kp+1}, all sequences carrying the full
    perturbation, which only reaches them through levels <= kp):

        [[ g * Q_kp,  -Q_{kp+1} ],
         [ g * P_kp,  -P_{kp+1} ]]

    Satisfies R_n(z; mu, nu) = apply(., tail at depth n-kp-1) exactly for
    n >= kp+1.  Perturbation orders with k <= kp are supported here (the
    matrix lives at level kp).
    """
    pert = Perturbation(k=k, mu=mu, kp=kp, nu=nu)
    level = pert.max_level()
    if pert.kp is not None:
        if pert.k is not None and pert.k > pert.kp:
            raise ValueError("lemma1_matrix needs k <= kp")
        level = pert.kp
    if level < 0:
        raise ValueError("lemma1_matrix needs at least one perturbation level")
    from .sequences import gen_first_kind, gen_second_kind

    p = gen_first_kind(scheme, pert, level + 1)
    q = gen_second_kind(scheme, pert, level + 1)
    g = scheme.lam(level + 1) * scheme.weight_poly(level + 1)
    return Homography(PolyMatrix2(
        g * q[level], -q[level + 1],
        g * p[level], -p[level + 1],
    ))


def spectral_residual(scheme, k=None, kp=None, mu=None, nu=None, z=0, depth=None):
    """R_depth(z; mu,nu) - apply(cof(S), R_depth(z)) at matched truncation.

    Exactly zero (exact z) whenever depth >= max(k, kp) + 1.  Poles of either
    convergent propagate as PoleError.
    """
    pert = Perturbation(k=k, mu=mu, kp=kp, nu=nu)
    level = pert.max_level()
    if depth is None or depth < level + 1:
        raise ValueError("matched truncation needs depth >= max perturbation level + 1")
    s = perturbation_transfer(scheme, k, kp, mu, nu)
    transform = Homography(s.cofactor_matrix())
    lhs = convergent(CFracSpec(scheme, pert), depth, z)
    rhs = transform.apply(convergent(CFracSpec(scheme, None), depth, z), z)
    return lhs - rhs


def spectral_gap(scheme, k=None, kp=None, mu=None, nu=None, z=0.0,
                 depth_perturbed=8, depth_plain=8):
    """|R(z;mu,nu) at one depth - transformed R(z) at another| as a float.

    Diagnostic for unmatched truncations: decreases toward 0 as both depths
    grow (the limit functions satisfy the transformation identity).
    """
    pert = Perturbation(k=k, mu=mu, kp=kp, nu=nu)
    s = perturbation_transfer(scheme, k, kp, mu, nu)
    transform = Homography(s.cofactor_matrix())
    zf = complex(z) if isinstance(z, complex) else float(z)
    lhs = convergent(CFracSpec(scheme, pert), depth_perturbed, zf)
    rhs = transform.apply(convergent(CFracSpec(scheme, None), depth_plain, zf), zf)
    return abs(lhs - rhs)


def lemma2_residual(scheme, kp, n, z):
    """g * tail_{n-kp-1}(z) - apply(F_{kp+1}, R_n(z)) with g = lam_{kp+1} W_{kp+1}.

    The companion identity: the F-matrix homography maps the full fraction
    back to its (kp+1)-th tail.  Exactly zero for n >= kp+1 at exact z away
    from poles.
    """
    if n < kp + 1:
        raise ValueError("needs n >= kp + 1")
    g = scheme.lam(kp + 1) * scheme.weight_at(kp + 1, z)
    tail = tail_convergent(scheme, kp, n - kp - 1, z)
    h = Homography(f_matrix(scheme, None, kp))
    return g * tail - h.apply(convergent(CFracSpec(scheme, None), n, z), z)
