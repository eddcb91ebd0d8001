"""Closed-form expressions: one-particle formulas, recursion factors,
factorized partition functions, and product sides of the Cauchy identities.

Everything here is evaluated directly from the printed formulas, with no use
of the lattice engine, so each equality test against lattice values is a
genuine dual-path check.  Type II half-integer powers are evaluated on the
rational branch z^{1/2} = w, sqrt(-t) = u.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE, ParamPoint, DegenerateSpectral


def _prod(factors) -> Scalar:
    out = ONE
    for f in factors:
        out *= f
    return out


def telescoping_sides(z: Scalar, alpha, gamma, x1: int):
    """Both sides of the summation identity behind the one-particle formulas.

    alpha and gamma are indexed so that alpha[k] carries subscript k; entries
    1..x1-1 are used.  Returns (lhs, rhs).
    """
    if z == 0:
        raise ZeroDivisionError("z must be nonzero")
    lhs = ZERO
    for j in range(1, x1):
        term = ONE
        for k in range(1, j):
            term *= (alpha[k] + (1 - alpha[k] * gamma[k]) / z) \
                * (1 - gamma[k] * z)
        for k in range(j + 1, x1):
            term *= (alpha[k] + (1 - alpha[k] * gamma[k]) * z) \
                * (1 - gamma[k] / z)
        lhs += term
    lhs *= z - 1 / z
    rhs = _prod((alpha[k] + (1 - alpha[k] * gamma[k]) * z)
                * (1 - gamma[k] / z) for k in range(1, x1)) \
        - _prod((alpha[k] + (1 - alpha[k] * gamma[k]) / z)
                * (1 - gamma[k] * z) for k in range(1, x1))
    return lhs, rhs


def one_particle_wavefunction(kind: str, point: ParamPoint, x1: int) -> Scalar:
    """Closed form of the N = 1 wavefunction at particle position x1."""
    M = point.M
    if point.N != 1:
        raise ValueError("one-particle formula needs N = 1")
    z = point.z[0]
    t = point.t
    al, ga = point.alpha, point.gamma
    if z * z == 1:
        raise DegenerateSpectral("formula has a z^2 - 1 denominator")
    if kind == "I":
        pref = (1 + t * z * z) / (z * z - 1)
        lo = 0
    elif kind == "II":
        pref = point.w[0] * (1 - point.u * z) / (z * z - 1)
        lo = 1
    else:
        raise ValueError("kind must be I or II")
    total = ZERO
    for tau in (1, -1):
        zt = z if tau == 1 else 1 / z
        term = ONE
        if kind == "II":
            term *= zt + point.u
        for j in range(lo, x1):
            term *= al[j] + (1 - al[j] * ga[j]) * zt
        for j in range(x1 + 1, M + 1):
            term *= 1 - ga[j] * zt
        for j in range(1, M + 1):
            term *= 1 - ga[j] / zt
        total += tau * term
    return pref * total


def one_particle_dual(kind: str, point: ParamPoint, x1bar: int) -> Scalar:
    """Closed form of the N = 1 dual wavefunction at hole position x1bar."""
    M = point.M
    if point.N != 1:
        raise ValueError("one-particle formula needs N = 1")
    z = point.z[0]
    t = point.t
    al, ga = point.alpha, point.gamma
    tz = t * z
    if tz * tz == 1:
        raise DegenerateSpectral("formula has a t^2 z^2 - 1 denominator")
    if kind == "I":
        pref = t ** M * (1 + t * z * z) / (tz * tz - 1)
        lo = 0
    elif kind == "II":
        pref = t ** M * point.w[0] * (1 - point.u * z) / (tz * tz - 1)
        lo = 1
    else:
        raise ValueError("kind must be I or II")
    total = ZERO
    for tau in (1, -1):
        w = tz if tau == 1 else 1 / tz
        term = ONE
        if kind == "II":
            term *= w - point.u
        for j in range(lo, x1bar):
            term *= -al[j] + (1 - al[j] * ga[j]) * w
        for j in range(x1bar + 1, M + 1):
            term *= 1 + ga[j] * w
        for j in range(1, M + 1):
            term *= 1 + ga[j] / w
        total += tau * term
    return pref * total


def ik_recursion_factor(kind: str, point: ParamPoint) -> Scalar:
    """Frozen-part factor of the gamma_M = z_N recursion (x_N = M case).

    Multiplies the (M-1, N-1) wavefunction at the unchanged leading spectral
    parameters; the point passed in is the original (M, N) one.
    """
    M, N = point.M, point.N
    zN = point.z[N - 1]
    t = point.t
    al, ga = point.alpha, point.gamma
    out = ONE
    for j in range(N):
        out *= t * zN * point.z[j] + 1
    for j in range(N - 1):
        out *= t + zN / point.z[j]
    lo = 0 if kind == "I" else 1
    for j in range(lo, M):
        out *= (1 - al[j] * ga[j]) / zN + al[j]
    for j in range(1, M):
        out *= 1 - ga[j] * zN
    if kind == "II":
        out /= point.w[N - 1]
    elif kind != "I":
        raise ValueError("kind must be I or II")
    return out


def ik_dual_recursion_factor(kind: str, point: ParamPoint) -> Scalar:
    """Frozen-part factor of the dual recursion at gamma_M = -1/(t z_N).

    The dual recursion applies the spectral parameters in reversed order
    z_N, ..., z_1; the caller is responsible for that ordering.
    """
    M, N = point.M, point.N
    zN = point.z[N - 1]
    t = point.t
    al, ga = point.alpha, point.gamma
    out = ONE
    for j in range(N):
        out *= 1 + 1 / (t * zN * point.z[j])
    for j in range(N - 1):
        out *= 1 + point.z[j] / (t * zN)
    lo = 0 if kind == "I" else 1
    for j in range(lo, M):
        out *= t * (1 - al[j] * ga[j]) * zN - al[j]
    for j in range(1, M):
        out *= t + ga[j] / zN
    if kind == "II":
        out *= -point.u * point.w[N - 1]
    elif kind != "I":
        raise ValueError("kind must be I or II")
    return out


def ik_factorization_factor(point: ParamPoint) -> Scalar:
    """Column-freezing factor for x_N != M, identical for both kinds."""
    gM = point.gamma[point.M]
    return _prod((1 - gM * zj) * (1 - gM / zj) for zj in point.z)


def ik_dual_factorization_factor(point: ParamPoint) -> Scalar:
    """Column-freezing factor of the dual wavefunction for x_N != M."""
    gM = point.gamma[point.M]
    t = point.t
    return _prod((1 + t * gM * zj) * (t + gM / zj) for zj in point.z)


def dwbp_product(kind: str, point: ParamPoint) -> Scalar:
    """Fully factorized domain-wall boundary partition function."""
    M = point.M
    if point.N != M:
        raise ValueError("domain-wall case needs N = M")
    t = point.t
    al, ga = point.alpha, point.gamma
    out = ONE
    if kind == "I":
        for j, zj in enumerate(point.z, start=1):
            out *= zj ** (j - 1 - M) * (1 + t * zj * zj)
        lo = 0
    elif kind == "II":
        u = point.u
        for j, wj in enumerate(point.w, start=1):
            out *= wj ** (2 * j - 1 - 2 * M) * (1 - u * wj * wj) \
                * (1 + u * ga[j])
        lo = 1
    else:
        raise ValueError("kind must be I or II")
    for j in range(M):
        for k in range(j + 1, M):
            out *= (1 + t * point.z[j] * point.z[k]) \
                * (1 + t * point.z[j] / point.z[k])
    for j in range(lo, M + 1):
        for k in range(j + 1, M + 1):
            out *= 1 + al[j] * (ga[k] - ga[j])
    for j in range(1, M + 1):
        for k in range(j + 1, M + 1):
            out *= 1 - ga[j] * ga[k]
    return out


def dual_cauchy_rhs(kind: str, xs, ys, alpha, gamma, u=None) -> Scalar:
    """Product side of the dual Cauchy identity.

    Kind I uses parameter arrays indexed 0..N+M, kind II arrays indexed
    1..N+M (index 0 is padding) plus the branch scalar u.
    """
    N, M = len(xs), len(ys)
    L = N + M
    out = ONE
    for y in ys:
        out *= y ** (-N)
    for x in xs:
        for y in ys:
            out *= (1 + x * y) * (1 + y / x)
    if kind == "I":
        lo = 0
    elif kind == "II":
        if u is None:
            raise ValueError("kind II needs u")
        lo = 1
        for j in range(1, L + 1):
            out *= 1 + u * gamma[j]
    else:
        raise ValueError("kind must be I or II")
    for j in range(lo, L + 1):
        for k in range(j + 1, L + 1):
            out *= 1 + alpha[j] * (gamma[k] - gamma[j])
    for j in range(1, L + 1):
        for k in range(j + 1, L + 1):
            out *= 1 - gamma[j] * gamma[k]
    return out
