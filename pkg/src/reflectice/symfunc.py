"""Partitions and the deformed symplectic Schur / Whittaker determinants.

Partitions are plain tuples of weakly decreasing non-negative integers.
The symmetric functions are determinant ratios: rows are indexed by the
strictly decreasing exponents mu = lambda + delta with delta = (N-1,...,0),
columns by the spectral variables, and the denominator is the type-C Weyl
denominator.  An explicit permutation/sign-flip sum over the same data is
kept as an independent oracle for the determinant path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalar import Scalar, ZERO, ONE, DegenerateSpectral


def positions_to_partition(positions, N: int):
    """Partition with lambda_j = x_{N-j+1} - N + j - 1 from particle sites."""
    if len(positions) != N:
        raise ValueError("need exactly N positions")
    prev = 0
    for x in positions:
        if not prev < x:
            raise ValueError("positions must be strictly increasing, x_1 >= 1")
        prev = x
    return tuple(positions[N - j] - N + j - 1 for j in range(1, N + 1))


def partition_to_positions(lam):
    """Inverse map: x_i = lambda_{N-i+1} + i."""
    N = len(lam)
    return [lam[N - i] + i for i in range(1, N + 1)]


def complement_positions(positions, M: int):
    """Sorted complement of a site list inside {1, ..., M}."""
    taken = set(positions)
    if not taken <= set(range(1, M + 1)):
        raise ValueError("positions must lie in 1..M")
    return [j for j in range(1, M + 1) if j not in taken]


def hat_partition(lam, M: int):
    """Box complement inside the M^N rectangle: hat_i = #{j : lambda_j <= M-i}."""
    if lam and lam[0] > M:
        raise ValueError("partition does not fit in width M")
    return tuple(sum(1 for p in lam if p <= M - i) for i in range(1, M + 1))


@dataclass
class SymParams:
    """Deformation parameter arrays for the symmetric functions.

    ``base`` is 0 when the arrays carry a boundary entry at index 0
    (symplectic case) and 1 when they start at index 1 (Whittaker case).
    ``alpha[i]`` / ``gamma[i]`` hold the parameter with subscript i; entries
    below ``base`` are unused padding so subscripts line up with indices.
    """

    alpha: list
    gamma: list
    base: int = 0

    def __post_init__(self):
        if self.base not in (0, 1):
            raise ValueError("base must be 0 or 1")
        if len(self.alpha) != len(self.gamma):
            raise ValueError("alpha and gamma must have equal length")
        if len(self.alpha) < self.base + 1:
            raise ValueError("arrays too short for the indexing base")

    @property
    def L(self) -> int:
        """Top subscript of the arrays."""
        return len(self.alpha) - 1

    def negated(self) -> "SymParams":
        return SymParams([-a for a in self.alpha],
                         [-g for g in self.gamma], self.base)


def _tail_products(z: Scalar, params: SymParams, mu: int) -> Scalar:
    """The two gamma tails shared by all row functions."""
    L = params.L
    out = ONE
    for j in range(mu + 2, L + 1):
        out *= 1 - params.gamma[j] * z
    for j in range(1, L + 1):
        out *= 1 - params.gamma[j] / z
    return out


def g_mu(z: Scalar, params: SymParams, mu: int) -> Scalar:
    """Row function of the deformed symplectic Schur determinant."""
    if z == 0:
        raise ZeroDivisionError("z must be nonzero")
    if params.base != 0:
        raise ValueError("g_mu uses base-0 parameter arrays")
    if mu + 1 > params.L:
        raise ValueError("mu + 1 must not exceed the array top index")
    out = ONE
    for j in range(0, mu + 1):
        out *= params.alpha[j] + (1 - params.alpha[j] * params.gamma[j]) * z
    return out * _tail_products(z, params, mu)


def h_pm_mu(z: Scalar, u: Scalar, params: SymParams, mu: int,
            sign: int) -> Scalar:
    """Row function of the deformed Whittaker determinant, sign = +1 or -1."""
    if z == 0:
        raise ZeroDivisionError("z must be nonzero")
    if params.base != 1:
        raise ValueError("h_pm_mu uses base-1 parameter arrays")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if mu + 1 > params.L:
        raise ValueError("mu + 1 must not exceed the array top index")
    out = z + sign * u
    for j in range(1, mu + 1):
        out *= params.alpha[j] + (1 - params.alpha[j] * params.gamma[j]) * z
    return out * _tail_products(z, params, mu)


def weyl_denominator(zs) -> Scalar:
    """Type-C Weyl denominator via its factorized product form."""
    N = len(zs)
    out = ONE if N % 2 == 0 else -ONE
    for j, zj in enumerate(zs, start=1):
        if zj == 0:
            raise ZeroDivisionError("spectral values must be nonzero")
        out *= zj ** (j - 1 - N) * (1 - zj * zj)
    for j in range(N):
        for k in range(j + 1, N):
            out *= (1 - zs[j] * zs[k]) * (1 - zs[j] / zs[k])
    return out


def weyl_denominator_direct(zs) -> Scalar:
    """The same denominator as an explicit determinant (test oracle)."""
    N = len(zs)
    mat = [[zs[k] ** (N - j + 1) - zs[k] ** (-N + j - 1)
            for k in range(N)] for j in range(1, N + 1)]
    return determinant(mat)


def determinant(mat) -> Scalar:
    """Fraction-free (Bareiss) determinant of a square Scalar matrix."""
    n = len(mat)
    if n == 0:
        return ONE
    a = [list(row) for row in mat]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant_cofactor(mat) -> Scalar:
    """Cofactor-expansion determinant, kept as a small-size cross-check."""
    n = len(mat)
    if n > 4:
        raise ValueError("cofactor expansion limited to n <= 4")
    if n == 0:
        return ONE
    if n == 1:
        return mat[0][0]
    out = ZERO
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * determinant_cofactor(minor)
        out += term if j % 2 == 0 else -term
    return out


def _mu_exponents(lam):
    N = len(lam)
    mu = [lam[j] + N - 1 - j for j in range(N)]
    if any(mu[j] <= mu[j + 1] for j in range(N - 1)):
        raise ValueError("parts must be weakly decreasing")
    return mu


def _det_ratio(zs, rows) -> Scalar:
    denom = weyl_denominator(zs)
    if denom == 0:
        raise DegenerateSpectral("Weyl denominator vanishes")
    mat = [[f(z) - f(1 / z) for z in zs] for f in rows]
    return determinant(mat) / denom


def sp_lambda(zs, params: SymParams, lam) -> Scalar:
    """Deformed symplectic Schur function as a determinant ratio."""
    if len(lam) != len(zs):
        raise ValueError("partition length must match the number of variables")
    mu = _mu_exponents(lam)
    rows = [lambda z, m=m: g_mu(z, params, m) for m in mu]
    return _det_ratio(zs, rows)


def o_lambda(zs, u: Scalar, params: SymParams, lam, sign: int) -> Scalar:
    """Deformed Whittaker function as a determinant ratio, sign = +1 or -1."""
    if len(lam) != len(zs):
        raise ValueError("partition length must match the number of variables")
    mu = _mu_exponents(lam)
    rows = [lambda z, m=m: h_pm_mu(z, u, params, m, sign) for m in mu]
    return _det_ratio(zs, rows)


def _expanded_sum(zs, rows) -> Scalar:
    """Numerator of the determinant ratio by explicit (sigma, tau) summation."""
    N = len(zs)
    if N > 6:
        raise ValueError("expanded sum limited to N <= 6")
    denom = weyl_denominator(zs)
    if denom == 0:
        raise DegenerateSpectral("Weyl denominator vanishes")
    total = ZERO
    for sigma in itertools.permutations(range(N)):
        sgn = _perm_sign(sigma)
        for taus in itertools.product((1, -1), repeat=N):
            term = ONE
            for j in range(N):
                zz = zs[sigma[j]]
                term *= rows[j](zz if taus[sigma[j]] == 1 else 1 / zz)
            flips = sum(1 for tv in taus if tv == -1)
            total += (sgn if flips % 2 == 0 else -sgn) * term
    return total / denom


def _perm_sign(sigma) -> int:
    inv = sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma))
              if sigma[i] > sigma[j])
    return 1 if inv % 2 == 0 else -1


def sp_expanded_sum(zs, params: SymParams, lam) -> Scalar:
    """Oracle for sp_lambda: explicit permutation/sign-flip summation."""
    mu = _mu_exponents(lam)
    rows = [lambda z, m=m: g_mu(z, params, m) for m in mu]
    return _expanded_sum(zs, rows)


def o_expanded_sum(zs, u: Scalar, params: SymParams, lam,
                   sign: int) -> Scalar:
    """Oracle for o_lambda: explicit permutation/sign-flip summation."""
    mu = _mu_exponents(lam)
    rows = [lambda z, m=m: h_pm_mu(z, u, params, m, sign) for m in mu]
    return _expanded_sum(zs, rows)


def prefactor(kind: str, zs_or_ws, t_or_u: Scalar) -> Scalar:
    """Overall factor relating a wavefunction to its symmetric function.

    Kind I takes the z's and t; kind II takes the square-root branches w
    and u, so the half-integer powers z_j^{j-1/2-N} become w_j^{2j-1-2N}.
    """
    N = len(zs_or_ws)
    if any(a == 0 for a in zs_or_ws):
        raise ZeroDivisionError("spectral values must be nonzero")
    if kind == "I":
        t = t_or_u
        zs = list(zs_or_ws)
        out = ONE
        for j, zj in enumerate(zs, start=1):
            out *= zj ** (j - 1 - N) * (1 + t * zj * zj)
    elif kind == "II":
        u = t_or_u
        t = -u * u
        ws = list(zs_or_ws)
        zs = [w * w for w in ws]
        out = ONE
        for j, wj in enumerate(ws, start=1):
            out *= wj ** (2 * j - 1 - 2 * N) * (1 - u * wj * wj)
    else:
        raise ValueError("kind must be I or II")
    for j in range(N):
        for k in range(j + 1, N):
            out *= (1 + t * zs[j] * zs[k]) * (1 + t * zs[j] / zs[k])
    return out
