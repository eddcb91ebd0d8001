"""Exact rational scalars, deterministic sampling and exact interpolation.

Everything in this package is computed over arbitrary-precision rationals;
``Scalar`` is an alias for :class:`fractions.Fraction`.  Evaluation points are
drawn by :func:`sample_param_point`, which rejects all the degenerate loci
(unit spectral parameters, coinciding or reciprocal pairs, vanishing
``1 + t z_j z_k`` factors) that the closed-form expressions divide by.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(s) -> Scalar:
    """Parse a "p/q" (or "p") string into a Scalar."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def format_scalar(x: Scalar) -> str:
    """Render a Scalar as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class SamplingError(RuntimeError):
    """Raised when the retry budget is exhausted (bounds too small for M, N)."""


class DegenerateSpectral(ZeroDivisionError):
    """Raised when a formula is evaluated at a vanishing denominator."""


@dataclass
class ParamPoint:
    """A full rational evaluation point for one lattice computation.

    ``alpha`` and ``gamma`` are indexed 0..M; index 0 is used only by the
    type I boundary weight.  In type II mode ``u`` and ``w`` are the chosen
    square-root branches, with ``t = -u**2`` and ``z[j] = w[j]**2``.
    """

    M: int
    N: int
    t: Scalar
    z: list
    alpha: list
    gamma: list
    u: Optional[Scalar] = None
    w: Optional[list] = None

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be >= 1")
        if self.N < 0:
            raise ValueError("N must be >= 0")
        if len(self.z) != self.N:
            raise ValueError("need exactly N spectral parameters")
        if len(self.alpha) != self.M + 1 or len(self.gamma) != self.M + 1:
            raise ValueError("alpha and gamma must be indexed 0..M")
        if any(zj == 0 for zj in self.z):
            raise ValueError("spectral parameters must be nonzero")
        if self.u is not None and -self.u * self.u != self.t:
            raise ValueError("t must equal -u^2")
        if self.w is not None:
            if len(self.w) != self.N:
                raise ValueError("need exactly N square-root branches")
            if any(wj * wj != zj for wj, zj in zip(self.w, self.z)):
                raise ValueError("w_j^2 must equal z_j")

    @property
    def is_type2(self) -> bool:
        return self.u is not None

    def replace_gamma(self, j: int, value: Scalar) -> "ParamPoint":
        gamma = list(self.gamma)
        gamma[j] = value
        return ParamPoint(self.M, self.N, self.t, list(self.z),
                          list(self.alpha), gamma, self.u,
                          None if self.w is None else list(self.w))

    def reversed_z(self) -> "ParamPoint":
        return ParamPoint(self.M, self.N, self.t, list(reversed(self.z)),
                          list(self.alpha), list(self.gamma), self.u,
                          None if self.w is None else list(reversed(self.w)))

    def shrink(self) -> "ParamPoint":
        """Drop site M and the innermost spectral parameter (IK recursion)."""
        return ParamPoint(self.M - 1, self.N - 1, self.t, self.z[:-1],
                          self.alpha[:-1], self.gamma[:-1], self.u,
                          None if self.w is None else self.w[:-1])

    def drop_site(self) -> "ParamPoint":
        """Drop site M only, keeping all spectral parameters."""
        return ParamPoint(self.M - 1, self.N, self.t, list(self.z),
                          self.alpha[:-1], self.gamma[:-1], self.u,
                          None if self.w is None else list(self.w))


def _spectral_ok(t, zs):
    for j, zj in enumerate(zs):
        if zj in (0, 1, -1):
            return False
        if t * zj == 1 or t * zj == -1:
            return False
        for zk in zs[j:]:
            if t * zj * zk in (1, -1) or t * zj / zk in (1, -1):
                return False
        for zk in zs[j + 1:]:
            if zj == zk or zj * zk == 1:
                return False
    return True


def sample_param_point(seed: int, M: int, N: int, mode: str = "typeI",
                       bounds: int = 10, max_tries: int = 5000) -> ParamPoint:
    """Draw a deterministic non-degenerate rational parameter point.

    All scalars have numerator and denominator in [1, bounds].  In "typeII"
    mode the square roots u and w are drawn and t, z derived from them.
    """
    if M < 1 or N < 0:
        raise ValueError("need M >= 1, N >= 0")
    if bounds < 2:
        raise ValueError("bounds must be >= 2")
    if mode not in ("typeI", "typeII"):
        raise ValueError("mode must be typeI or typeII")
    rng = random.Random(seed)

    def draw():
        return Fraction(rng.randint(1, bounds), rng.randint(1, bounds))

    for _ in range(max_tries):
        u = w = None
        if mode == "typeII":
            u = draw()
            t = -u * u
            w = [draw() for _ in range(N)]
            zs = [wj * wj for wj in w]
        else:
            t = draw()
            zs = [draw() for _ in range(N)]
        if t in (0, 1, -1):
            continue
        if not _spectral_ok(t, zs):
            continue
        alpha = [draw() for _ in range(M + 1)]
        gamma = [draw() for _ in range(M + 1)]
        return ParamPoint(M, N, t, zs, alpha, gamma, u, w)
    raise SamplingError(
        "no non-degenerate point found for M=%d N=%d bounds=%d" % (M, N, bounds))


def poly_eval(coeffs, x: Scalar) -> Scalar:
    """Evaluate a polynomial given lowest-degree-first coefficients."""
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_degree(coeffs) -> int:
    """Degree of a trimmed coefficient list; -1 for the zero polynomial."""
    return len(coeffs) - 1


def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate_univariate(samples) -> list:
    """Exact Lagrange interpolation through (x, y) pairs.

    Returns coefficients lowest degree first with trailing zeros trimmed;
    the zero polynomial comes back as [].
    """
    xs = [Fraction(x) for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    n = len(xs)
    if n == 0:
        raise ValueError("need at least one sample")
    result = [ZERO] * n
    for i, (xi, yi) in enumerate(samples):
        xi = Fraction(xi)
        yi = Fraction(yi)
        # Build the Lagrange basis polynomial for node i.
        basis = [ONE]
        denom = ONE
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            new = [ZERO] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += -xj * c
                new[k + 1] += c
            basis = new
        scale = yi / denom
        for k, c in enumerate(basis):
            result[k] += scale * c
    return _trim(result)
