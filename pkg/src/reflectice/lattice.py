"""Row-to-row transfer operators and reflecting-boundary partition functions.

The quantum space of an M-site chain is the 2^M dimensional Fock space; a
basis state is an M-bit mask whose bit j-1 is set iff site j is occupied.
State vectors are plain lists of 2^M Scalars indexed by that mask.

Monodromy elements are applied by streaming: a pair of quantum-space vectors
indexed by the auxiliary state is carried through the chain one site factor
at a time, so memory stays at two vectors of length 2^M.  A Kronecker-product
assembly of the same operators is kept as an independent oracle for small M.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE, ParamPoint
from .vertex import l_gamma, l_delta, k_type1, k_type2, embed_two_site, mat_mul

MAX_SITES = 20


def positions_to_state(positions, M: int) -> int:
    """Bit mask of an occupation list 1 <= x_1 < ... < x_N <= M."""
    _validate_positions(positions, M)
    mask = 0
    for x in positions:
        mask |= 1 << (x - 1)
    return mask


def state_to_positions(mask: int, M: int):
    """Sorted site list of a basis state mask; inverse of positions_to_state."""
    return [j for j in range(1, M + 1) if mask & (1 << (j - 1))]


def hole_state(hole_positions, M: int) -> int:
    """Mask of the fully occupied chain with holes punched at the given sites."""
    return ((1 << M) - 1) ^ positions_to_state(hole_positions, M)


def zero_vector(M: int):
    return [ZERO] * (1 << M)


def basis_vector(M: int, mask: int):
    v = zero_vector(M)
    v[mask] = ONE
    return v


def _validate_positions(positions, M):
    if M < 1 or M > MAX_SITES:
        raise ValueError("need 1 <= M <= %d" % MAX_SITES)
    prev = 0
    for x in positions:
        if not prev < x <= M:
            raise ValueError("positions must be strictly increasing in [1, M]")
        prev = x


def _apply_site(op4, site: int, v0, v1):
    """One site factor of a monodromy product, acting on (aux, site) pairs.

    v0 and v1 are the quantum-space amplitudes with auxiliary state 0 and 1.
    """
    bit = 1 << (site - 1)
    dim = len(v0)
    n0 = [ZERO] * dim
    n1 = [ZERO] * dim
    for a_in, vin in ((0, v0), (1, v1)):
        for s in range(dim):
            amp = vin[s]
            if not amp:
                continue
            q_in = 1 if s & bit else 0
            col = 2 * a_in + q_in
            for a_out, nout in ((0, n0), (1, n1)):
                for q_out in (0, 1):
                    e = op4[2 * a_out + q_out][col]
                    if e:
                        s_out = (s & ~bit) | (bit if q_out else 0)
                        nout[s_out] += amp * e
    return n0, n1


def apply_monodromy_element(kind: str, z: Scalar, point: ParamPoint, v):
    """Act with A, B (outgoing row) or Atilde, Btilde (returning row) on v.

    The outgoing row multiplies the site operators at spectral argument 1/z
    from site M down to site 1; the returning row multiplies the companion
    operators at argument z from site 1 up to site M.  The auxiliary space is
    then projected on the element's in/out states.
    """
    if z == 0:
        raise ZeroDivisionError("z must be nonzero")
    M = point.M
    if kind in ("A", "B"):
        ops = [l_gamma(1 / z, point.t, point.alpha[j], point.gamma[j])
               for j in range(1, M + 1)]
        order = range(1, M + 1)  # rightmost factor is site 1
        a_out, a_in = (0, 0) if kind == "A" else (0, 1)
    elif kind in ("Atilde", "Btilde"):
        ops = [l_delta(z, point.t, point.alpha[j], point.gamma[j])
               for j in range(1, M + 1)]
        order = range(M, 0, -1)  # rightmost factor is site M
        a_out, a_in = (1, 1) if kind == "Atilde" else (0, 1)
    else:
        raise ValueError("kind must be A, B, Atilde or Btilde")
    pair = [zero_vector(M), zero_vector(M)]
    pair[a_in] = list(v)
    for site in order:
        pair = list(_apply_site(ops[site - 1], site, pair[0], pair[1]))
    return pair[a_out]


def double_row_weights(kind: str, z_or_w: Scalar, point: ParamPoint):
    """Boundary coefficients multiplying Btilde*A and Atilde*B."""
    if z_or_w == 0:
        raise ZeroDivisionError("spectral argument must be nonzero")
    if kind == "I":
        k = k_type1(z_or_w, point.t, point.alpha[0], point.gamma[0])
    elif kind == "II":
        if point.u is None:
            raise ValueError("kind II needs the square-root branch u")
        k = k_type2(z_or_w, point.u)
    else:
        raise ValueError("kind must be I or II")
    return k[0][0], k[1][1]


def apply_double_row_B(kind: str, z_or_w: Scalar, point: ParamPoint, v):
    """One creation operator of the reflecting-boundary model applied to v."""
    c_out, c_ret = double_row_weights(kind, z_or_w, point)
    z = z_or_w if kind == "I" else z_or_w * z_or_w
    term1 = apply_monodromy_element(
        "Btilde", z, point, apply_monodromy_element("A", z, point, v))
    term2 = apply_monodromy_element(
        "Atilde", z, point, apply_monodromy_element("B", z, point, v))
    return [c_out * x + c_ret * y for x, y in zip(term1, term2)]


def _spectral_args(kind: str, point: ParamPoint):
    if kind == "I":
        return point.z
    if kind == "II":
        if point.w is None:
            raise ValueError("kind II needs the square-root branches w")
        return point.w
    raise ValueError("kind must be I or II")


def wavefunction(kind: str, point: ParamPoint, positions) -> Scalar:
    """Overlap of N double-row creations on the empty chain with <positions|.

    The innermost operator (spectral parameter z_N) acts first on the empty
    state; the result is paired with the N-particle basis bra.
    """
    if len(positions) != point.N:
        raise ValueError("need exactly N positions")
    mask = positions_to_state(positions, point.M)
    args = _spectral_args(kind, point)
    v = basis_vector(point.M, 0)
    for a in reversed(args):
        v = apply_double_row_B(kind, a, point, v)
    return v[mask]


def dual_wavefunction(kind: str, point: ParamPoint, hole_positions) -> Scalar:
    """Overlap of N double-row creations on a hole state with the full bra."""
    if len(hole_positions) != point.N:
        raise ValueError("need exactly N hole positions")
    M = point.M
    start = hole_state(hole_positions, M)
    args = _spectral_args(kind, point)
    v = basis_vector(M, start)
    for a in reversed(args):
        v = apply_double_row_B(kind, a, point, v)
    return v[(1 << M) - 1]


def dwbp(kind: str, point: ParamPoint) -> Scalar:
    """Domain-wall boundary partition function: N = M, all sites filled."""
    if point.N != point.M:
        raise ValueError("domain-wall case needs N = M")
    return wavefunction(kind, point, list(range(1, point.M + 1)))


def _monodromy_matrix(tilde: bool, z: Scalar, point: ParamPoint):
    """Full (M+1)-qubit monodromy as a dense matrix; auxiliary qubit first."""
    M = point.M
    n = M + 1
    factors = []
    for j in range(1, M + 1):
        if tilde:
            op = l_delta(z, point.t, point.alpha[j], point.gamma[j])
        else:
            op = l_gamma(1 / z, point.t, point.alpha[j], point.gamma[j])
        # embed_two_site counts qubit 0 as the most significant bit, while
        # state masks here keep site j at bit j-1, so site j is qubit n-j.
        factors.append(embed_two_site(op, 0, n - j, n))
    # outgoing row: site M ... site 1; returning row: site 1 ... site M
    if not tilde:
        factors.reverse()
    out = factors[0]
    for f in factors[1:]:
        out = mat_mul(out, f)
    return out


def _aux_block(mat, a_out: int, a_in: int, M: int):
    dim = 1 << M
    ro = a_out * dim
    co = a_in * dim
    return [[mat[ro + i][co + j] for j in range(dim)] for i in range(dim)]


def brute_force_wavefunction(kind: str, point: ParamPoint, positions) -> Scalar:
    """Independent oracle: dense Kronecker-product evaluation of wavefunction.

    Builds every monodromy element as an explicit 2^M x 2^M matrix and
    multiplies; kept deliberately separate from the streaming path.
    """
    if point.M > 10 or point.N > 4:
        raise ValueError("brute force limited to M <= 10, N <= 4")
    if len(positions) != point.N:
        raise ValueError("need exactly N positions")
    M = point.M
    mask = positions_to_state(positions, M)
    args = _spectral_args(kind, point)
    v = basis_vector(M, 0)
    for a in reversed(args):
        z = a if kind == "I" else a * a
        t_mat = _monodromy_matrix(False, z, point)
        tt_mat = _monodromy_matrix(True, z, point)
        a_mat = _aux_block(t_mat, 0, 0, M)
        b_mat = _aux_block(t_mat, 0, 1, M)
        at_mat = _aux_block(tt_mat, 1, 1, M)
        bt_mat = _aux_block(tt_mat, 0, 1, M)
        c_out, c_ret = double_row_weights(kind, a, point)
        dim = 1 << M
        drb = [[c_out * x + c_ret * y
                for x, y in zip(row1, row2)]
               for row1, row2 in zip(mat_mul(bt_mat, a_mat),
                                     mat_mul(at_mat, b_mat))]
        v = [sum((drb[i][j] * v[j] for j in range(dim) if v[j]), ZERO)
             for i in range(dim)]
    return v[mask]
