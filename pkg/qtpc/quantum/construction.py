import logging
import math
from typing import Any, Dict, Optional

import numpy as np

from qtpc.algebra.field import Extension, field
from qtpc.codes.base import LinearCode
from qtpc.codes.families import (FireCode, is_reversible, mds_dual_containing,
                                 reed_solomon, repetition, subfield_subcode)
from qtpc.codes.tensor import build_cl, tpc_build
from qtpc.errors import HypothesisError
from qtpc.quantum.stabilizer import (BurstCapability, Purity, StabilizerCode,
                                     css, hermitian_code)


def _containment(c1: LinearCode, c2: LinearCode) -> Dict[str, bool]:
    outer = subfield_subcode(c2, c1.field)
    if c1.q == 2:
        return {'c1': c1.is_dual_containing(),
                'psi_c2': outer.is_dual_containing()}
    return {'c1': c1.is_hermitian_dual_containing(),
            'psi_c2': outer.is_hermitian_dual_containing()}


def _assert_purity(code: StabilizerCode) -> StabilizerCode:
    if code.purity is Purity.UNKNOWN:
        code.purity = Purity.ASSERTED
    return code


def pure_qtpc(c1: LinearCode, c2: LinearCode, variant: str = 'psi',
              config: Optional[Dict[str, Any]] = None) -> StabilizerCode:
    """Pure QTPC [[n1n2, n1n2 − 2ρ1ρ2, min{d1, d2}]].

    The tensor product code is dual-containing (Hermitian dual-containing
    over GF(4)) whenever C1 or the subfield image ψ(C2) is, and the CSS
    (respectively Hermitian) construction is applied to it.

    Parameters
    ----------
    c1 : LinearCode
        Inner code over GF(2) or GF(4).
    c2 : LinearCode
        Outer code over GF(q^ρ1).
    variant : str
        Parity-check form of the tensor product, see :func:`tpc_build`.
    config : Dict[str, Any], optional
        Distance search overrides.

    Raises
    ------
    HypothesisError
        If neither C1 nor ψ(C2) is (Hermitian) dual-containing.
    """
    containment = _containment(c1, c2)
    kind = 'dual-containing' if c1.q == 2 else 'Hermitian dual-containing'
    if not any(containment.values()):
        raise HypothesisError(
            f'C1 or ψ(C2) must be {kind}',
            f'C1: {containment["c1"]}, ψ(C2): {containment["psi_c2"]}'
        )
    tpc = tpc_build(c1, c2, variant)
    if c1.q == 2:
        if not tpc.is_dual_containing():
            raise RuntimeError(f'{tpc.name} is not dual-containing')
        code = css(tpc, tpc, config, provenance='pure_qtpc')
    else:
        if not tpc.is_hermitian_dual_containing():
            raise RuntimeError(f'{tpc.name} is not Hermitian dual-containing')
        code = hermitian_code(tpc, config, provenance='pure_qtpc')
    code.components.update({'c1': c1, 'c2': c2, 'tpc': tpc,
                            'containment': containment})
    return _assert_purity(code)


def companion_qtpc(c1: LinearCode, c2: LinearCode,
                   config: Optional[Dict[str, Any]] = None) -> StabilizerCode:
    """QTPC from the companion forms of C = C2 ⊗_H C1 and C_L.

    C uses transposed companion blocks with H1, C_L plain blocks with
    L·H1, L = (H1·H1ᵀ)⁻¹. When C2 is dual-containing,
    H_[C_L]·H_[C]ᵀ = 0 and the CSS construction on (C, C_L) gives
    [[n1n2, n1n2 − 2ρ1ρ2, min{d1, d2}]]; X errors are corrected with C and
    Z errors with C_L.

    Raises
    ------
    HypothesisError
        If C1 is not binary, H1·H1ᵀ is singular, or C2 is not
        dual-containing.
    """
    if not c2.is_dual_containing():
        raise HypothesisError('C2 must be dual-containing (H2·H2ᵀ = 0)',
                              c2.name)
    code_l = build_cl(c1, c2)
    code_c = tpc_build(c1, c2, 'companion_t')
    if np.any(code_l.h_base @ code_c.h_base.T):
        raise RuntimeError('H_[C_L]·H_[C]ᵀ ≠ 0')
    code = css(code_c, code_l, config, provenance='companion_qtpc')
    code.components.update({'c1': c1, 'c2': c2, 'tpc': code_c,
                            'tpc_l': code_l})
    return _assert_purity(code)


def repetition_burst_qtpc(n1: int, n2: int,
                          config: Optional[Dict[str, Any]] = None
                          ) -> StabilizerCode:
    """Burst QTPC [[n1n2, n1n2 − 2(n1 − 1)², n1]] from the repetition code
    of odd length n1 and a dual-containing MDS [n2, n2 − n1 + 1, n1] code
    over GF(2^{n1−1}). Corrects up to (n1 − 1)/2 bursts of length
    ⌈n1/2⌉ − 1 falling in distinct subblocks.

    Raises
    ------
    HypothesisError
        If n1 is even, n1 > ⌊n2/2⌋ + 1 or n2 > 2^{n1−1}.
    """
    if n1 < 3 or n1 % 2 == 0:
        raise HypothesisError('n1 odd and at least 3', f'n1 = {n1}')
    if n1 > n2 // 2 + 1:
        raise HypothesisError('n1 ≤ ⌊n2/2⌋ + 1', f'n1 = {n1}, n2 = {n2}')
    if n2 > 2 ** (n1 - 1):
        raise HypothesisError('n2 ≤ 2^(n1−1)', f'n1 = {n1}, n2 = {n2}')
    c1 = repetition(n1)
    c2 = mds_dual_containing(field(n1 - 1), n2, n1)
    code = companion_qtpc(c1, c2, config)
    bursts = (n1 - 1) // 2
    code.burst = BurstCapability(burst_length=math.ceil(n1 / 2) - 1,
                                 bursts=bursts, claimed_bursts=bursts,
                                 subblock=n1)
    code.provenance = 'repetition_burst_qtpc'
    return code


def fire_burst_qtpc(fire: FireCode, c2: LinearCode,
                    config: Optional[Dict[str, Any]] = None
                    ) -> StabilizerCode:
    """Burst QTPC [[n1n2, n1n2 − 2ρ1ρ2]] from a reversible Fire code and a
    dual-containing MDS code with k2 ≥ ⌈n2/2⌉.

    The construction states ⌊(ρ2 + 1)/2⌋ correctable bursts of length l in
    distinct subblocks; bounded-distance outer decoding guarantees ⌊ρ2/2⌋,
    and both are recorded.

    Raises
    ------
    HypothesisError
        If the Fire code is not reversible or k2 < ⌈n2/2⌉.
    """
    if not is_reversible(fire):
        raise HypothesisError('the Fire code must be reversible', fire.name)
    if c2.k < math.ceil(c2.n / 2):
        raise HypothesisError('k2 ≥ ⌈n2/2⌉', f'k2 = {c2.k}, n2 = {c2.n}')
    code = companion_qtpc(fire, c2, config)
    code.burst = BurstCapability(burst_length=fire.burst_length,
                                 bursts=c2.rho // 2,
                                 claimed_bursts=(c2.rho + 1) // 2,
                                 subblock=fire.n)
    if c2.rho % 2:
        logging.info(f'Outer code {c2.name} has even distance; '
                     f'{c2.rho // 2} bursts guaranteed of '
                     f'{(c2.rho + 1) // 2} stated')
    code.provenance = 'fire_burst_qtpc'
    return code


def _check_self_dual(c: LinearCode) -> None:
    if 2 * c.k != c.n:
        raise HypothesisError('C must be self-dual', f'{c.name} has k ≠ n/2')
    ok = c.is_dual_containing() if c.q == 2 \
        else c.is_hermitian_dual_containing()
    if not ok:
        raise HypothesisError('C must be self-dual', c.name)


def self_dual_square_qtpc(c: LinearCode,
                          config: Optional[Dict[str, Any]] = None
                          ) -> StabilizerCode:
    """[[n², n²/2, d]] from a self-dual [n, n/2, d] code C, taking C2 as C
    itself read over GF(q^{n/2})."""
    _check_self_dual(c)
    ext = Extension(c.field, field(c.field.degree * c.rho))
    c2 = LinearCode(ext.embed(c.h), d_exact=c.d_exact, d_lower=c.d_lower,
                    name=f'{c.name}↑')
    code = pure_qtpc(c, c2, config=config)
    code.provenance = 'self_dual_square_qtpc'
    return code


def self_dual_mds_qtpc(c: LinearCode,
                       config: Optional[Dict[str, Any]] = None
                       ) -> StabilizerCode:
    """[[n², n² − nd + n, d]] from a self-dual [n, n/2, d] code C and the
    Reed–Solomon code [n, n − d + 1, d] over GF(q^{n/2})."""
    _check_self_dual(c)
    d = c.min_distance(config).value
    if d is None:
        raise HypothesisError('C must have a nonzero codeword', c.name)
    ext_field = field(c.field.degree * c.rho)
    c2 = reed_solomon(ext_field, c.n, c.n - d + 1)
    code = pure_qtpc(c, c2, config=config)
    code.provenance = 'self_dual_mds_qtpc'
    return code
