from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np
import galois

from qtpc.algebra.field import as_ints
from qtpc.algebra.matrix import RowSpace
from qtpc.codes.base import LinearCode
from qtpc.codes.tensor import TensorProductCode
from qtpc.decoding.base import Decoder, DecodeResult, DecodeStatus
from qtpc.decoding.component import component_decoder
from qtpc.quantum.stabilizer import StabilizerCode


class TpcDecoder(Decoder):
    """Two-stage syndrome decoder for a tensor product code.

    The outer stage packs the ρ1ρ2 base-field syndrome into ρ2 symbols of
    GF(q^ρ1) and decodes C2, which locates the erroneous subblocks and
    returns their inner syndromes x̂_j. The inner stage decodes C1 on
    σ_j = L⁻¹·T·ψ(x̂_j) in each flagged subblock.

    Attributes
    ----------
    outer : Decoder
        Decoder for C2.
    inner : Decoder
        Decoder for C1.
    """
    def __init__(self, code: TensorProductCode,
                 config: Optional[Dict[str, Any]] = None):
        super().__init__(code)
        self.outer = component_decoder(code.c2, config)
        self.inner = component_decoder(code.c1, config)

    def decode_syndrome(self, syndrome) -> DecodeResult:
        code = self.code
        s = code.field(syndrome)
        if not np.any(s):
            return self._zero()
        outer = self.outer.decode_syndrome(code.pack_syndrome(s))
        if not outer.success:
            return DecodeResult(DecodeStatus.OUTER_FAILURE,
                                detail=outer.detail)
        error = code.field.Zeros(code.n)
        symbols = outer.error
        for j in np.flatnonzero(as_ints(symbols)):
            sigma = code.h1_from_symbol @ code.ext.psi(symbols[j])
            inner = self.inner.decode_syndrome(sigma)
            if not inner.success:
                return DecodeResult(DecodeStatus.INNER_FAILURE,
                                    detail=f'subblock {j}: {inner.detail}')
            error[j * code.n1:(j + 1) * code.n1] = inner.error
        return self._verified(error, s)


def decode_tpc(code: TensorProductCode, syndrome,
               config: Optional[Dict[str, Any]] = None) -> DecodeResult:
    return TpcDecoder(code, config).decode_syndrome(syndrome)


def _side_decoder(code: LinearCode, config) -> Decoder:
    if isinstance(code, TensorProductCode):
        return TpcDecoder(code, config)
    return component_decoder(code, config)


@dataclass
class QuantumDecodeResult:
    """CSS decoding outcome, with one classical result per error type.

    ``failed_side`` is ``'x'`` when the bit-flip component was not
    corrected up to a stabilizer, ``'z'`` for the phase component, and None
    on success.
    """
    x_result: DecodeResult
    z_result: DecodeResult
    x_ok: bool
    z_ok: bool

    @property
    def success(self) -> bool:
        return self.x_ok and self.z_ok

    @property
    def failed_side(self) -> Optional[str]:
        if not self.x_ok:
            return 'x'
        if not self.z_ok:
            return 'z'
        return None


class QuantumDecoder:
    """Independent decoding of the a (X) and b (Z) parts of a Pauli error
    on a CSS code. Success is up to stabilizers: a + â must lie in the row
    space of the X-type generators and b + b̂ in that of the Z-type ones."""
    def __init__(self, code: StabilizerCode,
                 config: Optional[Dict[str, Any]] = None):
        if not code.is_css:
            raise ValueError('Decoding requires a CSS stabilizer code')
        self.code = code
        self.x_decoder = _side_decoder(code.z_code, config)
        self.z_decoder = _side_decoder(code.x_code, config)
        self.x_stabilizers = RowSpace(code.x_code.h)
        self.z_stabilizers = RowSpace(code.z_code.h)

    def decode_x(self, a) -> DecodeResult:
        return self.x_decoder.decode_syndrome(self.code.z_code.syndrome(a))

    def decode_z(self, b) -> DecodeResult:
        return self.z_decoder.decode_syndrome(self.code.x_code.syndrome(b))

    def _corrected(self, result: DecodeResult, e: galois.FieldArray,
                   stabilizers: RowSpace) -> bool:
        if not result.success:
            return False
        return bool(stabilizers.contains(as_ints(e) ^ as_ints(result.error)))

    def decode(self, error) -> QuantumDecodeResult:
        a, b = error.a, error.b
        x_result, z_result = self.decode_x(a), self.decode_z(b)
        return QuantumDecodeResult(
            x_result, z_result,
            self._corrected(x_result, a, self.x_stabilizers),
            self._corrected(z_result, b, self.z_stabilizers),
        )


def qecc_decode(code: StabilizerCode, error,
                config: Optional[Dict[str, Any]] = None
                ) -> QuantumDecodeResult:
    return QuantumDecoder(code, config).decode(error)
