import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np
import galois

from qtpc.algebra.field import as_ints
from qtpc.codes.base import LinearCode


class DecodeStatus(enum.Enum):
    SUCCESS = 'success'
    UNCORRECTABLE = 'uncorrectable'
    OUTER_FAILURE = 'outer_failure'
    INNER_FAILURE = 'inner_failure'
    SYNDROME_MISMATCH = 'syndrome_mismatch'


@dataclass
class DecodeResult:
    """Outcome of a syndrome decoder.

    Attributes
    ----------
    status : DecodeStatus
        SUCCESS only if ``error`` reproduces the input syndrome.
    error : galois.FieldArray, optional
        The error estimate, set on success.
    detail : str
        Free-form reason for a failure.
    """
    status: DecodeStatus
    error: Optional[galois.FieldArray] = None
    detail: str = ''

    @property
    def success(self) -> bool:
        return self.status is DecodeStatus.SUCCESS


class Decoder(ABC):
    """Syndrome decoder for a linear code.

    Subclasses implement :meth:`decode_syndrome`; every estimate they
    return goes through :meth:`_verified`, so a success always reproduces
    the syndrome it was given.
    """
    def __init__(self, code: LinearCode):
        self.code = code

    @abstractmethod
    def decode_syndrome(self, syndrome: galois.FieldArray) -> DecodeResult:
        """Estimate an error e with H·eᵀ equal to ``syndrome``.

        Parameters
        ----------
        syndrome : galois.FieldArray
            Length-ρ syndrome over the code's field.

        Returns
        -------
        DecodeResult
            The estimate or a failure status; never raises on an
            uncorrectable syndrome.
        """
        pass

    def decode(self, word) -> DecodeResult:
        """Error estimate for a received word."""
        return self.decode_syndrome(self.code.syndrome(word))

    def _zero(self) -> DecodeResult:
        return DecodeResult(DecodeStatus.SUCCESS, self.code.field.Zeros(
            self.code.n))

    def _verified(self, error: galois.FieldArray,
                  syndrome: galois.FieldArray) -> DecodeResult:
        if np.array_equal(as_ints(self.code.syndrome(error)),
                          as_ints(syndrome)):
            return DecodeResult(DecodeStatus.SUCCESS, error)
        return DecodeResult(DecodeStatus.SYNDROME_MISMATCH,
                            detail='estimate does not reproduce the syndrome')
