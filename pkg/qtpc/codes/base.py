import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np
import galois

from qtpc.algebra.field import as_ints, conjugate, gf4, trace_gf4
from qtpc.algebra.matrix import dagger, null_space, rank, row_basis
from qtpc.codes.distance import Distance, min_distance


class LinearCode:
    """A linear code C = [n, k, d]_q defined by a parity check matrix.

    Attributes
    ----------
    field : Type[galois.FieldArray]
        The alphabet GF(q).
    h : galois.FieldArray
        Full-row-rank parity check matrix, ρ×n.
    n : int
        Code length.
    k : int
        Dimension, n − ρ.
    rho : int
        Number of check symbols ρ.
    d_exact : int or None
        Known exact minimum distance, if any.
    d_lower : int or None
        Known lower bound (design distance) on the minimum distance.
    reduced : bool
        Whether the input parity check had dependent rows that were
        removed on construction.
    name : str
        Label used in logs and reports.
    """
    def __init__(self,
                 h: galois.FieldArray,
                 d_exact: Optional[int] = None,
                 d_lower: Optional[int] = None,
                 name: Optional[str] = None,
                 witness: Optional[galois.FieldArray] = None):
        if not isinstance(h, galois.FieldArray) or h.ndim != 2:
            raise ValueError('Parity check must be a 2-D galois field array')
        r = rank(h)
        self.reduced = r < h.shape[0]
        if self.reduced:
            logging.info(f'Reducing {h.shape[0]}×{h.shape[1]} parity check '
                         f'to full row rank {r}')
            h = row_basis(h)
        self.field = type(h)
        self.h = h
        self.n = h.shape[1]
        self.rho = h.shape[0]
        self.k = self.n - self.rho
        self.d_exact = d_exact
        self.d_lower = d_exact if d_exact is not None else d_lower
        self.name = name or f'[{self.n},{self.k}]_{self.field.order}'
        self._generator = None
        self._distance = None
        if d_exact is not None and witness is not None:
            self._distance = Distance(d_exact, True, d_exact, witness)

    @classmethod
    def from_parity(cls, h: galois.FieldArray, **kwargs) -> 'LinearCode':
        return cls(h, **kwargs)

    @classmethod
    def from_generator(cls, G: galois.FieldArray, **kwargs) -> 'LinearCode':
        return cls(null_space(G), **kwargs)

    def __repr__(self):
        return f'{type(self).__name__}({self.name})'

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def params(self) -> Tuple[int, int, Optional[int]]:
        return self.n, self.k, self.d_lower

    @property
    def generator(self) -> galois.FieldArray:
        """Generator matrix G (k×n) with G·Hᵀ = 0."""
        if self._generator is None:
            self._generator = null_space(self.h)
        return self._generator

    def _check_length(self, v: galois.FieldArray) -> galois.FieldArray:
        v = self.field(v)
        if v.shape[-1] != self.n:
            raise ValueError(f'Expected length {self.n}, got {v.shape[-1]}')
        return v

    def syndrome(self, v) -> galois.FieldArray:
        """H·vᵀ for a word (1-D) or for each row of a batch (2-D)."""
        v = self._check_length(v)
        return (self.h @ v.T).T

    def contains(self, v) -> bool:
        synd = as_ints(self.syndrome(v))
        return ~np.any(synd, axis=-1)

    def encode(self, msg) -> galois.FieldArray:
        msg = self.field(msg)
        if msg.shape[-1] != self.k:
            raise ValueError(f'Expected {self.k} message symbols, '
                             f'got {msg.shape[-1]}')
        if self.k == 0:
            return self.field.Zeros(msg.shape[:-1] + (self.n,))
        return msg @ self.generator

    def dual(self) -> 'LinearCode':
        return LinearCode(self.generator, name=f'{self.name}^⊥')

    def hermitian_dual(self) -> 'LinearCode':
        """Hermitian dual over GF(4); its parity check is conj(G)."""
        if self.q != 4:
            raise ValueError('Hermitian dual requires a GF(4) code')
        return LinearCode(conjugate(self.generator), name=f'{self.name}^⊥h')

    def is_dual_containing(self) -> bool:
        return not np.any(self.h @ self.h.T)

    def is_hermitian_dual_containing(self) -> bool:
        if self.q != 4:
            raise ValueError('Hermitian dual containment requires GF(4)')
        return not np.any(self.h @ dagger(self.h))

    def is_trace_hermitian_self_orthogonal(self) -> bool:
        """Trace-Hermitian self-orthogonality of C over GF(4), checked on
        every pair of a GF(2)-basis {g, ωg} of the code."""
        if self.q != 4:
            raise ValueError('Trace-Hermitian inner product requires GF(4)')
        G = self.generator
        if len(G) == 0:
            return True
        rows = np.concatenate([G, gf4()(2) * G], axis=0)
        gram = rows @ dagger(rows)
        return not np.any(as_ints(trace_gf4(gram)))

    def min_distance(self, config: Optional[Dict[str, Any]] = None
                     ) -> Distance:
        """Cached minimum distance; see :func:`qtpc.codes.distance.min_distance`."""
        if self._distance is None:
            result = min_distance(self, config)
            if (not result.exact and self.d_lower is not None
                    and (result.value is None or result.value < self.d_lower)):
                result = Distance(self.d_lower, False, result.upper,
                                  result.witness)
            self._distance = result
        return self._distance
