import itertools
import logging
import math
from typing import Any, Dict, Iterator, Optional, Sequence, Tuple

import numpy as np
import galois

from qtpc.algebra.field import GF2, as_ints, int_bits
from qtpc.codes.base import LinearCode
from qtpc.codes.families import CyclicCode, FireCode, ReedSolomonCode
from qtpc.decoding.base import Decoder, DecodeResult, DecodeStatus
from qtpc.util.config import default_decoder_config, merge_config


def _coefficient(f: galois.Poly, k: int):
    return f.coeffs[f.degree - k] if k <= f.degree else f.field(0)


def berlekamp_massey(s: galois.FieldArray) -> Tuple[galois.Poly, int]:
    """Shortest LFSR generating ``s``.

    Returns
    -------
    galois.Poly
        Connection polynomial C(z) = 1 + c₁z + … with
        s_i + Σ_k c_k·s_{i−k} = 0 for i ≥ L.
    int
        The LFSR length L.
    """
    GF = type(s)
    C, B = galois.Poly.One(GF), galois.Poly.One(GF)
    L, m, b = 0, 1, GF(1)
    for i in range(len(s)):
        d = s[i]
        for k in range(1, L + 1):
            d = d + _coefficient(C, k) * s[i - k]
        if d == 0:
            m += 1
            continue
        update = C - galois.Poly.Degrees([m], [d / b], field=GF) * B
        if 2 * L <= i:
            B, L, b, m = C, i + 1 - L, d, 1
        else:
            m += 1
        C = update
    return C, L


def solve_on_support(H: galois.FieldArray, support: Sequence[int],
                     syndrome: galois.FieldArray
                     ) -> Optional[galois.FieldArray]:
    """Values y with H[:, support]·y = syndrome, if the columns are
    independent and the system is consistent."""
    m = len(support)
    A = H[:, list(support)]
    augmented = np.concatenate([A, syndrome.reshape(-1, 1)], axis=1)
    R = augmented.row_reduce()
    if not np.array_equal(as_ints(R[:m, :m]), np.eye(m, dtype=np.int64)):
        return None
    if np.any(R[m:, m]):
        return None
    return R[:m, m]


class ReedSolomonDecoder(Decoder):
    """Bounded-distance decoder for (generalized) Reed–Solomon codes
    without a point at infinity.

    With Y_j = e_j·v_j·x_j^c the syndrome reads S_i = Σ_j Y_j·x_j^i, so the
    error locations are the inverse roots of the shortest LFSR of S. An
    error on the point 0 only touches S_0 and lengthens the LFSR by one.
    """
    def __init__(self, code: ReedSolomonCode):
        if code.infinity:
            raise ValueError('Point at infinity is not supported by the '
                             'Reed–Solomon decoder')
        super().__init__(code)
        self.radius = code.r // 2
        ints = as_ints(code.points)
        self._nonzero = np.flatnonzero(ints != 0)
        self._zero_point = np.flatnonzero(ints == 0)
        self._inverse_points = code.points[self._nonzero] ** -1

    def decode_syndrome(self, syndrome) -> DecodeResult:
        s = self.code.field(syndrome)
        if not np.any(s):
            return self._zero()
        locator, L = berlekamp_massey(s)
        if L > self.radius:
            return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                detail=f'{L} errors exceed radius '
                                       f'{self.radius}')
        roots = as_ints(locator(self._inverse_points)) == 0
        positions = [int(j) for j in self._nonzero[roots]]
        if len(positions) != locator.degree:
            return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                detail='locator does not split over the '
                                       'evaluation points')
        if L == locator.degree + 1 and len(self._zero_point) and \
                self.code.first_power == 0:
            positions.append(int(self._zero_point[0]))
        elif L != locator.degree:
            return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                detail='inconsistent locator length')
        values = solve_on_support(self.code.h, positions, s)
        if values is None:
            return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                detail='error values not solvable')
        error = self.code.field.Zeros(self.code.n)
        error[positions] = values
        return self._verified(error, s)


def _radius(code: LinearCode, config) -> int:
    d = code.min_distance(config).value
    return 0 if d is None else (d - 1) // 2


class SyndromeSearchDecoder(Decoder):
    """Minimum-weight search over error supports of size ≤ ``radius``."""
    def __init__(self, code: LinearCode, radius: Optional[int] = None,
                 config: Optional[Dict[str, Any]] = None):
        super().__init__(code)
        self.config = merge_config(default_decoder_config, config)
        self.radius = _radius(code, None) if radius is None else radius

    def decode_syndrome(self, syndrome) -> DecodeResult:
        s = self.code.field(syndrome)
        if not np.any(s):
            return self._zero()
        tries = 0
        for w in range(1, self.radius + 1):
            for support in itertools.combinations(range(self.code.n), w):
                tries += 1
                if tries > self.config['search_limit']:
                    logging.warning(f'Syndrome search budget exhausted for '
                                    f'{self.code.name}')
                    return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                        detail='search budget exhausted')
                values = solve_on_support(self.code.h, support, s)
                if values is None or not np.all(as_ints(values)):
                    continue
                error = self.code.field.Zeros(self.code.n)
                error[list(support)] = values
                return self._verified(error, s)
        return DecodeResult(DecodeStatus.UNCORRECTABLE,
                            detail=f'no error of weight ≤ {self.radius}')


def _burst_patterns(n: int, q: int, l: int) -> Iterator[np.ndarray]:
    """Non-wrapping bursts of length ≤ l with nonzero end symbols."""
    nonzero = range(1, q)
    for length in range(1, l + 1):
        ends = [(v,) for v in nonzero] if length == 1 else \
            [(a, b) for a in nonzero for b in nonzero]
        for start in range(n - length + 1):
            for inner in itertools.product(range(q), repeat=max(length - 2, 0)):
                for end in ends:
                    values = (end[0],) + inner + end[1:]
                    e = np.zeros(n, dtype=np.int64)
                    e[start:start + length] = values
                    yield e


class SyndromeTableDecoder(Decoder):
    """Coset-leader table over all errors of weight ≤ ``max_weight`` and,
    optionally, all bursts of length ≤ ``burst_length``. Lighter patterns
    take precedence when two share a syndrome."""
    def __init__(self, code: LinearCode, max_weight: Optional[int] = None,
                 burst_length: Optional[int] = None,
                 config: Optional[Dict[str, Any]] = None):
        super().__init__(code)
        config = merge_config(default_decoder_config, config)
        self.max_weight = _radius(code, None) if max_weight is None \
            else max_weight
        self.burst_length = burst_length
        n, q = code.n, code.q
        size = sum(math.comb(n, w) * (q - 1) ** w
                   for w in range(self.max_weight + 1))
        if burst_length:
            size += n * q ** burst_length
        if size > config['table_limit']:
            raise ValueError(f'Syndrome table for {code.name} would hold '
                             f'{size} entries, over the limit of '
                             f'{config["table_limit"]}')
        self.table: Dict[bytes, np.ndarray] = {}
        for batch in self._patterns():
            synd = as_ints(code.syndrome(code.field(batch)))
            for e, s in zip(batch, synd):
                self.table.setdefault(s.tobytes(), e)
        logging.info(f'Syndrome table for {code.name}: {len(self.table)} '
                     f'syndromes')

    def _patterns(self) -> Iterator[np.ndarray]:
        n, q = self.code.n, self.code.q
        for w in range(self.max_weight + 1):
            rows = []
            for support in itertools.combinations(range(n), w):
                for values in itertools.product(range(1, q), repeat=w):
                    e = np.zeros(n, dtype=np.int64)
                    e[list(support)] = values
                    rows.append(e)
            if rows:
                yield np.array(rows)
        if self.burst_length:
            rows = list(_burst_patterns(n, q, self.burst_length))
            if rows:
                yield np.array(rows)

    def decode_syndrome(self, syndrome) -> DecodeResult:
        s = self.code.field(syndrome)
        error = self.table.get(as_ints(s).tobytes())
        if error is None:
            return DecodeResult(DecodeStatus.UNCORRECTABLE,
                                detail='syndrome not in table')
        return self._verified(self.code.field(error), s)


def _mod(a: int, g: int) -> int:
    dg = g.bit_length()
    while a.bit_length() >= dg:
        a ^= g << (a.bit_length() - dg)
    return a


class BurstTrappingDecoder(Decoder):
    """Error-trapping decoder for a single burst of length ≤ l in a binary
    cyclic code.

    Polynomials are Python integers with bit i the coefficient of xⁱ. The
    syndrome is lifted to some e₀ with H·e₀ᵀ = σ; r = e₀ mod g equals the
    error mod g. Shifting r cyclically until xⁱ·r mod g has degree < l
    traps the burst, which is then rotated back by n − i.
    """
    def __init__(self, code: CyclicCode, burst_length: int):
        if code.q != 2:
            raise ValueError('Burst trapping requires a binary cyclic code')
        super().__init__(code)
        self.burst_length = burst_length
        self.g = int(code.g)
        R = code.h.row_reduce()
        pivots = np.argmax(as_ints(R) != 0, axis=1)
        self._pivots = pivots
        self._lift = np.linalg.inv(code.h[:, pivots])

    def decode_syndrome(self, syndrome) -> DecodeResult:
        s = GF2(syndrome)
        if not np.any(s):
            return self._zero()
        n = self.code.n
        e0 = as_ints(self._lift @ s)
        r = _mod(sum(int(b) << int(p) for b, p in zip(e0, self._pivots)),
                 self.g)
        mask = (1 << n) - 1
        for i in range(n):
            if r.bit_length() <= self.burst_length:
                shift = (n - i) % n
                e = ((r << shift) | (r >> (n - shift))) & mask
                error = GF2(int_bits([e], n)[0])
                return self._verified(error, s)
            r = _mod(r << 1, self.g)
        return DecodeResult(DecodeStatus.UNCORRECTABLE,
                            detail='burst not trapped')


def component_decoder(code: LinearCode,
                      config: Optional[Dict[str, Any]] = None) -> Decoder:
    """Decoder suited to a component code: Reed–Solomon key-equation
    decoding, burst trapping for Fire codes, a syndrome table when it fits
    in ``table_limit``, and a support search otherwise."""
    if isinstance(code, ReedSolomonCode) and not code.infinity:
        return ReedSolomonDecoder(code)
    if isinstance(code, FireCode):
        return BurstTrappingDecoder(code, code.burst_length)
    try:
        return SyndromeTableDecoder(code, config=config)
    except ValueError as e:
        logging.info(f'{e}; falling back to syndrome search')
        return SyndromeSearchDecoder(code, config=config)
