import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Iterator, Optional, Tuple

import numpy as np
import galois

from qtpc.algebra.field import as_ints, int_bits
from qtpc.util.config import default_distance_config, merge_config


@dataclass(frozen=True)
class Distance:
    """Minimum distance result with an explicit exactness tag.

    Attributes
    ----------
    value : int or None
        The exact distance if ``exact``, otherwise a proven lower bound.
        None for the zero code, which has no nonzero codeword.
    exact : bool
        Whether ``value`` is certified exact.
    upper : int, optional
        Weight of the best witness found, if any.
    witness : np.ndarray, optional
        A codeword of weight ``upper``.
    """
    value: Optional[int]
    exact: bool
    upper: Optional[int] = None
    witness: Optional[Any] = dataclass_field(default=None, compare=False,
                                             repr=False)

    def to_dict(self) -> Dict[str, Any]:
        out = {'value': self.value, 'exact': self.exact}
        if not self.exact and self.upper is not None:
            out['upper'] = self.upper
        return out

    def __str__(self):
        if self.value is None:
            return '∞'
        return str(self.value) if self.exact else f'≥{self.value}'


def weight(v) -> int:
    return int(np.count_nonzero(as_ints(v)))


def codeword_batches(G: galois.FieldArray,
                     chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """All q^k codewords spanned by the rows of ``G`` (zero word first), as
    integer arrays in batches of at most ``chunk`` rows."""
    GF = type(G)
    q = GF.order
    k, n = G.shape
    total = q ** k
    G_int = as_ints(G)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        if q == 2:
            msgs = int_bits(idx, k).astype(np.int64)
            yield (msgs @ G_int) % 2
        else:
            digits = (idx[:, None] // q ** np.arange(k, dtype=np.int64)) % q
            yield as_ints(GF(digits) @ G)


def _enumerated_distance(code) -> Distance:
    best, witness = None, None
    for words in codeword_batches(code.generator):
        weights = np.count_nonzero(words, axis=1)
        weights[weights == 0] = code.n + 1
        i = int(np.argmin(weights))
        if weights[i] <= code.n and (best is None or weights[i] < best):
            best, witness = int(weights[i]), code.field(words[i])
    return Distance(best, True, best, witness)


def _normalize(S: galois.FieldArray) -> Tuple[galois.FieldArray,
                                               galois.FieldArray,
                                               np.ndarray]:
    ints = as_ints(S)
    nonzero = ints != 0
    has = nonzero.any(axis=1)
    lead = S[np.arange(len(S)), np.argmax(nonzero, axis=1)]
    lead[~has] = 1
    return S / lead[:, None], lead, has


def _column_search(code, config: Dict[str, Any]) -> Distance:
    GF = code.field
    n = code.n
    cols = code.h.T.copy()
    zero_cols = np.flatnonzero(~np.any(as_ints(cols), axis=1))
    if len(zero_cols):
        witness = GF.Zeros(n)
        witness[zero_cols[0]] = 1
        return Distance(1, True, 1, witness)

    normed, lead, _ = _normalize(cols)
    table: Dict[bytes, list] = {}
    for j, key in enumerate(as_ints(normed)):
        table.setdefault(key.tobytes(), []).append(j)
    nonzero = GF.elements[1:]
    w_max = min(config['max_column_weight'], code.rho + 1)
    work = 0
    for w in range(2, w_max + 1):
        # A weight-w dependency is a prefix of w-2 columns (leading
        # coefficient 1), one more column j, and a last column t > j
        # proportional to their combination.
        for prefix in itertools.combinations(range(n), w - 2):
            coef_choices = (itertools.product(nonzero, repeat=w - 3)
                            if w > 2 else [()])
            start = prefix[-1] + 1 if prefix else 0
            js = np.arange(start, n - 1)
            if not len(js):
                continue
            for coefs in coef_choices:
                base = GF.Zeros(code.rho)
                lam = [GF(1)] + [GF(int(c)) for c in coefs] if prefix else []
                for i, c in zip(prefix, lam):
                    base += c * cols[i]
                mus = nonzero if prefix else GF([1])
                S = (base[None, None, :]
                     + mus[:, None, None] * cols[js][None, :, :])
                S = S.reshape(-1, code.rho)
                S_norm, S_lead, has = _normalize(S)
                keys = as_ints(S_norm)
                work += len(S)
                for row in np.flatnonzero(has):
                    hits = table.get(keys[row].tobytes())
                    if not hits:
                        continue
                    j = int(js[row % len(js)])
                    hits = [t for t in hits if t > j]
                    if not hits:
                        continue
                    t = hits[0]
                    witness = GF.Zeros(n)
                    for i, c in zip(prefix, lam):
                        witness[i] = c
                    witness[j] = mus[row // len(js)]
                    witness[t] = -(S_lead[row] / lead[t])
                    if np.any(code.h @ witness):
                        raise RuntimeError('Column search produced a '
                                           'non-codeword')
                    logging.info(f'Column search found a weight-{w} '
                                 f'codeword of {code.name}')
                    return Distance(w, True, w, witness)
                if work > config['search_limit']:
                    logging.warning(
                        f'Distance search budget exhausted for {code.name} '
                        f'at weight {w}; returning lower bound {w}'
                    )
                    return Distance(w, False)
    return Distance(w_max + 1, False)


def min_distance(code, config: Optional[Dict[str, Any]] = None) -> Distance:
    """Minimum distance of a linear code.

    Enumerates all codewords when there are at most ``enumeration_limit``
    of them. Otherwise searches for sets of at most ``max_column_weight``
    linearly dependent parity-check columns, which either certifies an
    exact distance (with a witness codeword) or a lower bound.

    Parameters
    ----------
    code : LinearCode
        The code.
    config : Dict[str, Any], optional
        Overrides for ``default_distance_config``.

    Returns
    -------
    Distance
        Exact value with witness, or a lower bound tagged inexact.
    """
    config = merge_config(default_distance_config, config)
    if code.k == 0:
        return Distance(None, True)
    if code.field.order ** code.k <= config['enumeration_limit']:
        logging.info(f'Enumerating {code.field.order}^{code.k} codewords '
                     f'of {code.name}')
        return _enumerated_distance(code)
    logging.info(f'Searching dependent parity-check columns of {code.name}')
    return _column_search(code, config)


def min_weight_difference(C, D,
                          config: Optional[Dict[str, Any]] = None
                          ) -> Tuple[int, galois.FieldArray]:
    """Minimum weight over codewords of C that are not in D ⊆ C.

    Returns
    -------
    Tuple[int, galois.FieldArray]
        The weight and a codeword achieving it.

    Raises
    ------
    ValueError
        If D is not contained in C, the difference is empty, or C is too
        large to enumerate.
    """
    config = merge_config(default_distance_config, config)
    if C.field is not D.field or C.n != D.n:
        raise ValueError('Codes must share field and length')
    if D.k and np.any(C.syndrome(D.generator)):
        raise ValueError('D is not contained in C')
    if D.k == C.k:
        raise ValueError('Empty difference: D equals C')
    if C.field.order ** C.k > config['enumeration_limit']:
        raise ValueError(f'{C.name} is too large to enumerate')
    GF = C.field
    h_d = D.h
    best, witness = None, None
    for words in codeword_batches(C.generator):
        if GF.order == 2:
            synd = (words @ as_ints(h_d).T) % 2
        else:
            synd = as_ints(GF(words) @ h_d.T)
        outside = np.any(synd, axis=1)
        if not outside.any():
            continue
        weights = np.count_nonzero(words, axis=1)
        weights[~outside] = C.n + 1
        i = int(np.argmin(weights))
        if best is None or weights[i] < best:
            best, witness = int(weights[i]), GF(words[i])
    return best, witness
