import enum
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Set, Tuple

import numpy as np
import galois

from qtpc.algebra.field import GF2, as_ints
from qtpc.algebra.matrix import RowSpace, rank
from qtpc.codes.base import LinearCode
from qtpc.codes.distance import Distance, min_weight_difference, weight
from qtpc.errors import HypothesisError
from qtpc.util.config import default_distance_config, merge_config


class Purity(enum.Enum):
    """Whether the stabilizer group has no element lighter than d."""
    VERIFIED = 'verified'
    ASSERTED = 'asserted'
    IMPURE = 'impure'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class BurstCapability:
    """Multiple-burst correction claim of a tensor product stabilizer code.

    Attributes
    ----------
    burst_length : int
        Maximum burst length l within a subblock.
    bursts : int
        Number of bursts in distinct subblocks the decoder guarantees.
    claimed_bursts : int
        Number of bursts stated by the construction, which may exceed
        ``bursts`` when the outer code has even distance.
    subblock : int
        Subblock length n1.
    """
    burst_length: int
    bursts: int
    claimed_bursts: int
    subblock: int

    def to_dict(self) -> Dict[str, int]:
        return {'burst_length': self.burst_length, 'bursts': self.bursts,
                'claimed_bursts': self.claimed_bursts,
                'subblock': self.subblock}


def _halves(stab: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    stab = as_ints(stab) % 2
    n = stab.shape[1] // 2
    return stab[:, :n], stab[:, n:]


def symplectic_product(u, v) -> int:
    """a·b′ + a′·b over GF(2) for (a|b) and (a′|b′)."""
    (a, b), (a2, b2) = _halves(np.atleast_2d(u)), _halves(np.atleast_2d(v))
    return int((a @ b2.T + b @ a2.T).sum() % 2)


def symplectic_commute(stab) -> bool:
    """True if every pair of rows of the (a|b) matrix commutes."""
    stab = np.atleast_2d(as_ints(stab))
    if stab.shape[1] % 2:
        raise ValueError(f'Invalid symplectic width: {stab.shape[1]}')
    if stab.shape[0] == 0:
        return True
    a, b = _halves(stab)
    return not np.any((a @ b.T + b @ a.T) % 2)


def classical_error_classes(errors: Iterable
                            ) -> Tuple[Set[tuple], Set[tuple]]:
    """Bit-error class e_X and phase-error class e_Z: the projections of a
    set of (a|b) errors on their a and b components."""
    e_x, e_z = set(), set()
    for error in errors:
        if hasattr(error, 'a'):
            a, b = error.a, error.b
        else:
            a, b = error
        e_x.add(tuple(int(x) for x in as_ints(a)))
        e_z.add(tuple(int(x) for x in as_ints(b)))
    return e_x, e_z


class StabilizerCode:
    """Binary stabilizer code [[n, k, d]] in symplectic (a|b) form.

    Attributes
    ----------
    n : int
        Number of qubits.
    k : int
        Number of logical qubits.
    stab : galois.FieldArray
        (n − k)×2n binary matrix of commuting stabilizer generators.
    distance : Distance
        Minimum distance with its exactness tag.
    purity : Purity
        Purity status relative to ``distance``.
    provenance : str
        The construction that produced the code.
    x_code, z_code : LinearCode or None
        For CSS codes, the classical codes whose parity checks are the
        X-type and Z-type generators. Z-type generators detect X errors.
    burst : BurstCapability or None
        Multiple-burst correction claim, if any.
    components : dict
        Construction metadata (component codes, tensor product codes).
    """
    def __init__(self,
                 stab,
                 k: int,
                 distance: Distance,
                 purity: Purity = Purity.UNKNOWN,
                 provenance: str = 'stabilizer',
                 x_code: Optional[LinearCode] = None,
                 z_code: Optional[LinearCode] = None,
                 burst: Optional[BurstCapability] = None,
                 components: Optional[Dict[str, Any]] = None):
        stab = GF2(as_ints(stab) % 2)
        if stab.ndim != 2 or stab.shape[1] % 2:
            raise ValueError(f'Invalid stabilizer shape: {stab.shape}')
        self.n = stab.shape[1] // 2
        if not symplectic_commute(stab):
            raise ValueError('Stabilizer generators do not commute')
        if rank(stab) != self.n - k:
            raise ValueError(f'Stabilizer rank {rank(stab)} does not match '
                             f'n − k = {self.n - k}')
        self.stab = stab
        self.k = k
        self.distance = distance
        self.purity = purity
        self.provenance = provenance
        self.x_code = x_code
        self.z_code = z_code
        self.burst = burst
        self.components = components or {}

    @property
    def d(self) -> Optional[int]:
        return self.distance.value

    @property
    def params(self) -> Tuple[int, int, Optional[int]]:
        return self.n, self.k, self.distance.value

    @property
    def is_css(self) -> bool:
        return self.x_code is not None and self.z_code is not None

    def __repr__(self):
        return (f'StabilizerCode([[{self.n},{self.k},{self.distance}]], '
                f'{self.provenance})')

    def to_dict(self) -> Dict[str, Any]:
        from qtpc.util.serialize import hex_rows
        out = {
            'n': self.n,
            'k': self.k,
            'd': self.distance.to_dict(),
            'pure': self.purity.value,
            'provenance': self.provenance,
            'stab_ab': {'cols': 2 * self.n, 'rows': hex_rows(self.stab)},
        }
        if self.burst is not None:
            out['burst'] = self.burst.to_dict()
        return out


def _stabilizer_distance(lower_parts, outside_checks) -> Distance:
    """Combine lower bounds with candidate witnesses known to be logical."""
    if not lower_parts:
        return Distance(None, False)
    lower = min(lower_parts)
    candidates = [w for w in outside_checks if w is not None]
    if not candidates:
        return Distance(lower, False)
    best = min(candidates, key=weight)
    upper = weight(best)
    return Distance(upper if upper <= lower else lower, upper <= lower,
                    upper, best)


def _dual_purity(codes, d: Optional[int], config: Dict[str, Any],
                 hermitian: bool = False) -> Purity:
    if d is None:
        return Purity.UNKNOWN
    for code in codes:
        if code.rho == 0:
            continue
        if code.q ** code.rho > config['enumeration_limit']:
            return Purity.UNKNOWN
        dual = code.hermitian_dual() if hermitian else code.dual()
        dual_distance = dual.min_distance(config)
        if dual_distance.value < d:
            return Purity.IMPURE
    return Purity.VERIFIED


def css(c1: LinearCode, c2: LinearCode,
        config: Optional[Dict[str, Any]] = None,
        provenance: str = 'css',
        distance: Optional[Distance] = None) -> StabilizerCode:
    """CSS code from binary codes with C2^⊥ ⊆ C1.

    The Z-type generators are the rows of H1 and the X-type generators the
    rows of H2, so X errors are corrected with C1 and Z errors with C2.

    Parameters
    ----------
    c1, c2 : LinearCode
        Binary codes of equal length with H1·H2ᵀ = 0.
    config : Dict[str, Any], optional
        Overrides for ``default_distance_config``.
    provenance : str
        Label recorded on the result.
    distance : Distance, optional
        Precomputed distance; skips the distance computation.

    Returns
    -------
    StabilizerCode
        [[n, k1 + k2 − n, d]] with d = min{wt(C1 \\ C2^⊥), wt(C2 \\ C1^⊥)}
        when the codes are small enough to enumerate, otherwise bounded
        below by min{d1, d2}.
    """
    config = merge_config(default_distance_config, config)
    if c1.q != 2 or c2.q != 2:
        raise ValueError('CSS construction requires binary codes')
    if c1.n != c2.n:
        raise ValueError(f'Length mismatch: {c1.n} vs {c2.n}')
    n = c1.n
    if np.any(c1.h @ c2.h.T):
        raise HypothesisError('H1·H2ᵀ = 0 (C2^⊥ ⊆ C1)',
                              f'{c1.name}, {c2.name}')
    k = c1.k + c2.k - n
    stab = GF2.Zeros((c1.rho + c2.rho, 2 * n))
    stab[:c2.rho, :n] = c2.h
    stab[c2.rho:, n:] = c1.h

    if distance is None:
        distance = _css_distance(c1, c2, k, config)
    purity = _dual_purity([c2, c1], distance.value, config)
    logging.info(f'CSS code [[{n},{k},{distance}]] from {c1.name} and '
                 f'{c2.name}, purity {purity.value}')
    return StabilizerCode(stab, k, distance, purity, provenance,
                          x_code=c2, z_code=c1)


def _css_distance(c1, c2, k, config) -> Distance:
    if k == 0:
        return c1.min_distance(config)
    limit = config['enumeration_limit']
    if c1.q ** c1.k <= limit and c2.q ** c2.k <= limit:
        parts = [min_weight_difference(c, other.dual(), config)
                 for c, other in ((c1, c2), (c2, c1))
                 if c.k > other.rho]
        best = min(parts, key=lambda p: p[0])
        return Distance(best[0], True, best[0], best[1])
    dist1, dist2 = c1.min_distance(config), c2.min_distance(config)
    lower = [d.value for d in (dist1, dist2) if d.value is not None]
    witnesses = []
    for dist, other in ((dist1, c2), (dist2, c1)):
        if dist.witness is not None and \
                not RowSpace(other.h).contains(dist.witness):
            witnesses.append(dist.witness)
    return _stabilizer_distance(lower, witnesses)


# GF(4) element x = a·ω + b·ω² ↔ (a|b), indexed by the integer of x
_gf4_a = np.array([0, 1, 1, 0], dtype=np.uint8)
_gf4_b = np.array([0, 1, 0, 1], dtype=np.uint8)


def gf4_to_symplectic(rows: galois.FieldArray) -> np.ndarray:
    """Binary (a|b) image of GF(4) rows under a·ω + b·ω² ↦ (a|b)."""
    ints = as_ints(rows)
    return np.concatenate([_gf4_a[ints], _gf4_b[ints]], axis=-1)


def hermitian_code(d4: LinearCode,
                   config: Optional[Dict[str, Any]] = None,
                   provenance: str = 'hermitian',
                   distance: Optional[Distance] = None) -> StabilizerCode:
    """Stabilizer code [[n, 2k − n, d]] from a Hermitian dual-containing
    [n, k]₄ code D, with d = wt(D \\ D^⊥h).

    Each row y of the GF(4) parity check contributes the two generators
    obtained from ω·y and ω²·y.
    """
    config = merge_config(default_distance_config, config)
    if d4.q != 4:
        raise ValueError('Hermitian construction requires a GF(4) code')
    if not d4.is_hermitian_dual_containing():
        raise HypothesisError('H·H† = 0 (D^⊥h ⊆ D)', d4.name)
    n = d4.n
    k = 2 * d4.k - n
    omega = d4.field(2)
    stab = np.concatenate([gf4_to_symplectic(omega * d4.h),
                           gf4_to_symplectic(omega ** 2 * d4.h)], axis=0)

    if distance is None:
        dual = d4.hermitian_dual()
        if k == 0:
            distance = d4.min_distance(config)
        elif d4.q ** d4.k <= config['enumeration_limit']:
            value, witness = min_weight_difference(d4, dual, config)
            distance = Distance(value, True, value, witness)
        else:
            dist = d4.min_distance(config)
            witnesses = []
            if dist.witness is not None and np.any(dual.syndrome(dist.witness)):
                witnesses.append(dist.witness)
            distance = _stabilizer_distance([dist.value], witnesses)
    purity = _dual_purity([d4], distance.value, config, hermitian=True)
    logging.info(f'Hermitian code [[{n},{k},{distance}]] from {d4.name}, '
                 f'purity {purity.value}')
    return StabilizerCode(stab, k, distance, purity, provenance,
                          components={'d4': d4})
