import logging
from typing import Any, Dict, Optional

import numpy as np
import galois

from qtpc.algebra.field import Extension, as_ints
from qtpc.algebra.matrix import (companion_expand, inverse, kron,
                                 solve_left_inverse)
from qtpc.codes.base import LinearCode
from qtpc.codes.distance import Distance, weight
from qtpc.errors import HypothesisError
from qtpc.util.config import canonical_variant, default_distance_config


def _symbol_map(ext: Extension) -> galois.FieldArray:
    """Hankel matrix T[j, k] = ψ₀(α^{j+k}) over GF(2).

    Multiplication by any b is self-adjoint for the bilinear form
    (u, v) ↦ ψ₀(uv), so [b]·T = T·[b]ᵀ, and a plain companion block acts on
    T·ψ(x) as T·ψ(bx)."""
    rho = ext.degree
    exponents = np.add.outer(np.arange(rho), np.arange(rho))
    values = ext.powers[1] ** exponents if rho > 1 else ext.ext.Ones((1, 1))
    return ext.psi(values)[..., 0]


class TensorProductCode(LinearCode):
    """Tensor product code C = C2 ⊗_H C1 over GF(q).

    A word v of length n1·n2 is read as n2 consecutive subblocks of length
    n1. Subblock j has inner syndrome x_j = ψ⁻¹(T⁻¹·A·v_j) in GF(q^ρ1),
    and v ∈ C iff (x_1, …, x_{n2}) ∈ C2. The ψ-expanded and transposed
    companion forms use A = H1 and T = I; the plain companion form uses
    A = L·H1 with L·H1·H1ᵀ = I and the symbol map T of the trace-like
    bilinear form.

    Attributes
    ----------
    c1 : LinearCode
        Inner code over GF(q), q ∈ {2, 4}.
    c2 : LinearCode
        Outer code over GF(q^ρ1), ρ1 = n1 − k1.
    variant : str
        One of ``'psi'``, ``'companion_t'`` or ``'companion'``.
    ext : Extension
        Coordinates of GF(q^ρ1) over GF(q).
    inner_check : galois.FieldArray
        A, the ρ1×n1 matrix applied to each subblock.
    symbol_map : galois.FieldArray
        T, ρ1×ρ1.
    inner_transform : galois.FieldArray
        L for the plain companion form, identity otherwise.
    symbol_columns : galois.FieldArray
        a_k = ψ⁻¹(T⁻¹·A)_k, so that x_j = Σ_k a_k·v_{jk}.
    h_ext : galois.FieldArray or None
        H2 ⊗ ψ⁻¹(H1) over GF(q^ρ1), for the ψ-expanded form.
    h_base : galois.FieldArray
        The ρ1ρ2×n1n2 parity check over GF(q).
    """
    def __init__(self, c1: LinearCode, c2: LinearCode, variant: str = 'psi'):
        variant = canonical_variant(variant)
        base = c1.field
        if base.order not in (2, 4):
            raise ValueError(f'Invalid inner field: GF({base.order})')
        if c2.field.characteristic != 2 or \
                c2.field.degree != base.degree * c1.rho:
            raise ValueError(
                f'C2 must be over GF({base.order}^ρ1) with ρ1 = {c1.rho}, '
                f'got GF({c2.field.order})'
            )
        if variant != 'psi' and base.order != 2:
            raise ValueError(f'Invalid variant for GF({base.order}): '
                             f'{variant}')
        self.c1, self.c2, self.variant = c1, c2, variant
        self.n1, self.n2 = c1.n, c2.n
        self.ext = Extension(base, c2.field)
        H1, H2 = c1.h, c2.h
        rho1 = c1.rho
        identity = base.Identity(rho1)

        self.h_ext = None
        if variant == 'companion':
            self.inner_transform = solve_left_inverse(H1 @ H1.T)
            self.symbol_map = _symbol_map(self.ext)
        else:
            self.inner_transform = identity
            self.symbol_map = identity
        self.inner_check = self.inner_transform @ H1
        self._symbol_inverse = inverse(self.symbol_map, 'T')
        self._symbol_check = self._symbol_inverse @ self.inner_check
        self.symbol_columns = self.ext.psi_inv_matrix(self._symbol_check)[0]
        # σ_j = H1·v_j recovered from ψ(x_j)
        self.h1_from_symbol = inverse(self.inner_transform, 'L') @ \
            self.symbol_map

        if variant == 'psi':
            self.h_ext = kron(H2, self.symbol_columns[None, :])
            h_base = self.ext.psi_matrix(self.h_ext)
        else:
            blocks = companion_expand(H2, transposed=(variant == 'companion_t'))
            h_base = blocks @ kron(base.Identity(self.n2), self.inner_check)
        logging.info(f'Built {variant} tensor product {c2.name} ⊗ {c1.name}: '
                     f'{h_base.shape[0]}×{h_base.shape[1]} over '
                     f'GF({base.order})')

        d1, d2 = c1.d_lower, c2.d_lower
        d_lower = min(d1, d2) if d1 is not None and d2 is not None else None
        super().__init__(h_base, d_lower=d_lower,
                         name=f'{c2.name}⊗{c1.name}')
        self.h_base = self.h
        if self.rho != rho1 * c2.rho:
            raise RuntimeError(f'Tensor product parity check has rank '
                               f'{self.rho}, expected {rho1 * c2.rho}')

    def inner_syndromes(self, v) -> galois.FieldArray:
        """Extension-field inner syndromes of a word (shape n2) or of each
        word in a batch (shape batch×n2)."""
        v = self._check_length(v)
        blocks = v.reshape(-1, self.n1)
        coords = (blocks @ self._symbol_check.T).reshape(
            v.shape[:-1] + (self.n2, self.c1.rho))
        return self.ext.psi_inv(coords)

    def outer_syndrome(self, v) -> galois.FieldArray:
        """H2·(x_1, …, x_{n2})ᵀ over GF(q^ρ1)."""
        return self.c2.syndrome(self.inner_syndromes(v))

    def is_member(self, v) -> bool:
        """Membership through the inner-syndrome route; agrees with
        :meth:`contains`, which uses ``h_base``."""
        return ~np.any(as_ints(self.outer_syndrome(v)), axis=-1)

    def pack_syndrome(self, s) -> galois.FieldArray:
        """Outer syndrome S_i = ψ⁻¹(T⁻¹·s_i) from a base-field syndrome
        h_base·vᵀ, whose ρ2 blocks of ρ1 rows are s_1, …, s_{ρ2}."""
        s = self.field(s)
        blocks = s.reshape(-1, self.c1.rho) @ self._symbol_inverse.T
        return self.ext.psi_inv(
            blocks.reshape(s.shape[:-1] + (self.c2.rho, self.c1.rho)))

    def _realizations(self):
        base = self.field
        lambdas = base.elements[1:]
        values = self.ext.embed(lambdas)[:, None] * self.symbol_columns[None, :]
        table = {}
        for (i, k), value in np.ndenumerate(as_ints(values)):
            if value:
                table.setdefault(int(value), (lambdas[i], k))
        return table

    def _realize(self, target: int, table):
        if target == 0:
            return []
        if target in table:
            return [table[target]]
        GF = self.ext.ext
        for value, (lam, k) in table.items():
            rest = int(GF(target) - GF(value))
            if rest in table and table[rest][1] != k:
                return [(lam, k), table[rest]]
        return None

    def certify_distance(self, config: Optional[Dict[str, Any]] = None
                         ) -> Distance:
        """Bound d between min{d1, d2} and the weight of a witness codeword.

        Two witnesses are tried: a minimum-weight C1 codeword placed in the
        first subblock, and a minimum-weight C2 codeword s, scaled by some
        γ so that every γ·s_j is realized in its subblock by one symbol
        (λ at a coordinate k with λ·a_k = γ·s_j) or, failing that, by two.
        The result is exact when the lighter witness meets the bound.
        """
        dist1 = self.c1.min_distance(config)
        dist2 = self.c2.min_distance(config)
        bounds = [d.value for d in (dist1, dist2) if d.value is not None]
        if not bounds:
            return Distance(None, True)
        lower = min(bounds)
        witnesses = []
        if dist1.witness is not None:
            w = self.field.Zeros(self.n)
            w[:self.n1] = dist1.witness
            witnesses.append(w)
        if dist2.witness is not None:
            w = self._lift_outer_witness(dist2.witness)
            if w is not None:
                witnesses.append(w)
        witnesses = [w for w in witnesses
                     if np.any(w) and self.is_member(w) and self.contains(w)]
        if not witnesses:
            logging.info(f'No witness realized for {self.name}; '
                         f'lower bound {lower} only')
            return Distance(lower, False)
        best = min(witnesses, key=weight)
        upper = weight(best)
        return Distance(lower if upper > lower else upper, upper <= lower,
                        upper, best)

    def _lift_outer_witness(self, s) -> Optional[galois.FieldArray]:
        GF = self.ext.ext
        s = GF(s)
        support = np.flatnonzero(as_ints(s))
        if not len(support):
            return None
        table = self._realizations()
        j0 = support[0]
        best, best_cost = None, None
        for value in table:
            gamma = GF(value) / s[j0]
            parts = [self._realize(int(gamma * s[j]), table) for j in support]
            if any(p is None for p in parts):
                continue
            cost = sum(len(p) for p in parts)
            if best_cost is None or cost < best_cost:
                best, best_cost = parts, cost
                if cost == len(support):
                    break
        if best is None:
            return None
        w = self.field.Zeros(self.n)
        for j, part in zip(support, best):
            for lam, k in part:
                w[j * self.n1 + k] = lam
        return w

    def min_distance(self, config: Optional[Dict[str, Any]] = None
                     ) -> Distance:
        if self._distance is None:
            result = self.certify_distance(config)
            limit = {**default_distance_config, **(config or {})}[
                'enumeration_limit']
            if not result.exact and self.q ** self.k <= limit:
                result = super().min_distance(config)
            self._distance = result
        return self._distance


def tpc_build(c1: LinearCode, c2: LinearCode,
              variant: str = 'psi') -> TensorProductCode:
    """Tensor product code of C1 (inner) and C2 (outer, over GF(q^ρ1)).

    Parameters
    ----------
    c1 : LinearCode
        Inner code over GF(2) or GF(4).
    c2 : LinearCode
        Outer code over the degree-ρ1 extension of c1's field.
    variant : str
        ``'psi'`` for ψ(H2 ⊗ ψ⁻¹(H1)), ``'companion_t'`` for transposed
        companion blocks [b]ᵀ times H1, ``'companion'`` for plain companion
        blocks [b] times L·H1.

    Returns
    -------
    TensorProductCode
        [n1n2, n1n2 − ρ1ρ2, ≥ min{d1, d2}].
    """
    return TensorProductCode(c1, c2, variant)


def build_cl(c1: LinearCode, c2: LinearCode) -> TensorProductCode:
    """Plain companion form with L·H1, L = (H1·H1ᵀ)⁻¹.

    Raises
    ------
    HypothesisError
        If H1·H1ᵀ is singular.
    """
    if c1.field.order != 2:
        raise HypothesisError('C1 must be binary for the companion form',
                              f'got GF({c1.field.order})')
    return TensorProductCode(c1, c2, 'companion')
