import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
import galois

from qtpc.algebra.field import (GF2, FieldClass, Extension, alpha, as_ints,
                                field, is_irreducible, period, reciprocal)
from qtpc.algebra.matrix import null_space
from qtpc.codes.base import LinearCode
from qtpc.codes.distance import Distance
from qtpc.errors import HypothesisError


def _x_power_plus_one(n: int) -> galois.Poly:
    return galois.Poly.Degrees([n, 0], field=GF2)


def multiplicative_order(q: int, n: int) -> int:
    if math.gcd(q, n) != 1:
        raise ValueError(f'gcd({q}, {n}) must be 1')
    if n == 1:
        return 1
    m, power = 1, q % n
    while power != 1:
        power = power * q % n
        m += 1
    return m


def cyclotomic_cosets(n: int, q: int = 2) -> List[List[int]]:
    """Partition of Z_n into q-cyclotomic cosets {b, bq, bq², …}, ordered
    by smallest representative."""
    if math.gcd(n, q) != 1:
        raise ValueError(f'gcd({n}, {q}) must be 1')
    seen, cosets = set(), []
    for b in range(n):
        if b in seen:
            continue
        coset, x = [], b
        while x not in coset:
            coset.append(x)
            x = x * q % n
        seen.update(coset)
        cosets.append(coset)
    return cosets


class CyclicCode(LinearCode):
    """Binary cyclic code of length n generated by g(x) | xⁿ − 1.

    The parity check is the canonical ρ×n matrix whose rows are the cyclic
    shifts of the reversed check polynomial h(x) = (xⁿ − 1)/g(x).

    Attributes
    ----------
    g : galois.Poly
        Generator polynomial over GF(2).
    check_poly : galois.Poly
        h(x) = (xⁿ − 1)/g(x).
    """
    def __init__(self, n: int, g: galois.Poly, **kwargs):
        if g.field is not GF2:
            raise ValueError('Cyclic codes are built over GF(2) here')
        check_poly, remainder = divmod(_x_power_plus_one(n), g)
        if np.any(remainder.coeffs):
            raise ValueError(f'g(x) = {g} does not divide x^{n} + 1')
        self.g = g
        self.check_poly = check_poly
        k = check_poly.degree
        rho = n - k
        # h reversed, lowest degree first: (h_k, h_{k-1}, ..., h_0)
        h_rev = as_ints(check_poly.coeffs)
        H = GF2.Zeros((rho, n))
        for i in range(rho):
            H[i, i:i + k + 1] = h_rev
        kwargs.setdefault('name', f'Cyclic[{n},{k}]')
        super().__init__(H, **kwargs)
        self._defining_set = None

    @property
    def defining_set(self) -> List[int]:
        """Exponents i with g(βⁱ) = 0, β a primitive n-th root of unity."""
        if self._defining_set is None:
            if self.n % 2 == 0:
                raise ValueError('Defining sets need odd length')
            GF = field(multiplicative_order(2, self.n))
            beta = root_of_unity(GF, self.n)
            g_ext = galois.Poly(GF(as_ints(self.g.coeffs)))
            values = g_ext(beta ** np.arange(self.n))
            self._defining_set = [int(i) for i in
                                  np.flatnonzero(as_ints(values) == 0)]
        return self._defining_set


@dataclass(frozen=True)
class FireSpec:
    """Parameters of a Fire code with generator (x^{2l−1} + 1)b(x)."""
    b_poly: galois.Poly
    l: int
    rho_period: int
    n: int

    @property
    def w(self) -> int:
        return self.b_poly.degree

    @property
    def check_symbols(self) -> int:
        return self.w + 2 * self.l - 1


class FireCode(CyclicCode):
    """Fire code correcting any single burst of length at most ``fire.l``."""
    def __init__(self, fire: FireSpec, **kwargs):
        g = _x_power_plus_one(2 * fire.l - 1) * fire.b_poly
        self.fire = fire
        kwargs.setdefault('name',
                          f'Fire[{fire.n},{fire.n - fire.check_symbols}]')
        super().__init__(fire.n, g, **kwargs)

    @property
    def burst_length(self) -> int:
        return self.fire.l


def root_of_unity(GF: FieldClass, n: int) -> galois.FieldArray:
    if (GF.order - 1) % n:
        raise ValueError(f'{n} does not divide {GF.order - 1}')
    return alpha(GF) ** ((GF.order - 1) // n)


def repetition(n: int) -> CyclicCode:
    """[n, 1, n] repetition code; parity rows e_i + e_{i+1}."""
    if n < 2:
        raise ValueError(f'Repetition length must be at least 2, got {n}')
    g = galois.Poly([1] * n, field=GF2)
    return CyclicCode(n, g, d_exact=n, witness=GF2.Ones(n),
                      name=f'Repetition[{n},1,{n}]')


def hamming(r: int, q: int = 2) -> LinearCode:
    """Hamming code of redundancy r over GF(q), q ∈ {2, 4}; column j is
    the j-th nonzero vector (most significant digit on top) whose first
    nonzero entry is 1."""
    if r < 2:
        raise ValueError(f'Redundancy must be at least 2, got {r}')
    GF = field(int(math.log2(q)))
    columns = []
    for i in range(1, q ** r):
        digits = [(i // q ** (r - 1 - s)) % q for s in range(r)]
        if next(d for d in digits if d) == 1:
            columns.append(digits)
    H = GF(np.array(columns).T)
    n = H.shape[1]
    return LinearCode(H, d_exact=3, name=f'Hamming[{n},{n - r},3]_{q}')


def extended_hamming(r: int) -> LinearCode:
    """Binary Hamming code extended by an overall parity bit."""
    base = hamming(r)
    n = base.n + 1
    H = GF2.Zeros((r + 1, n))
    H[:r, :base.n] = base.h
    H[r, :] = 1
    return LinearCode(H, d_exact=4, name=f'ExtHamming[{n},{n - r - 1},4]')


def cyclic_from_defining_set(n: int, z: Sequence[int],
                             **kwargs) -> CyclicCode:
    """Binary cyclic code whose zeros are βⁱ, i ∈ z, for β a primitive
    n-th root of unity in GF(2^m), m = ord_n(2)."""
    if n % 2 == 0:
        raise ValueError(f'Length must be odd, got {n}')
    z = sorted({i % n for i in z})
    closed = set(z)
    if any(2 * i % n not in closed for i in z):
        raise ValueError(f'Defining set {z} is not a union of cyclotomic '
                         f'cosets mod {n}')
    GF = field(multiplicative_order(2, n))
    beta = root_of_unity(GF, n)
    if z:
        g_ext = galois.Poly.Roots(beta ** np.array(z), field=GF)
        coeffs = as_ints(g_ext.coeffs)
        if np.any(coeffs > 1):
            raise RuntimeError('Generator polynomial is not binary')
        g = galois.Poly(coeffs, field=GF2)
    else:
        g = galois.Poly.One(GF2)
    code = CyclicCode(n, g, **kwargs)
    code._defining_set = z
    return code


def bch(m: int, b: int, delta: int) -> CyclicCode:
    """Primitive binary BCH code of length 2^m − 1 with zeros α^b, …,
    α^{b+δ−2} (and their conjugates). Narrow sense when b = 1."""
    if delta < 2:
        raise ValueError(f'Design distance must be at least 2, got {delta}')
    n = 2 ** m - 1
    cosets = {c[0]: c for c in cyclotomic_cosets(n, 2)}
    z = set()
    for i in range(b, b + delta - 1):
        for coset in cosets.values():
            if i % n in coset:
                z.update(coset)
    code = cyclic_from_defining_set(n, z, d_lower=delta,
                                    name=f'BCH({m},{b},{delta})')
    code.bch_params = (m, b, delta)
    return code


class DualContainingCheck(NamedTuple):
    predicted: bool
    verified: bool

    @property
    def agree(self) -> bool:
        return self.predicted == self.verified


def bch_dual_containing_check(code: LinearCode) -> DualContainingCheck:
    """Design-distance prediction versus a direct H·Hᵀ = 0 check.

    Accepts a narrow-sense primitive BCH code from :func:`bch`, whose
    prediction is δ ≤ 2^⌈m/2⌉ − 1, or a narrow-sense Reed–Solomon code of
    length 2^ρ − 1, whose binary subfield subcode is the BCH code with
    δ = d and is checked the same way.
    """
    if hasattr(code, 'bch_params'):
        m, b, delta = code.bch_params
        if b != 1:
            raise ValueError('Prediction requires a narrow-sense BCH code')
        predicted = 2 <= delta <= 2 ** math.ceil(m / 2) - 1
        return DualContainingCheck(predicted, code.is_dual_containing())
    if isinstance(code, ReedSolomonCode) and code.is_narrow_sense_primitive:
        m = code.field.degree
        predicted = code.r + 1 <= 2 ** math.ceil(m / 2) - 1
        sub = subfield_subcode(code)
        return DualContainingCheck(predicted, sub.is_dual_containing())
    raise ValueError(f'No dual-containing prediction for {code.name}')


class ReedSolomonCode(LinearCode):
    """Generalized Reed–Solomon code with parity check
    H[i, j] = v_j·x_j^{c+i}, i = 0, …, r−1, plus an optional point at
    infinity whose column is v_∞·e_{r−1}.

    Attributes
    ----------
    points : galois.FieldArray
        Distinct evaluation points x_j.
    first_power : int
        c, 1 for narrow-sense codes on nonzero points, 0 otherwise.
    multipliers : galois.FieldArray
        Column multipliers v_j (ones for plain Reed–Solomon codes).
    infinity : bool
        Whether the last column is the point at infinity.
    r : int
        Number of check symbols, d − 1.
    """
    def __init__(self, GF: FieldClass, points, r: int, first_power: int = 1,
                 multipliers=None, infinity: bool = False,
                 infinity_multiplier=1, name: Optional[str] = None):
        points = GF(points)
        n_fin = len(points)
        if len(set(as_ints(points).tolist())) != n_fin:
            raise ValueError('Evaluation points must be distinct')
        multipliers = GF.Ones(n_fin) if multipliers is None \
            else GF(multipliers)
        self.points = points
        self.first_power = first_power
        self.multipliers = multipliers
        self.infinity = infinity
        self.infinity_multiplier = GF(infinity_multiplier)
        self.r = r
        n = n_fin + int(infinity)
        H = GF.Zeros((r, n))
        row = points ** first_power if first_power else GF.Ones(n_fin)
        for i in range(r):
            H[i, :n_fin] = multipliers * row
            row = row * points
        if infinity and r:
            H[r - 1, n_fin] = self.infinity_multiplier
        name = name or f'RS[{n},{n - r},{r + 1}]_{GF.order}'
        super().__init__(H, d_exact=r + 1, name=name)

    @property
    def is_narrow_sense_primitive(self) -> bool:
        GF = self.field
        return (self.first_power == 1 and not self.infinity
                and len(self.points) == GF.order - 1
                and np.all(as_ints(self.multipliers) == 1))

    def min_distance(self, config=None) -> Distance:
        if self._distance is None:
            d = self.r + 1
            if self.r == 0:
                witness = self.field.Zeros(self.n)
                witness[0] = 1
            else:
                local = null_space(self.h[:, :d])
                witness = self.field.Zeros(self.n)
                witness[:d] = local[0]
            self._distance = Distance(d, True, d, witness)
        return self._distance


def reed_solomon(GF: FieldClass, n: int, k: int) -> ReedSolomonCode:
    """[n, k, n−k+1] Reed–Solomon code over GF(q).

    Evaluation points: the n-th roots of unity β¹, …, βⁿ when n | q − 1
    (narrow sense, α¹, …, αⁿ for n = q − 1); α¹, …, αⁿ when n < q − 1
    otherwise; all nonzero points then 0 when n = q; and additionally the
    point at infinity, last, when n = q + 1.
    """
    q = GF.order
    if not 1 <= k <= n:
        raise ValueError(f'Invalid dimension k = {k} for length {n}')
    if n > q + 1:
        raise ValueError(f'Length {n} too large for GF({q})')
    r = n - k
    a = alpha(GF)
    nonzero = a ** np.arange(1, q)
    if n <= q - 1:
        if (q - 1) % n == 0:
            points = root_of_unity(GF, n) ** np.arange(1, n + 1)
        else:
            points = nonzero[:n]
        return ReedSolomonCode(GF, points, r, first_power=1)
    points = np.concatenate([nonzero, GF([0])])
    return ReedSolomonCode(GF, points, r, first_power=0,
                           infinity=(n == q + 1))


def _grs_search(GF: FieldClass, n: int, r: int,
                limit: int = 1 << 16) -> Optional[ReedSolomonCode]:
    q = GF.order
    all_points = np.concatenate([alpha(GF) ** np.arange(1, q), GF([0])])
    infinity = n == q + 1
    n_fin = n - int(infinity)
    nonzero = GF.elements[1:]
    for subset in itertools.islice(
            itertools.combinations(range(q), n_fin), limit):
        points = all_points[list(subset)]
        V = GF.Zeros((2 * r - 1, n))
        row = GF.Ones(n_fin)
        for s in range(2 * r - 1):
            V[s, :n_fin] = row
            row = row * points
        if infinity:
            V[2 * r - 2, n_fin] = 1
        N = null_space(V)
        if len(N) == 0:
            continue
        coefs = np.array(list(itertools.islice(
            itertools.product(as_ints(nonzero).tolist(), repeat=len(N)),
            limit)))
        U = GF(coefs) @ N
        full = np.flatnonzero(np.all(as_ints(U) != 0, axis=1))
        if not len(full):
            continue
        u = U[full[0]]
        v = u ** (q // 2) if q > 2 else u
        code = ReedSolomonCode(GF, points, r, first_power=0,
                               multipliers=v[:n_fin], infinity=infinity,
                               infinity_multiplier=v[n_fin] if infinity else 1,
                               name=f'GRS[{n},{n - r},{r + 1}]_{q}')
        if code.is_dual_containing():
            return code
    return None


def mds_dual_containing(GF: FieldClass, n: int, d: int) -> ReedSolomonCode:
    """Dual-containing MDS code [n, n−d+1, d] over GF(q).

    Tries the Reed–Solomon code of :func:`reed_solomon` first, then
    searches generalized Reed–Solomon column multipliers v with
    Σ_j v_j² x_j^s = 0 for s = 0, …, 2d−4.

    Raises
    ------
    HypothesisError
        If d > ⌊n/2⌋ + 1, or no instance is found.
    """
    if d > n // 2 + 1:
        raise HypothesisError('d ≤ ⌊n/2⌋ + 1 for a dual-containing MDS code',
                              f'n = {n}, d = {d}')
    if d < 1:
        raise ValueError(f'Invalid distance {d}')
    code = reed_solomon(GF, n, n - d + 1)
    if code.is_dual_containing():
        return code
    logging.info(f'{code.name} is not dual-containing; searching GRS '
                 f'multipliers')
    code = _grs_search(GF, n, d - 1)
    if code is None:
        raise HypothesisError('a dual-containing MDS code must exist',
                              f'none found for n = {n}, d = {d} over '
                              f'GF({GF.order})')
    return code


def is_reversible(code: CyclicCode) -> bool:
    """g(x) = g_r(x), cross-checked against Z = −Z mod n."""
    by_poly = reciprocal(code.g) == code.g
    if code.n % 2:
        z = set(code.defining_set)
        by_set = z == {(-i) % code.n for i in z}
        if by_set != by_poly:
            raise RuntimeError(f'Reversibility criteria disagree for '
                               f'{code.name}')
    return by_poly


def fire_code(b_poly: galois.Poly, l: int) -> FireCode:
    """Fire code with generator (x^{2l−1} + 1)b(x) and length
    LCM(2l − 1, period of b).

    Raises
    ------
    HypothesisError
        Naming the violated condition: b irreducible, l ≤ deg b, or
        2l − 1 not divisible by the period of b.
    """
    if not is_irreducible(b_poly):
        raise HypothesisError('b(x) must be irreducible', str(b_poly))
    w = b_poly.degree
    if not 1 <= l <= w:
        raise HypothesisError('1 ≤ l ≤ deg b(x)', f'l = {l}, w = {w}')
    rho = period(b_poly)
    if (2 * l - 1) % rho == 0:
        raise HypothesisError('2l − 1 not divisible by the period of b(x)',
                              f'2l − 1 = {2 * l - 1}, period = {rho}')
    n = math.lcm(2 * l - 1, rho)
    return FireCode(FireSpec(b_poly, l, rho, n))


def subfield_subcode(code: LinearCode, base: FieldClass = GF2) -> LinearCode:
    """Subfield subcode over ``base`` with parity check ψ(H)."""
    ext = Extension(base, code.field)
    return LinearCode(ext.psi_matrix(code.h), name=f'ψ({code.name})')


_named_codes: Dict[str, Callable[[], LinearCode]] = {
    'hamming_7_4': functools.partial(hamming, 3),
    'hamming_15_11': functools.partial(hamming, 4),
    'extended_hamming_8_4': functools.partial(extended_hamming, 3),
    'hamming_5_3_gf4': functools.partial(hamming, 2, 4),
}


def named_code(name: str) -> LinearCode:
    if name not in _named_codes:
        raise ValueError(f'Invalid code name: {name}')
    return _named_codes[name]()
