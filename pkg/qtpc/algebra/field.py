import functools
import logging
from typing import Dict, List, Optional, Sequence, Type, Union

import numpy as np
import galois

from qtpc.util.config import default_primitive_polys


GF2 = galois.GF(2)
FieldClass = Type[galois.FieldArray]


def poly_from_bits(bits: Sequence[int]) -> galois.Poly:
    """Polynomial over GF(2) from its coefficients, lowest degree first."""
    bits = [int(b) for b in bits]
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f'Invalid coefficient bits: {bits}')
    if not any(bits):
        return galois.Poly.Zero(GF2)
    return galois.Poly(bits, field=GF2, order='asc')


def poly_to_bits(f: galois.Poly) -> List[int]:
    """Coefficients of ``f``, lowest degree first. The zero polynomial gives
    an empty list."""
    if not np.any(f.coeffs):
        return []
    return [int(c) for c in f.coeffs[::-1]]


@functools.lru_cache(maxsize=None)
def default_primitive_poly(m: int) -> galois.Poly:
    """Lexicographically smallest primitive polynomial of degree ``m``."""
    return galois.primitive_poly(2, m, method='min')


@functools.lru_cache(maxsize=None)
def _field(m: int, poly_int: int) -> FieldClass:
    if m == 1:
        return GF2
    poly = galois.Poly.Int(poly_int, field=GF2)
    logging.info(f'Building GF(2^{m}) with primitive polynomial {poly}')
    return galois.GF(2 ** m, irreducible_poly=poly)


def field(m: int,
          primitive_poly: Optional[Union[galois.Poly, Sequence[int]]] = None
          ) -> FieldClass:
    """Binary extension field GF(2^m) in the polynomial basis.

    Parameters
    ----------
    m : int
        Extension degree.
    primitive_poly : galois.Poly or sequence of int, optional
        Defining polynomial, as a ``galois.Poly`` or as coefficient bits
        lowest degree first. Defaults to the configured override for
        ``m`` if any, else the lexicographically smallest primitive
        polynomial of degree ``m``.

    Returns
    -------
    Type[galois.FieldArray]
        The field class. Its integer representation stores the coefficient
        of α^i in bit i, where α (integer 2) is a root of the polynomial.
    """
    if m < 1:
        raise ValueError(f'Invalid extension degree: {m}')
    if primitive_poly is None:
        primitive_poly = default_primitive_polys.get(m)
    if primitive_poly is None:
        poly = default_primitive_poly(m)
    else:
        if isinstance(primitive_poly, galois.Poly):
            poly = primitive_poly
        else:
            poly = poly_from_bits(primitive_poly)
        if poly.degree != m or (m > 1 and not poly.is_primitive()):
            raise ValueError(
                f'Invalid primitive polynomial for GF(2^{m}): {poly}'
            )
    return _field(m, int(poly))


def gf4() -> FieldClass:
    return field(2)


def primitive_poly_of(GF: FieldClass) -> galois.Poly:
    if GF.order == 2:
        return poly_from_bits([1, 1])
    return GF.irreducible_poly


def field_spec(GF: FieldClass) -> Dict[str, object]:
    """JSON-ready description ``{"m": ..., "primitive_poly": [...]}``."""
    return {'m': int(GF.degree),
            'primitive_poly': poly_to_bits(primitive_poly_of(GF))}


def field_from_spec(spec: Dict[str, object]) -> FieldClass:
    if 'm' not in spec:
        raise ValueError(f'Invalid field spec (missing "m"): {spec}')
    return field(int(spec['m']), spec.get('primitive_poly'))


def alpha(GF: FieldClass) -> galois.FieldArray:
    """The root α of the defining polynomial (1 for GF(2))."""
    return GF(2) if GF.order > 2 else GF(1)


def int_bits(values: np.ndarray, width: int) -> np.ndarray:
    """Expand integers into bit arrays of length ``width``, bit 0 first."""
    values = np.asarray(values, dtype=np.int64)
    return ((values[..., None] >> np.arange(width)) & 1).astype(np.uint8)


def bits_int(bits: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits, dtype=np.int64)
    return (bits << np.arange(bits.shape[-1])).sum(axis=-1)


def as_ints(x: np.ndarray) -> np.ndarray:
    """Plain integer view of a field array."""
    return np.asarray(x).view(np.ndarray).astype(np.int64)


def _require_gf4(x: galois.FieldArray) -> None:
    if type(x).order != 4:
        raise ValueError(f'Expected a GF(4) array, got GF({type(x).order})')


def trace_gf4(a: galois.FieldArray) -> galois.FieldArray:
    """Trace GF(4) → GF(2), Tr(a) = a + a²."""
    _require_gf4(a)
    return GF2(as_ints(a + a ** 2))


def conjugate(v: galois.FieldArray) -> galois.FieldArray:
    """Frobenius conjugation over GF(4) (elementwise square)."""
    _require_gf4(v)
    return v ** 2


def _check_pair(u: galois.FieldArray, v: galois.FieldArray) -> None:
    if type(u) is not type(v):
        raise ValueError('Vectors are over different fields')
    if u.shape != v.shape:
        raise ValueError(f'Length mismatch: {u.shape} vs {v.shape}')


def euclidean(u: galois.FieldArray, v: galois.FieldArray):
    _check_pair(u, v)
    return np.sum(u * v)


def hermitian(u: galois.FieldArray, v: galois.FieldArray):
    """Hermitian inner product over GF(4), Σ uᵢvᵢ²."""
    _check_pair(u, v)
    _require_gf4(u)
    return np.sum(u * v ** 2)


def trace_hermitian(u: galois.FieldArray, v: galois.FieldArray):
    """Trace-Hermitian inner product over GF(4), Σ (uᵢvᵢ² + uᵢ²vᵢ), as a
    GF(2) element."""
    _check_pair(u, v)
    _require_gf4(u)
    return GF2(int(np.sum(u * v ** 2 + u ** 2 * v)))


class Extension:
    """Coordinates of GF(q^ρ) over GF(q) for q ∈ {2, 4}.

    ψ maps β = a₀ + a₁α + … + a_{ρ−1}α^{ρ−1} to the column (a₀, …,
    a_{ρ−1}) over GF(q), where α is the root of the defining polynomial of
    the larger field. For q = 4 the subfield GF(4) is embedded through
    ω ↦ α^{(q^ρ−1)/3}.

    Attributes
    ----------
    base : Type[galois.FieldArray]
        GF(q).
    ext : Type[galois.FieldArray]
        GF(q^ρ).
    degree : int
        ρ, the extension degree over ``base``.
    powers : galois.FieldArray
        The basis 1, α, …, α^{ρ−1} as elements of ``ext``.
    """
    def __init__(self, base: FieldClass, ext: FieldClass):
        if base.order not in (2, 4):
            raise ValueError(f'Invalid base field: GF({base.order})')
        if ext.characteristic != 2 or ext.degree % base.degree:
            raise ValueError(
                f'GF({ext.order}) is not an extension of GF({base.order})'
            )
        self.base = base
        self.ext = ext
        self.degree = ext.degree // base.degree
        self._sub = base.degree
        self.powers = alpha(ext) ** np.arange(self.degree)
        if base.order == 2:
            generators = [ext(1)]
        else:
            generators = [ext(1), alpha(ext) ** ((ext.order - 1) // 3)]
        basis = [p * g for p in self.powers for g in generators]
        self._binary = base.order == 2
        to_bits = int_bits([int(b) for b in basis], ext.degree).T
        self._to_bits = to_bits.astype(np.int64)
        self._from_bits = np.asarray(
            np.linalg.inv(GF2(to_bits))
        ).view(np.ndarray).astype(np.int64)

    def __repr__(self):
        return (f'Extension(GF({self.base.order}) ⊂ GF({self.ext.order}), '
                f'degree={self.degree})')

    def psi(self, x) -> galois.FieldArray:
        """ψ applied elementwise: shape ``s`` → ``s + (ρ,)`` over GF(q)."""
        x = self.ext(x)
        bits = int_bits(as_ints(x), self.ext.degree).astype(np.int64)
        if self._binary:
            return self.base(bits)
        coords = (bits @ self._from_bits.T) % 2
        coords = coords.reshape(coords.shape[:-1] + (self.degree, self._sub))
        return self.base(bits_int(coords))

    def psi_inv(self, a) -> galois.FieldArray:
        """Inverse of :meth:`psi`: shape ``s + (ρ,)`` → ``s``."""
        a = self.base(a)
        if a.ndim == 0 or a.shape[-1] != self.degree:
            raise ValueError(
                f'Expected trailing dimension {self.degree}, got {a.shape}'
            )
        if self._binary:
            return self.ext(bits_int(as_ints(a)))
        coords = int_bits(as_ints(a), self._sub)
        coords = coords.reshape(a.shape[:-1] + (self.ext.degree,))
        bits = (coords.astype(np.int64) @ self._to_bits.T) % 2
        return self.ext(bits_int(bits))

    def embed(self, a) -> galois.FieldArray:
        """Image of GF(q) elements inside GF(q^ρ)."""
        a = self.base(a)
        coords = self.base.Zeros(a.shape + (self.degree,))
        coords[..., 0] = a
        return self.psi_inv(coords)

    def psi_matrix(self, H: galois.FieldArray) -> galois.FieldArray:
        """ψ(H): each entry becomes a ρ-tall column, r×c → rρ×c."""
        H = self.ext(H)
        if H.ndim != 2:
            raise ValueError(f'Expected a matrix, got shape {H.shape}')
        r, c = H.shape
        expanded = self.psi(H)
        return expanded.transpose(0, 2, 1).reshape(r * self.degree, c)

    def psi_inv_matrix(self, H: galois.FieldArray) -> galois.FieldArray:
        """Pack each ρ-tall column into one symbol, rρ×c → r×c."""
        H = self.base(H)
        if H.ndim != 2 or H.shape[0] % self.degree:
            raise ValueError(
                f'Row count {H.shape[0] if H.ndim == 2 else H.shape} '
                f'is not a multiple of ρ = {self.degree}'
            )
        r = H.shape[0] // self.degree
        stacked = H.reshape(r, self.degree, H.shape[1]).transpose(0, 2, 1)
        return self.psi_inv(stacked)


@functools.lru_cache(maxsize=None)
def binary_extension(ext: FieldClass) -> Extension:
    return Extension(GF2, ext)


def companion(GF: FieldClass, a) -> galois.FieldArray:
    """Companion representation [a] over GF(2), a ρ×ρ matrix.

    Row j of [a] is ψ(a·α^j), so that [α] is the companion matrix M of the
    defining polynomial and [αⁱ] = Mⁱ. Accepts an array of elements and
    returns the stacked matrices with two trailing axes.
    """
    ext = binary_extension(GF)
    a = GF(a)
    return ext.psi(a[..., None] * ext.powers)


def companion_poly_matrix(f: galois.Poly) -> galois.FieldArray:
    """Companion matrix M of a monic polynomial f over GF(2): ones on the
    superdiagonal and the last row (f₀, f₁, …, f_{ρ−1})."""
    rho = f.degree
    M = GF2.Zeros((rho, rho))
    M[np.arange(rho - 1), np.arange(1, rho)] = 1
    bits = poly_to_bits(f)
    M[rho - 1, :] = bits[:rho]
    return M


def reciprocal(f: galois.Poly) -> galois.Poly:
    """f_r(x) = x^{deg f} f(1/x)."""
    return galois.Poly(f.coeffs[::-1], field=f.field)


def is_self_reciprocal(f: galois.Poly) -> bool:
    return reciprocal(f) == f


def is_irreducible(f: galois.Poly) -> bool:
    return f.degree >= 1 and f.is_irreducible()


def period(f: galois.Poly) -> int:
    """Smallest ρ with f(x) | x^ρ + 1, for f over GF(2) with f(0) = 1."""
    if f.field is not GF2:
        raise ValueError('Period is only defined here for GF(2) polynomials')
    bits = int(f)
    if not bits & 1:
        raise ValueError(f'Period undefined: {f} has zero constant term')
    deg = f.degree
    if deg == 0:
        return 1
    r, rho = 1, 0
    while True:
        r <<= 1
        if (r >> deg) & 1:
            r ^= bits
        rho += 1
        if r == 1:
            return rho


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f'Invalid argument: {n}')
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def self_reciprocal_irreducible_count(w: int) -> int:
    """Number of self-reciprocal irreducible binary polynomials of even
    degree w = 2t, (1/2t) Σ_{d | t, d odd} μ(d) 2^{t/d}."""
    if w < 2 or w % 2:
        raise ValueError(f'Degree must be even and at least 2, got {w}')
    t = w // 2
    total = sum(mobius(d) * 2 ** (t // d)
                for d in range(1, t + 1, 2) if t % d == 0)
    return total // (2 * t)


def enumerate_self_reciprocal_irreducible(w: int) -> List[galois.Poly]:
    if w < 2 or w % 2:
        raise ValueError(f'Degree must be even and at least 2, got {w}')
    return [f for f in galois.irreducible_polys(2, w)
            if is_self_reciprocal(f)]
