import numpy as np
import galois

from qtpc.algebra.field import GF2, companion, conjugate
from qtpc.errors import HypothesisError


def _check_same_field(A: galois.FieldArray, B: galois.FieldArray) -> None:
    if type(A) is not type(B):
        raise ValueError(
            f'Field mismatch: GF({type(A).order}) vs GF({type(B).order})'
        )


def matmul(A: galois.FieldArray, B: galois.FieldArray) -> galois.FieldArray:
    _check_same_field(A, B)
    if A.shape[-1] != B.shape[0]:
        raise ValueError(f'Shape mismatch: {A.shape} @ {B.shape}')
    return A @ B


def transpose(A: galois.FieldArray) -> galois.FieldArray:
    return A.T


def dagger(A: galois.FieldArray) -> galois.FieldArray:
    """Conjugate transpose over GF(4)."""
    return conjugate(A).T


def rank(A: galois.FieldArray) -> int:
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(A))


def is_full_rank(A: galois.FieldArray) -> bool:
    return rank(A) == A.shape[0]


def row_basis(A: galois.FieldArray) -> galois.FieldArray:
    """Nonzero rows of the reduced row echelon form of ``A``."""
    if A.shape[0] == 0:
        return A.copy()
    R = A.row_reduce()
    return R[np.any(R != 0, axis=1)]


def null_space(A: galois.FieldArray) -> galois.FieldArray:
    """Rows spanning {x : A xᵀ = 0}."""
    GF = type(A)
    n = A.shape[1]
    r = rank(A)
    if r == 0:
        return GF.Identity(n)
    if r == n:
        return GF.Zeros((0, n))
    return A.null_space()


def kron(A: galois.FieldArray, B: galois.FieldArray) -> galois.FieldArray:
    """Kronecker product; block (i, j) of the result is a_ij·B."""
    _check_same_field(A, B)
    (ra, ca), (rb, cb) = A.shape, B.shape
    blocks = A[:, None, :, None] * B[None, :, None, :]
    return blocks.reshape(ra * rb, ca * cb)


def inverse(S: galois.FieldArray, name: str = 'S') -> galois.FieldArray:
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f'{name} must be square, got shape {S.shape}')
    if rank(S) < S.shape[0]:
        raise HypothesisError(f'{name} must be full rank',
                              f'rank {rank(S)} < {S.shape[0]}')
    return np.linalg.inv(S)


def solve_left_inverse(S: galois.FieldArray,
                       name: str = 'H1·H1ᵀ') -> galois.FieldArray:
    """L with L·S = I for a square invertible ``S``.

    Raises
    ------
    HypothesisError
        If ``S`` is singular.
    """
    L = inverse(S, name)
    if not np.array_equal(L @ S, type(S).Identity(S.shape[0])):
        raise HypothesisError(f'{name} must be full rank', 'L·S ≠ I')
    return L


def companion_expand(H: galois.FieldArray,
                     transposed: bool) -> galois.FieldArray:
    """Replace each entry b of ``H`` by the binary block [b]ᵀ
    (``transposed=True``) or [b]; r×c becomes ρr×ρc."""
    GF = type(H)
    rho = GF.degree
    r, c = H.shape
    blocks = companion(GF, H)
    if transposed:
        blocks = blocks.swapaxes(-1, -2)
    return blocks.transpose(0, 2, 1, 3).reshape(r * rho, c * rho)


def in_row_space(A: galois.FieldArray, v: galois.FieldArray) -> bool:
    if A.shape[0] == 0:
        return not np.any(v)
    stacked = np.concatenate([A, v.reshape(1, -1)], axis=0)
    return rank(stacked) == rank(A)


class RowSpace:
    """Membership oracle for the row space of a binary matrix.

    Rows are brought to reduced echelon form once; membership of a word
    (or of each row of a 2-D batch) is then a sequence of pivot
    eliminations on plain ``uint8`` arrays.

    Attributes
    ----------
    basis : np.ndarray
        Reduced echelon basis as a ``uint8`` array.
    pivots : np.ndarray
        Pivot column of each basis row.
    """
    def __init__(self, A):
        A = GF2(np.asarray(A).view(np.ndarray).astype(np.int64) % 2)
        basis = row_basis(A)
        self.basis = np.asarray(basis).view(np.ndarray).astype(np.uint8)
        self.pivots = (np.argmax(self.basis != 0, axis=1)
                       if len(self.basis) else np.zeros(0, dtype=int))
        self.dim = len(self.basis)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(np.asarray(v).view(np.ndarray), dtype=np.uint8) % 2
        for row, p in zip(self.basis, self.pivots):
            mask = v[..., p] == 1
            v[mask] ^= row
        return v

    def contains(self, v: np.ndarray):
        """True where ``v`` (1-D word or 2-D batch) lies in the row space."""
        return ~np.any(self.reduce(v), axis=-1)
