from .field import (GF2, Extension, field, gf4, companion, binary_extension,
                    period, reciprocal)
from .matrix import kron, rank, null_space, companion_expand
