from qtpc.algebra.field import field, Extension
from qtpc.codes.base import LinearCode
from qtpc.codes.tensor import TensorProductCode, tpc_build, build_cl
from qtpc.quantum.stabilizer import StabilizerCode, css, hermitian_code
from qtpc.errors import HypothesisError


__version__ = '0.1.0'
