from .stabilizer import (StabilizerCode, Purity, BurstCapability, css,
                         hermitian_code, symplectic_commute,
                         classical_error_classes)
from .construction import (pure_qtpc, companion_qtpc, repetition_burst_qtpc,
                           fire_burst_qtpc, self_dual_square_qtpc,
                           self_dual_mds_qtpc)
from .comparison import (CqcSpec, cqc_parameters, qtpc_table_parameters,
                         comparison_rows)
