from .base import Decoder, DecodeStatus, DecodeResult
from .component import (ReedSolomonDecoder, SyndromeSearchDecoder,
                        SyndromeTableDecoder, BurstTrappingDecoder,
                        component_decoder)
from .tpc import TpcDecoder, decode_tpc, QuantumDecoder, qecc_decode
from .channel import (PauliErrorVector, Burst, BurstPattern,
                      sample_burst_pattern, enumerate_burst_patterns,
                      count_burst_patterns, trial_rng, CapabilityReport,
                      capability_report)
