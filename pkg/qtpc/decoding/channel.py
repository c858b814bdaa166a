import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Tuple, Union

import numpy as np
import galois
from scipy.stats import beta
from tqdm import tqdm

from qtpc.algebra.field import GF2, as_ints
from qtpc.codes.tensor import TensorProductCode
from qtpc.decoding.tpc import QuantumDecoder, TpcDecoder
from qtpc.quantum.stabilizer import StabilizerCode
from qtpc.util.config import default_simulation_config, merge_config


alphabets = ['binary', 'pauli']
_pauli_letters = 'IXZY'


@dataclass(frozen=True)
class PauliErrorVector:
    """Pauli error X(a)Z(b) on n qubits.

    Attributes
    ----------
    a : galois.FieldArray
        X component over GF(2).
    b : galois.FieldArray
        Z component over GF(2).
    """
    a: galois.FieldArray
    b: galois.FieldArray

    @classmethod
    def from_symbols(cls, values) -> 'PauliErrorVector':
        """From per-qubit symbols 0 = I, 1 = X, 2 = Z, 3 = Y."""
        values = np.asarray(values, dtype=np.int64)
        return cls(GF2(values & 1), GF2(values >> 1))

    @classmethod
    def identity(cls, n: int) -> 'PauliErrorVector':
        return cls(GF2.Zeros(n), GF2.Zeros(n))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(as_ints(self.a) | as_ints(self.b)))

    def symplectic(self) -> np.ndarray:
        return np.concatenate([as_ints(self.a), as_ints(self.b)])

    def __str__(self):
        symbols = as_ints(self.a) + 2 * as_ints(self.b)
        return ''.join(_pauli_letters[v] for v in symbols)


@dataclass(frozen=True)
class Burst:
    """Burst confined to one subblock: ``values`` start at offset ``start``
    of subblock ``subblock``; the first and last values are nonzero."""
    subblock: int
    start: int
    values: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {'subblock': self.subblock, 'start': self.start,
                'values': list(self.values)}


@dataclass(frozen=True)
class BurstPattern:
    """Bursts of length ≤ l in pairwise distinct subblocks of length n1.

    Values are bits for the binary alphabet and symbols 1 = X, 2 = Z,
    3 = Y for the Pauli alphabet.
    """
    bursts: Tuple[Burst, ...]
    n1: int
    n2: int
    l: int
    alphabet: str = 'binary'

    def __post_init__(self):
        subblocks = [b.subblock for b in self.bursts]
        if len(set(subblocks)) != len(subblocks):
            raise ValueError('Bursts must fall in distinct subblocks')
        for b in self.bursts:
            if not 1 <= b.length <= self.l or \
                    b.start + b.length > self.n1 or \
                    not 0 <= b.subblock < self.n2:
                raise ValueError(f'Invalid burst: {b}')
            if b.values[0] == 0 or b.values[-1] == 0:
                raise ValueError(f'Burst end symbols must be nonzero: {b}')

    @property
    def t(self) -> int:
        return len(self.bursts)

    def symbols(self) -> np.ndarray:
        v = np.zeros(self.n1 * self.n2, dtype=np.int64)
        for b in self.bursts:
            offset = b.subblock * self.n1 + b.start
            v[offset:offset + b.length] = b.values
        return v

    def to_error(self) -> Union[galois.FieldArray, PauliErrorVector]:
        if self.alphabet == 'pauli':
            return PauliErrorVector.from_symbols(self.symbols())
        return GF2(self.symbols())

    def to_dict(self) -> Dict[str, Any]:
        return {'alphabet': self.alphabet, 'l': self.l,
                'bursts': [b.to_dict() for b in self.bursts]}


def _alphabet_size(alphabet: str) -> int:
    if alphabet not in alphabets:
        raise ValueError(f'Invalid alphabet: {alphabet}')
    return 2 if alphabet == 'binary' else 4


@functools.lru_cache(maxsize=None)
def _single_bursts(n1: int, l: int,
                   alphabet: str) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """All (start, values) bursts of length ≤ l inside one subblock."""
    q = _alphabet_size(alphabet)
    nonzero = range(1, q)
    out = []
    for length in range(1, l + 1):
        for start in range(n1 - length + 1):
            if length == 1:
                out.extend((start, (v,)) for v in nonzero)
                continue
            for first, last in itertools.product(nonzero, nonzero):
                for inner in itertools.product(range(q), repeat=length - 2):
                    out.append((start, (first,) + inner + (last,)))
    return tuple(out)


def _check_feasible(n1: int, n2: int, t: int, l: int) -> None:
    if t < 0 or t > n2:
        raise ValueError(f'Invalid burst count: t = {t} for {n2} subblocks')
    if l < 1 or l > n1:
        raise ValueError(f'Invalid burst length: l = {l} for subblock '
                         f'length {n1}')


def count_burst_patterns(n1: int, n2: int, t: int, l: int,
                         alphabet: str = 'binary') -> int:
    """C(n2, t)·B^t, with B the number of bursts within one subblock."""
    _check_feasible(n1, n2, t, l)
    q = _alphabet_size(alphabet)
    per_block = sum((n1 - length + 1) *
                    ((q - 1) if length == 1 else (q - 1) ** 2 * q ** (length - 2))
                    for length in range(1, l + 1))
    return math.comb(n2, t) * per_block ** t


def enumerate_burst_patterns(n1: int, n2: int, t: int, l: int,
                             alphabet: str = 'binary'
                             ) -> Iterator[BurstPattern]:
    """Every pattern of exactly t bursts of length ≤ l in distinct
    subblocks, each once, in a fixed order."""
    _check_feasible(n1, n2, t, l)
    singles = _single_bursts(n1, l, alphabet)
    for subblocks in itertools.combinations(range(n2), t):
        for choice in itertools.product(singles, repeat=t):
            bursts = tuple(Burst(j, start, values)
                           for j, (start, values) in zip(subblocks, choice))
            yield BurstPattern(bursts, n1, n2, l, alphabet)


def sample_burst_pattern(rng: np.random.Generator, n1: int, n2: int, t: int,
                         l: int, alphabet: str = 'binary') -> BurstPattern:
    """Uniformly random pattern of exactly t bursts of length ≤ l in
    distinct subblocks."""
    _check_feasible(n1, n2, t, l)
    singles = _single_bursts(n1, l, alphabet)
    subblocks = np.sort(rng.choice(n2, size=t, replace=False))
    picks = rng.integers(len(singles), size=t)
    bursts = tuple(Burst(int(j), *singles[i])
                   for j, i in zip(subblocks, picks))
    return BurstPattern(bursts, n1, n2, l, alphabet)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Counter-based generator for trial ``index`` of a run seeded with
    ``seed``; independent of the order trials are run in."""
    return np.random.Generator(np.random.Philox(
        np.random.SeedSequence([seed, index])
    ))


@dataclass
class CapabilityReport:
    """Burst-correction statistics of one exhaustive or Monte Carlo run.

    Attributes
    ----------
    mode : str
        ``'exhaustive'`` or ``'mc'``.
    patterns : int
        Number of error patterns decoded.
    failures : int
        Patterns not corrected (up to stabilizers).
    failure_rate_upper : float or None
        One-sided Clopper–Pearson upper bound on the failure rate at the
        configured confidence; None when no pattern was decoded.
    first_failure : dict or None
        The first failing pattern in run order.
    """
    mode: str
    t: int
    l: int
    seed: Optional[int]
    patterns: int = 0
    failures: int = 0
    failure_rate_upper: Optional[float] = None
    first_failure: Optional[Dict[str, Any]] = None

    @property
    def successes(self) -> int:
        return self.patterns - self.failures

    @property
    def success_rate(self) -> Optional[float]:
        return self.successes / self.patterns if self.patterns else None

    def to_dict(self) -> Dict[str, Any]:
        return {'mode': self.mode, 't': self.t, 'l': self.l,
                'seed': self.seed, 'patterns': self.patterns,
                'successes': self.successes, 'failures': self.failures,
                'success_rate': self.success_rate,
                'failure_rate_upper': self.failure_rate_upper,
                'first_failure': self.first_failure}


def clopper_pearson_upper(failures: int, trials: int,
                          confidence: float) -> Optional[float]:
    if trials == 0:
        return None
    if failures >= trials:
        return 1.0
    return float(beta.ppf(confidence, failures + 1, trials - failures))


def _checker(code, alphabet: str, config):
    if isinstance(code, StabilizerCode):
        if alphabet != 'pauli':
            raise ValueError('Stabilizer codes take the pauli alphabet')
        decoder = QuantumDecoder(code, config)
        return lambda pattern: decoder.decode(pattern.to_error()).success
    if isinstance(code, TensorProductCode):
        if alphabet != 'binary' or code.q != 2:
            raise ValueError('Classical decoding takes binary codes and the '
                             'binary alphabet')
        decoder = TpcDecoder(code, config)

        def check(pattern):
            e = pattern.to_error()
            result = decoder.decode_syndrome(code.syndrome(e))
            return result.success and \
                np.array_equal(as_ints(result.error), as_ints(e))
        return check
    raise ValueError(f'Invalid code for capability reports: {code!r}')


def capability_report(code: Union[StabilizerCode, TensorProductCode],
                      t: int, l: int,
                      trials: Optional[int] = None,
                      seed: int = 0,
                      budget: Optional[int] = None,
                      alphabet: Optional[str] = None,
                      n1: Optional[int] = None,
                      progress: bool = False,
                      config: Optional[Dict[str, Any]] = None,
                      decoder_config: Optional[Dict[str, Any]] = None
                      ) -> CapabilityReport:
    """Decode burst patterns and count failures.

    All patterns with at most t bursts are decoded when there are at most
    ``budget`` of them; otherwise ``trials`` seeded random patterns with
    exactly t bursts are drawn, trial i from ``trial_rng(seed, i)``.
    ``trials = 0`` returns an empty report.

    Parameters
    ----------
    code : StabilizerCode or TensorProductCode
        A CSS stabilizer code built from tensor product codes (Pauli
        bursts), or a binary tensor product code (bit bursts).
    t : int
        Number of bursts, in distinct subblocks.
    l : int
        Maximum burst length.
    trials : int, optional
        Monte Carlo trials; defaults to the simulation config.
    seed : int
        Run seed.
    budget : int, optional
        Largest pattern count decoded exhaustively.
    alphabet : str, optional
        ``'pauli'`` or ``'binary'``; inferred from the code type if None.
    n1 : int, optional
        Subblock length; read from the code if None.
    progress : bool
        Show a tqdm progress bar.
    config : Dict[str, Any], optional
        Overrides for ``default_simulation_config``.
    decoder_config : Dict[str, Any], optional
        Overrides for ``default_decoder_config``.

    Returns
    -------
    CapabilityReport
    """
    config = merge_config(default_simulation_config, config)
    trials = config['trials'] if trials is None else trials
    budget = config['budget'] if budget is None else budget
    if alphabet is None:
        alphabet = 'pauli' if isinstance(code, StabilizerCode) else 'binary'
    if n1 is None:
        if isinstance(code, TensorProductCode):
            n1 = code.n1
        elif getattr(code, 'burst', None) is not None:
            n1 = code.burst.subblock
        else:
            raise ValueError('Subblock length n1 is required')
    n2 = code.n // n1
    check = _checker(code, alphabet, decoder_config)

    total = sum(count_burst_patterns(n1, n2, u, l, alphabet)
                for u in range(t + 1))
    if trials == 0:
        mode = 'mc'
        patterns = iter(())
        count = 0
    elif total <= budget:
        mode = 'exhaustive'
        patterns = itertools.chain.from_iterable(
            enumerate_burst_patterns(n1, n2, u, l, alphabet)
            for u in range(t + 1))
        count = total
    else:
        mode = 'mc'
        patterns = (sample_burst_pattern(trial_rng(seed, i), n1, n2, t, l,
                                         alphabet)
                    for i in range(trials))
        count = trials
    logging.info(f'Capability run on {code!r}: {mode}, {count} patterns, '
                 f't = {t}, l = {l}')

    report = CapabilityReport(mode, t, l, seed)
    for pattern in tqdm(patterns, total=count, disable=not progress):
        report.patterns += 1
        if not check(pattern):
            report.failures += 1
            if report.first_failure is None:
                report.first_failure = pattern.to_dict()
    report.failure_rate_upper = clopper_pearson_upper(
        report.failures, report.patterns, config['confidence'])
    if report.failures:
        logging.warning(f'{report.failures} of {report.patterns} patterns '
                        f'not corrected')
    return report
