import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import yaml

from qtpc.util.data import comparison_table_path


Params = Tuple[int, int, int]


@dataclass(frozen=True)
class CqcSpec:
    """Concatenated quantum code from an inner [[n1, K1, η1]] code and an
    outer quantum MDS [[n2, n2 − 2η2 + 2, η2]] code, used as a baseline
    for a QTPC with BCH inner code of design distance δ1.

    Attributes
    ----------
    m : int
        n1 = 2^m − 1.
    delta1 : int
        Design distance of the QTPC's inner BCH code.
    eta1, eta2 : int
        Inner and outer CQC distances, η1η2 ∈ {δ1, δ1 − 1}.
    """
    m: int
    delta1: int
    eta1: int
    eta2: int

    def __post_init__(self):
        if not 2 <= self.eta1 <= self.eta2:
            raise ValueError(f'Invalid factorization: need 2 ≤ η1 ≤ η2, got '
                             f'η1 = {self.eta1}, η2 = {self.eta2}')
        if self.eta1 * self.eta2 not in (self.delta1, self.delta1 - 1):
            raise ValueError(f'Invalid factorization of δ1 = {self.delta1}: '
                             f'η1η2 = {self.eta1 * self.eta2}')

    @property
    def n1(self) -> int:
        return 2 ** self.m - 1

    @property
    def k1(self) -> int:
        if self.eta1 == 2:
            return self.n1 - 3
        return self.n1 - 2 * self.m * math.ceil((self.eta1 - 1) / 2)


def cqc_parameters(spec: CqcSpec, n2: int) -> Params:
    """[[n1n2, K1(n2 − 2η2 + 2), η1η2]]."""
    return (spec.n1 * n2, spec.k1 * (n2 - 2 * spec.eta2 + 2),
            spec.eta1 * spec.eta2)


def qtpc_table_parameters(n1: int, rho1: int, delta1: int,
                          n2: int) -> Params:
    """[[n1n2, n1n2 − 2ρ1(δ1 − 1), δ1]] for an inner code with ρ1 check
    symbols and an MDS outer code of distance δ1."""
    return n1 * n2, n1 * n2 - 2 * rho1 * (delta1 - 1), delta1


@dataclass(frozen=True)
class TableRow:
    m: int
    n1: int
    q: int
    rho1: int
    delta1: int
    eta1: int
    eta2: int
    n2_min: int

    @property
    def cqc(self) -> CqcSpec:
        return CqcSpec(self.m, self.delta1, self.eta1, self.eta2)

    @property
    def n2_max(self) -> int:
        return self.q ** self.rho1 + 1

    def crossover(self, n2: int) -> bool:
        """n2 ≥ ⌈(1 − 2/m)·n1⌉."""
        return n2 >= math.ceil((1 - Fraction(2, self.m)) * self.n1)


def load_table(path: Optional[Union[str, Path]] = None) -> List[TableRow]:
    with open(path or comparison_table_path) as f:
        data = yaml.safe_load(f)
    return [TableRow(**row) for row in data['rows']]


def comparison_rows(n2_values: Optional[Sequence[int]] = None,
                    rows: Optional[List[TableRow]] = None
                    ) -> List[Dict[str, Any]]:
    """QTPC and CQC parameters side by side.

    Parameters
    ----------
    n2_values : Sequence[int], optional
        Outer lengths to evaluate on every row. Defaults to n2_min,
        n2_min + 10 and n2_min + 100 of each row.
    rows : List[TableRow], optional
        Table rows; defaults to the packaged comparison table.

    Returns
    -------
    List[Dict[str, Any]]
        One record per (row, n2) with both parameter triples, an
        ``in_range`` marker for n2_min ≤ n2 ≤ q^ρ1 + 1, the crossover flag
        and whether the QTPC dimension is the larger one.
    """
    rows = load_table() if rows is None else rows
    records = []
    for row in rows:
        samples = n2_values or (row.n2_min, row.n2_min + 10, row.n2_min + 100)
        for n2 in samples:
            qtpc = qtpc_table_parameters(row.n1, row.rho1, row.delta1, n2)
            cqc = cqc_parameters(row.cqc, n2)
            records.append({
                'm': row.m, 'q': row.q, 'delta1': row.delta1,
                'eta1': row.eta1, 'eta2': row.eta2, 'n2': n2,
                'qtpc': list(qtpc), 'cqc': list(cqc),
                'in_range': row.n2_min <= n2 <= row.n2_max,
                'crossover': row.crossover(n2),
                'qtpc_larger': qtpc[1] > cqc[1],
            })
    return records
