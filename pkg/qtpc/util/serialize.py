import json
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
import galois

from qtpc.algebra.field import GF2, as_ints, field_from_spec, field_spec


def hex_rows(M) -> List[str]:
    """One hex string per row of a binary matrix, bits packed MSB first and
    zero-padded to a whole number of bytes."""
    bits = np.atleast_2d(as_ints(M) % 2).astype(np.uint8)
    return [np.packbits(row).tobytes().hex() for row in bits]


def matrix_from_hex(rows: List[str], cols: int) -> galois.FieldArray:
    """Inverse of :func:`hex_rows` for a matrix with ``cols`` columns."""
    out = np.zeros((len(rows), cols), dtype=np.int64)
    for i, text in enumerate(rows):
        try:
            packed = np.frombuffer(bytes.fromhex(text), dtype=np.uint8)
        except ValueError:
            raise ValueError(f'Invalid hex row: {text!r}')
        bits = np.unpackbits(packed)
        if len(bits) < cols or np.any(bits[cols:]):
            raise ValueError(f'Hex row {i} does not fit {cols} columns')
        out[i] = bits[:cols]
    return GF2(out)


def matrix_to_dict(M: galois.FieldArray) -> Dict[str, Any]:
    """``{"rows", "cols", "field", "data"}`` with row-major integer
    element codes."""
    M = np.atleast_2d(M)
    return {'rows': int(M.shape[0]), 'cols': int(M.shape[1]),
            'field': field_spec(type(M)),
            'data': [int(x) for x in as_ints(M).ravel()]}


def matrix_from_dict(data: Dict[str, Any]) -> galois.FieldArray:
    try:
        rows, cols = int(data['rows']), int(data['cols'])
        values = np.asarray(data['data'], dtype=np.int64)
    except (KeyError, TypeError) as e:
        raise ValueError(f'Invalid matrix record: {e}')
    if values.size != rows * cols:
        raise ValueError(f'Matrix record holds {values.size} entries, '
                         f'expected {rows}×{cols}')
    GF = field_from_spec(data.get('field') or {'m': 1})
    if np.any(values < 0) or np.any(values >= GF.order):
        raise ValueError(f'Matrix entries out of range for GF({GF.order})')
    return GF(values.reshape(rows, cols))


def write_json(data: Dict[str, Any], path: Union[str, Path, None]) -> str:
    """Serialize with sorted keys so equal inputs give identical files.
    Writes to ``path`` if given and returns the text."""
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
    return text
