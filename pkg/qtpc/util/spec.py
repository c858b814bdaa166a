"""JSON code specifications.

A spec is a JSON object with a ``kind`` key selecting a constructor;
wrapper kinds (``tpc``, ``css``, ``pure``, ...) nest component specs under
``c1``, ``c2`` or ``code``. Examples::

    {"kind": "bch", "m": 4, "b": 1, "delta": 3}
    {"kind": "rs", "m": 4, "n": 9, "k": 7}
    {"kind": "pure",
     "c1": {"kind": "named", "name": "hamming_5_3_gf4"},
     "c2": {"kind": "mds_dual", "m": 4, "n": 9, "d": 3}}
"""
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Union

from qtpc.algebra.field import field, field_from_spec, poly_from_bits
from qtpc.codes.base import LinearCode
from qtpc.codes.families import (CyclicCode, FireCode, bch,
                                 cyclic_from_defining_set, extended_hamming,
                                 fire_code, hamming, mds_dual_containing,
                                 named_code, reed_solomon, repetition,
                                 subfield_subcode)
from qtpc.codes.tensor import build_cl, tpc_build
from qtpc.quantum.construction import (companion_qtpc, fire_burst_qtpc,
                                       pure_qtpc, repetition_burst_qtpc,
                                       self_dual_mds_qtpc,
                                       self_dual_square_qtpc)
from qtpc.quantum.stabilizer import StabilizerCode, css, hermitian_code
from qtpc.util.serialize import matrix_from_dict, matrix_from_hex


Built = Union[LinearCode, StabilizerCode]


class SpecError(ValueError):
    """Malformed code specification."""
    pass


def load_spec(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path) as f:
            spec = json.load(f)
    except json.JSONDecodeError as e:
        raise SpecError(f'Invalid JSON in {path}: {e}')
    except OSError as e:
        raise SpecError(f'Cannot read spec {path}: {e}')
    if not isinstance(spec, dict):
        raise SpecError(f'Spec must be a JSON object, got {type(spec).__name__}')
    return spec


def _get(spec: Dict[str, Any], key: str, kind: type = int):
    if key not in spec:
        raise SpecError(f'Spec of kind "{spec.get("kind")}" is missing '
                        f'"{key}"')
    value = spec[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SpecError(f'"{key}" must be an integer, got {value!r}')
    if kind is not int and not isinstance(value, kind):
        raise SpecError(f'"{key}" must be of type {kind.__name__}, got '
                        f'{value!r}')
    return value


def _field_of(spec: Dict[str, Any]):
    if 'field' in spec:
        return field_from_spec(_get(spec, 'field', dict))
    return field(_get(spec, 'm'))


def _linear(spec, variant, config) -> LinearCode:
    code = build_from_spec(spec, variant, config)
    if not isinstance(code, LinearCode):
        raise SpecError(f'Expected a classical code spec, got kind '
                        f'"{spec.get("kind")}"')
    return code


def _parity(spec, variant, config):
    if 'hex' in spec:
        h = matrix_from_hex(_get(spec, 'hex', list), _get(spec, 'cols'))
    else:
        h = matrix_from_dict(_get(spec, 'matrix', dict))
    return LinearCode(h, name=spec.get('name'))


def _cyclic(spec, variant, config):
    n = _get(spec, 'n')
    if 'g_poly' in spec:
        return CyclicCode(n, poly_from_bits(_get(spec, 'g_poly', list)))
    return cyclic_from_defining_set(n, _get(spec, 'z', list))


def _fire(spec, variant, config):
    return fire_code(poly_from_bits(_get(spec, 'b_poly', list)),
                     _get(spec, 'l'))


def _fire_burst(spec, variant, config):
    fire = _linear(_get(spec, 'fire', dict), variant, config)
    if not isinstance(fire, FireCode):
        raise SpecError('"fire" must be a Fire code spec')
    return fire_burst_qtpc(fire, _linear(_get(spec, 'c2', dict), variant,
                                         config), config)


def _pair(build: Callable, with_variant: bool = False) -> Callable:
    def wrapped(spec, variant, config):
        c1 = _linear(_get(spec, 'c1', dict), variant, config)
        c2 = _linear(_get(spec, 'c2', dict), variant, config)
        if with_variant:
            return build(c1, c2, variant or spec.get('variant', 'psi'))
        return build(c1, c2)
    return wrapped


def _single(build: Callable) -> Callable:
    def wrapped(spec, variant, config):
        return build(_linear(_get(spec, 'code', dict), variant, config))
    return wrapped


_builders: Dict[str, Callable[[Dict[str, Any], Optional[str],
                               Optional[Dict[str, Any]]], Built]] = {
    'parity': _parity,
    'repetition': lambda s, v, c: repetition(_get(s, 'n')),
    'hamming': lambda s, v, c: hamming(_get(s, 'r'), s.get('q', 2)),
    'extended_hamming': lambda s, v, c: extended_hamming(_get(s, 'r')),
    'bch': lambda s, v, c: bch(_get(s, 'm'), s.get('b', 1), _get(s, 'delta')),
    'cyclic': _cyclic,
    'rs': lambda s, v, c: reed_solomon(_field_of(s), _get(s, 'n'),
                                       _get(s, 'k')),
    'mds_dual': lambda s, v, c: mds_dual_containing(_field_of(s),
                                                    _get(s, 'n'),
                                                    _get(s, 'd')),
    'fire': _fire,
    'named': lambda s, v, c: named_code(_get(s, 'name', str)),
    'subfield': _single(subfield_subcode),
    'tpc': _pair(tpc_build, with_variant=True),
    'cl': _pair(build_cl),
    'css': lambda s, v, c: css(_linear(_get(s, 'c1', dict), v, c),
                               _linear(_get(s, 'c2', dict), v, c), c),
    'hermitian': lambda s, v, c: hermitian_code(
        _linear(_get(s, 'code', dict), v, c), c),
    'pure': lambda s, v, c: pure_qtpc(_linear(_get(s, 'c1', dict), v, c),
                                      _linear(_get(s, 'c2', dict), v, c),
                                      v or s.get('variant', 'psi'), c),
    'companion': lambda s, v, c: companion_qtpc(
        _linear(_get(s, 'c1', dict), v, c),
        _linear(_get(s, 'c2', dict), v, c), c),
    'repetition_burst': lambda s, v, c: repetition_burst_qtpc(
        _get(s, 'n1'), _get(s, 'n2'), c),
    'fire_burst': _fire_burst,
    'self_dual_square': lambda s, v, c: self_dual_square_qtpc(
        _linear(_get(s, 'code', dict), v, c), c),
    'self_dual_mds': lambda s, v, c: self_dual_mds_qtpc(
        _linear(_get(s, 'code', dict), v, c), c),
}
spec_kinds = sorted(_builders)


def build_from_spec(spec: Dict[str, Any], variant: Optional[str] = None,
                    config: Optional[Dict[str, Any]] = None) -> Built:
    """Construct the code described by ``spec``.

    Parameters
    ----------
    spec : Dict[str, Any]
        Parsed JSON spec.
    variant : str, optional
        Tensor product variant overriding any ``variant`` key in the spec.
    config : Dict[str, Any], optional
        Distance search overrides, passed to the quantum constructions.

    Returns
    -------
    LinearCode or StabilizerCode

    Raises
    ------
    SpecError
        If the spec is malformed.
    HypothesisError
        If a construction hypothesis fails.
    """
    if not isinstance(spec, dict) or 'kind' not in spec:
        raise SpecError(f'Spec must be an object with a "kind" key: {spec!r}')
    kind = spec['kind']
    if kind not in _builders:
        raise SpecError(f'Invalid spec kind: {kind!r} (expected one of '
                        f'{", ".join(spec_kinds)})')
    logging.info(f'Building spec of kind {kind}')
    try:
        return _builders[kind](spec, variant, config)
    except (TypeError, KeyError) as e:
        raise SpecError(f'Malformed spec of kind "{kind}": {e}')

