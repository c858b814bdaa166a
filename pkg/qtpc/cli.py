"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a property failure (a failed
verification check or an uncorrected burst pattern), 2 on malformed input
and 3 when a construction hypothesis does not hold.
"""
import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import galois

from qtpc import __version__
from qtpc.algebra.field import as_ints, field_spec
from qtpc.algebra.matrix import rank
from qtpc.codes.base import LinearCode
from qtpc.codes.families import bch
from qtpc.codes.tensor import TensorProductCode
from qtpc.decoding.channel import capability_report
from qtpc.errors import HypothesisError
from qtpc.quantum.comparison import (CqcSpec, comparison_rows, cqc_parameters,
                                     qtpc_table_parameters)
from qtpc.quantum.stabilizer import StabilizerCode, symplectic_commute
from qtpc.util.config import apply_config, load_config, variants
from qtpc.util.serialize import (hex_rows, matrix_from_dict, matrix_from_hex,
                                 matrix_to_dict, write_json)
from qtpc.util.spec import SpecError, build_from_spec, load_spec


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3

Check = Tuple[str, bool, str]


def _matrix_record(M: galois.FieldArray) -> Dict[str, Any]:
    if type(M).order == 2:
        return {'cols': int(M.shape[1]), 'rows': hex_rows(M)}
    return matrix_to_dict(M)


def _matrix_from_record(record: Dict[str, Any]) -> galois.FieldArray:
    if 'data' in record:
        return matrix_from_dict(record)
    return matrix_from_hex(record['rows'], int(record['cols']))


def code_record(code, spec: Optional[Dict[str, Any]] = None
                ) -> Dict[str, Any]:
    """JSON artifact of a built code, embedding the spec it came from."""
    if isinstance(code, StabilizerCode):
        out = code.to_dict()
        out['type'] = 'stabilizer'
    else:
        out = {
            'type': 'code',
            'name': code.name,
            'n': code.n,
            'k': code.k,
            'd': code.min_distance().to_dict(),
            'field': field_spec(code.field),
            'h': _matrix_record(code.h),
        }
        if isinstance(code, TensorProductCode):
            out['variant'] = code.variant
            out['subblock'] = code.n1
    if spec is not None:
        out['spec'] = spec
    return out


def _same_row_space(A: galois.FieldArray, B: galois.FieldArray) -> bool:
    if A.shape[1] != B.shape[1]:
        return False
    r = rank(A)
    return r == rank(B) == rank(np.concatenate([A, B], axis=0))


def _stabilizer_checks(artifact: Dict[str, Any]) -> List[Check]:
    n, k = int(artifact['n']), int(artifact['k'])
    record = artifact['stab_ab']
    stab = matrix_from_hex(record['rows'], int(record['cols']))
    if stab.shape[1] != 2 * n:
        raise SpecError(f'Stabilizer width {stab.shape[1]} does not match '
                        f'2n = {2 * n}')
    checks = [
        ('commutation', symplectic_commute(stab),
         f'{stab.shape[0]} generators'),
        ('rank', rank(stab) == n - k, f'rank {rank(stab)}, n − k = {n - k}'),
    ]
    if 'spec' not in artifact:
        return checks
    code = build_from_spec(artifact['spec'], artifact.get('build_variant'))
    checks.append(('matches_spec', _same_row_space(stab, code.stab),
                   code.provenance))
    checks.append(('parameters', code.params[:2] == (n, k),
                   f'rebuilt [[{code.n},{code.k}]]'))
    if code.is_css:
        product = code.z_code.h @ code.x_code.h.T
        checks.append(('css_containment', not np.any(product),
                       f'H_z·H_xᵀ: {product.shape[0]}×{product.shape[1]}'))
    parts = code.components
    if 'tpc' in parts:
        tpc, c1, c2 = parts['tpc'], parts['c1'], parts['c2']
        rho = c1.rho * c2.rho
        checks.append(('tpc_rank', tpc.rho == rho,
                       f'rank {tpc.rho}, ρ1ρ2 = {rho}'))
        checks.append(('tpc_dimension', k == n - 2 * rho,
                       f'n − 2ρ1ρ2 = {n - 2 * rho}'))
    if 'containment' in parts:
        checks.append(('containment_hypothesis',
                       any(parts['containment'].values()),
                       json.dumps(parts['containment'], sort_keys=True)))
    if 'tpc_l' in parts:
        product = parts['tpc_l'].h_base @ parts['tpc'].h_base.T
        checks.append(('companion_product', not np.any(product),
                       f'H_[C_L]·H_[C]ᵀ: {product.shape[0]}×'
                       f'{product.shape[1]}'))
    if code.distance.value is not None and artifact.get('d'):
        stored = artifact['d'].get('value')
        checks.append(('distance', stored == code.distance.value,
                       f'stored {stored}, rebuilt {code.distance}'))
    return checks


def _code_checks(artifact: Dict[str, Any]) -> List[Check]:
    h = _matrix_from_record(artifact['h'])
    n, k = int(artifact['n']), int(artifact['k'])
    checks = [('rank', h.shape[1] == n and rank(h) == n - k,
               f'rank {rank(h)}, n − k = {n - k}')]
    if 'spec' not in artifact:
        return checks
    code = build_from_spec(artifact['spec'], artifact.get('build_variant'))
    if not isinstance(code, LinearCode):
        raise SpecError('Code artifact embeds a stabilizer spec')
    same_field = type(h).order == code.field.order
    checks.append(('matches_spec', same_field and
                   _same_row_space(code.field(as_ints(h)), code.h),
                   code.name))
    if isinstance(code, TensorProductCode):
        rho = code.c1.rho * code.c2.rho
        checks.append(('tpc_rank', code.rho == rho,
                       f'rank {code.rho}, ρ1ρ2 = {rho}'))
        members = code.is_member(code.generator)
        checks.append(('inner_syndrome_membership', bool(np.all(members)),
                       f'{code.k} generator rows'))
    return checks


def verify_artifact(artifact: Dict[str, Any]) -> List[Check]:
    """Re-run the checks that apply to an artifact written by ``build``."""
    try:
        if artifact.get('type') == 'stabilizer' or 'stab_ab' in artifact:
            return _stabilizer_checks(artifact)
        return _code_checks(artifact)
    except (KeyError, TypeError) as e:
        raise SpecError(f'Malformed artifact: missing or invalid {e}')


def _emit(data: Dict[str, Any], out: Optional[str]) -> None:
    text = write_json(data, out)
    if out is None:
        print(text)
    else:
        logging.info(f'Wrote {out}')


def cmd_build(args) -> int:
    spec = load_spec(args.spec)
    code = build_from_spec(spec, args.variant)
    record = code_record(code, spec)
    if args.variant:
        record['build_variant'] = args.variant
    _emit(record, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    artifact = load_spec(args.artifact)
    checks = verify_artifact(artifact)
    for name, ok, detail in checks:
        print(f'{"PASS" if ok else "FAIL"}  {name}: {detail}')
    failed = [name for name, ok, _ in checks if not ok]
    if failed:
        logging.warning(f'Failed checks: {", ".join(failed)}')
        return EXIT_FAILURE
    return EXIT_OK


def cmd_distance(args) -> int:
    code = build_from_spec(load_spec(args.spec), args.variant)
    if isinstance(code, StabilizerCode):
        result = {'n': code.n, 'k': code.k, 'd': code.distance.to_dict(),
                  'pure': code.purity.value}
    else:
        result = {'name': code.name, 'n': code.n, 'k': code.k,
                  'd': code.min_distance().to_dict()}
    _emit(result, args.out)
    return EXIT_OK


def _write_csv(path: str, records: List[Dict[str, Any]]) -> None:
    with open(path, 'w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=list(records[0]))
        writer.writeheader()
        for record in records:
            writer.writerow({key: (' '.join(map(str, value))
                                   if isinstance(value, list) else value)
                             for key, value in record.items()})


def cmd_table(args) -> int:
    records = comparison_rows(args.n2)
    if args.csv:
        _write_csv(args.csv, records)
    _emit({'rows': records}, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    spec = CqcSpec(args.m, args.delta1, args.eta1, args.eta2)
    rho1 = args.rho1
    if rho1 is None:
        rho1 = bch(args.m, 1, args.delta1).rho
    records = []
    for n2 in args.n2:
        qtpc = qtpc_table_parameters(spec.n1, rho1, args.delta1, n2)
        cqc = cqc_parameters(spec, n2)
        records.append({'n2': n2, 'qtpc': list(qtpc), 'cqc': list(cqc),
                        'qtpc_larger': qtpc[1] > cqc[1]})
    _emit({'m': args.m, 'delta1': args.delta1, 'rho1': rho1,
           'eta1': args.eta1, 'eta2': args.eta2, 'rows': records}, args.out)
    return EXIT_OK


def cmd_decode_sim(args) -> int:
    artifact = load_spec(args.artifact)
    if 'spec' not in artifact:
        raise SpecError('Artifact carries no spec to rebuild the decoder from')
    code = build_from_spec(artifact['spec'], artifact.get('build_variant'))
    burst = getattr(code, 'burst', None)
    t = args.t if args.t is not None else (burst.bursts if burst else 1)
    l = args.l if args.l is not None else (burst.burst_length if burst else 1)
    n1 = args.subblock or artifact.get('subblock')

    def run(u: int):
        return capability_report(code, u, l, trials=args.trials,
                                 seed=args.seed, budget=args.budget, n1=n1,
                                 progress=args.progress)

    report = run(t)
    result = report.to_dict()
    result['params'] = [artifact.get('n'), artifact.get('k')]
    if args.csv:
        sweep = [run(u).to_dict() for u in range(1, t + 1)]
        _write_csv(args.csv, [{key: r[key] for key in
                               ('t', 'l', 'mode', 'patterns', 'failures',
                                'success_rate', 'failure_rate_upper')}
                              for r in sweep])
    _emit(result, args.out)
    if report.failures:
        logging.warning(f'First uncorrected pattern: '
                        f'{json.dumps(report.first_failure)}')
        return EXIT_FAILURE
    return EXIT_OK


def parse_args(argv: Optional[List[str]] = None):
    """ Parse arguments from command line """
    parser = argparse.ArgumentParser(
        prog='qtpc',
        description='Quantum tensor product codes: construction, '
                    'verification and burst decoding'
    )
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Log construction steps')
    parser.add_argument('--config', default=None,
                        help='YAML file overriding the packaged defaults')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('build', help='Build a code from a JSON spec')
    p.add_argument('--spec', required=True, help='Code spec (JSON)')
    p.add_argument('--out', default=None, help='Artifact path (stdout if '
                                              'omitted)')
    p.add_argument('--variant', choices=variants, default=None,
                   help='Tensor product parity-check form')
    p.set_defaults(func=cmd_build)

    p = sub.add_parser('verify', help='Re-check a built artifact')
    p.add_argument('artifact', help='Artifact written by build')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('distance', help='Minimum distance of a spec')
    p.add_argument('--spec', required=True, help='Code spec (JSON)')
    p.add_argument('--out', default=None)
    p.add_argument('--variant', choices=variants, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser('table', help='QTPC and CQC parameters for the '
                                     'packaged BCH comparison rows')
    p.add_argument('--n2', type=int, nargs='+', default=None,
                   help='Outer lengths (default: three per row)')
    p.add_argument('--out', default=None)
    p.add_argument('--csv', default=None, help='Also write a CSV table')
    p.set_defaults(func=cmd_table)

    p = sub.add_parser('compare', help='QTPC and CQC parameters for one '
                                       'BCH inner code')
    p.add_argument('-m', type=int, required=True, help='n1 = 2^m − 1')
    p.add_argument('--delta1', type=int, required=True)
    p.add_argument('--eta1', type=int, required=True)
    p.add_argument('--eta2', type=int, required=True)
    p.add_argument('--rho1', type=int, default=None,
                   help='Inner check symbols (computed from the narrow-sense '
                        'BCH code if omitted)')
    p.add_argument('--n2', type=int, nargs='+', required=True)
    p.add_argument('--out', default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser('decode-sim', help='Burst decoding capability run')
    p.add_argument('artifact', help='Artifact written by build')
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('-t', type=int, default=None,
                   help='Bursts per pattern (default: declared capability)')
    p.add_argument('-l', type=int, default=None,
                   help='Maximum burst length (default: declared)')
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--budget', type=int, default=None,
                   help='Largest pattern count decoded exhaustively')
    p.add_argument('--subblock', type=int, default=None,
                   help='Subblock length n1 if the artifact has none')
    p.add_argument('--out', default=None, help='Report path')
    p.add_argument('--csv', default=None,
                   help='Per-t success rates for t = 1, …, t')
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_decode_sim)
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(levelname)s: %(message)s'
    )
    try:
        if args.config:
            apply_config(load_config(args.config))
        return args.func(args)
    except HypothesisError as e:
        logging.error(str(e))
        return EXIT_HYPOTHESIS
    except (SpecError, ValueError, OSError) as e:
        logging.error(str(e))
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
