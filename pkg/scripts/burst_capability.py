import argparse
import logging
from pathlib import Path

import yaml
import matplotlib.pyplot as plt
from tqdm import trange

from qtpc.algebra.field import field, poly_from_bits
from qtpc.codes.families import fire_code, mds_dual_containing
from qtpc.decoding.channel import capability_report
from qtpc.quantum.construction import fire_burst_qtpc, repetition_burst_qtpc


def parse_args():
    """ Parse arguments from command line """
    parser = argparse.ArgumentParser(
        description=('Decode Pauli burst patterns on a burst-correcting QTPC '
                     'and report the success rate for each number of bursts')
    )
    parser.add_argument('output', help='Output directory')
    parser.add_argument('-c', '--code', choices=['fire', 'repetition'],
                        default='fire',
                        help='Fire code [15,8] with an MDS code over '
                             'GF(128), or the [[12,4,3]] repetition QTPC')
    parser.add_argument('-t', '--max-bursts', default=4, type=int,
                        help='Largest number of bursts to try')
    parser.add_argument('-n', '--trials', default=10_000, type=int,
                        help='Monte Carlo trials per number of bursts')
    parser.add_argument('-s', '--seed', default=0, type=int,
                        help='Run seed')
    return parser.parse_args()


def build_code(name):
    if name == 'repetition':
        return repetition_burst_qtpc(3, 4)
    quartic = poly_from_bits([1, 1, 1, 1, 1])
    return fire_burst_qtpc(fire_code(quartic, 2),
                           mds_dual_containing(field(7), 9, 5))


def main():
    args = parse_args()
    logging.basicConfig(level=logging.INFO)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)

    code = build_code(args.code)
    burst = code.burst
    logging.info(f'[[{code.n},{code.k}]] corrects {burst.bursts} bursts of '
                 f'length {burst.burst_length}')
    max_bursts = min(args.max_bursts, code.n // burst.subblock)

    reports = []
    for t in trange(1, max_bursts + 1, desc='Bursts'):
        report = capability_report(code, t, burst.burst_length,
                                   trials=args.trials, seed=args.seed)
        reports.append(report.to_dict())
    with open(out_dir / 'capability.yaml', 'w') as f:
        yaml.dump({'n': code.n, 'k': code.k, 'burst': burst.to_dict(),
                   'runs': reports}, f)

    fig, ax = plt.subplots(figsize=(4, 3), tight_layout=True)
    ax.plot([r['t'] for r in reports], [r['success_rate'] for r in reports],
            marker='o')
    ax.axvline(burst.bursts, color='gray', linestyle='--')
    ax.set_xlabel('Bursts')
    ax.set_ylabel('Success rate')
    ax.set_title(f'[[{code.n},{code.k}]], l = {burst.burst_length}')
    fig.savefig(out_dir / 'capability.pdf')


if __name__ == '__main__':
    main()
