"""Demo script for the BCH comparison table:
Compare the dimension of QTPCs built from a dual-containing BCH code with
that of concatenated quantum codes of the same length and distance, for
every outer length n2 of one table row. The figure is saved as a PDF."""

import numpy as np
import matplotlib.pyplot as plt
from pathlib import Path

from qtpc.quantum.comparison import comparison_rows, load_table

# BCH [31, 16, 7] inner code, CQC from [[31, 28, 2]] and [[n2, n2 - 4, 3]]
row = load_table()[0]
out_dir = Path('comparison_table')
out_dir.mkdir(parents=True, exist_ok=True)
n2_values = list(range(row.n2_min - 15, row.n2_min + 40))

records = comparison_rows(n2_values, [row])
rate_qtpc = np.array([r['qtpc'][1] / r['qtpc'][0] for r in records])
rate_cqc = np.array([r['cqc'][1] / r['cqc'][0] for r in records])
crossover = next(r['n2'] for r in records if r['qtpc_larger'])
print(f'QTPC dimension exceeds CQC from n2 = {crossover} '
      f'(listed n2_min = {row.n2_min})')

fig, ax = plt.subplots(figsize=(5, 3), tight_layout=True)
ax.plot(n2_values, rate_qtpc, label=f'QTPC, d = {row.delta1}')
ax.plot(n2_values, rate_cqc, label=f'CQC, d = {row.eta1 * row.eta2}')
ax.axvline(crossover, color='gray', linestyle='--')
ax.set_xlabel('$n_2$')
ax.set_ylabel('Rate k/n')
ax.legend()
fig.savefig(out_dir / f'rates_m{row.m}_delta{row.delta1}.pdf')
plt.show()
