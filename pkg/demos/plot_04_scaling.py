"""
Work as a function of n and alternation
=======================================

Query counts follow alpha * (1 + lg((n - 1) / alpha)); comparisons grow
linearly in n when alpha is fixed.
"""

from opfc.bench import fit_constant, run_matrix

records = run_matrix([2 ** k for k in range(8, 15)], [1, 2, 3], reps=2, algos=("gdm",))
for r in records[::2]:
    print(f"n={r.n:6d} alpha={r.alpha} q={r.ds_queries:4d} comparisons={r.comparisons}")
print("fitted query constant", round(fit_constant(records, "queries"), 3))
print("fitted comparison constant", round(fit_constant(records, "comparisons"), 3))
