"""Print a pass/fail matrix for the rank <= 3 sweep: rows are (type, Lambda), columns are subsets K.

This is the same set of jobs as ``wtoric selftest`` without the wall polygons.
Takes one to two minutes.
"""

import time
from collections import defaultdict

from wtoric.pipeline import run, selftest_cases

t0 = time.perf_counter()
grid = defaultdict(dict)
for label, cfg in selftest_cases(rank_cap=3, polygons=False):
    t, tag, k = label.split(" ", 2)
    grid[(t, tag)][k] = run(cfg).ok

for (t, tag), row in grid.items():
    marks = " ".join("." if ok else "X" for ok in row.values())
    print(f"{t:6} {tag:10} {marks}")
print(f"{sum(all(r.values()) for r in grid.values())}/{len(grid)} rows all pass ({time.perf_counter() - t0:.0f}s)")
