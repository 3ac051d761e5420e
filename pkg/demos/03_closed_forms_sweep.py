"""Closed forms against the edge-sum oracle.

Each family's closed form is a degree-pair table in (r, s). Here it is
compared with the constructed graph over a parameter grid.
"""
from topolab import Family, FamilySpec, IndexKind, build, closed_index, index_exact, symbolic_partition
from topolab.harness import run_sweep

# %% One point in detail
spec = FamilySpec(Family.CORONA_PATHS, 4, 5)
print("table:  ", symbolic_partition(spec))
for kind in (IndexKind.ESO, IndexKind.EU):
    closed, oracle = closed_index(spec, kind), index_exact(build(spec), kind)
    print(f"{kind.value}: {closed}\n    equal to oracle: {closed == oracle}")

# %% Full sweep, every family, 2 <= r, s <= 12
report = run_sweep(list(Family), 12, 12)
for family, by_kind in report.summary.items():
    print(f"{family:15}", "  ".join(f"{k}: {v['pass']} ok / {v['fail']} bad" for k, v in by_kind.items()))
print("all exact:", report.ok)
