"""Auditing the printed theorem statements.

The printed statements are evaluated exactly as written and compared with
the graph-derived values. Divergent cells should all be on the errata list
shipped in topolab/data/errata.csv.
"""
from topolab import Family, IndexKind, load_errata
from topolab.harness import run_sweep

for e in load_errata():
    print(f"{e.family.value:15} {e.kind.value:3} {e.case:8} {e.description}")

# %% Sweep with auditing switched on
report = run_sweep(list(Family), 8, 8, kinds=[IndexKind.ESO, IndexKind.EU], audit=True)
cells = sorted({(h.family, h.kind, h.case) for h in report.errata_hits})
print(f"\n{len(report.errata_hits)} divergent points in {len(cells)} cells")
worst = max(report.errata_hits, key=lambda h: h.delta)
print(f"largest relative gap: {worst.family} {worst.kind} r={worst.r} s={worst.s} "
      f"printed {worst.statement_value:.3f} vs {worst.normative_value:.3f}")
print("unlisted discrepancies:", report.unexpected_discrepancies)
