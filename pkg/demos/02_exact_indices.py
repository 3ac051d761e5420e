"""Exact elliptic Sombor and Euler Sombor values.

Index values are sums of rational multiples of square roots, so they are
computed and compared exactly, then printed with a float approximation.
"""
from topolab import IndexKind, edge_partition, index_exact, make_complete, make_cycle, make_path
from topolab.ops import corona, join

graphs = {
    "K4 = P2 + P2": join(make_path(2), make_path(2)),
    "P2 corona P2": corona(make_path(2), make_path(2)),
    "C5 + K3": join(make_cycle(5), make_complete(3)),
    "C4 corona C3": corona(make_cycle(4), make_cycle(3)),
}

for name, g in graphs.items():
    print(name)
    print("  degree-pair partition:", edge_partition(g))
    for kind in IndexKind:
        value = index_exact(g, kind)
        print(f"  {kind.value:3} = {value}  (~{float(value):.6f})")

# %% Regular graphs: ESO = 2*sqrt2*m*k^2 and EU = sqrt3*m*k
for n in (5, 9):
    g = make_cycle(n)
    print(f"\nC{n}: ESO = {index_exact(g, IndexKind.ESO)}, EU = {index_exact(g, IndexKind.EU)}")
