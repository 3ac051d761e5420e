"""Building join and corona products.

Walks through the two graph operations on small standard graphs and shows
the deterministic vertex labeling of the results.
"""
from topolab import degree_sequence, make_complete, make_cycle, make_path, serialize_graph
from topolab.ops import corona, join

# %% Join of two paths: P_2 + P_3
g = join(make_path(2), make_path(3))
print("P2 + P3:", g.n, "vertices,", g.m, "edges")
print("degrees:", degree_sequence(g))
print(serialize_graph(g))

# %% P_2 + P_2 is the complete graph K_4
print("\nP2 + P2 == K4:", join(make_path(2), make_path(2)) == make_complete(4))

# %% Corona K_3 with P_2: one copy of P_2 hung off each triangle vertex
c = corona(make_complete(3), make_path(2))
print("\nK3 corona P2:", c.n, "vertices,", c.m, "edges")
for i in range(3):
    print(f"  base vertex {i} -> copy {sorted(c.adj[i] - {0, 1, 2})}")

# %% Corona is not commutative
a, b = corona(make_path(2), make_path(3)), corona(make_path(3), make_path(2))
print("\nP2 corona P3:", (a.n, a.m), " P3 corona P2:", (b.n, b.m))

# %% C_3 corona C_3 has two vertex degrees: 3 in the copies, 5 on the base cycle
print("degrees of C3 corona C3:", sorted(set(degree_sequence(corona(make_cycle(3), make_cycle(3))))))
