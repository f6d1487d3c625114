"""
Orbit graphs and their split halves
===================================

The weak order on symmetric clans is a DAG that funnels into the dense orbit.
Disconnected clans stand for orbits that split in two one level down; the
lifted graph shows both halves.
"""

import tempfile
from pathlib import Path

from schubert_bd import is_disconnected
from schubert_bd.orbits import EdgeStyle, k_orbit_graph, l_orbit_graph

# %%
# K-level graph
# -------------
k = k_orbit_graph(3, "D")
double = [e for e in k.edges if e.style is EdgeStyle.DOUBLE]
print(len(k.nodes), "orbits,", len(k.edges), "edges,", len(double), "of them merge two halves")
print("bottom to top:", *[n.label() for n in k.topological_order()][:4], "...")

# %%
# L-level graph
# -------------
ell = l_orbit_graph(3, "D")
split = sum(is_disconnected(n.clan) for n in k.nodes)
print(len(ell.nodes), "nodes =", len(k.nodes) - split, "connected +", 2 * split, "halves")

# %%
# Both graphs export to DOT; render with ``dot -Tsvg``.
out = Path(tempfile.mkdtemp()) / "d3_L.dot"
out.write_text(ell.to_dot())
print("wrote", out)
print(ell.to_dot().splitlines()[3])
