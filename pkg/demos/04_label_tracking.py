"""E-free cycles in D o gamma over all long cycles gamma, and the puncture reduction."""
from bijfact import TrackInstance, parse_cycles, puncture, theta, track_counts, verify_reduction
from bijfact.core import format_cycles
from bijfact.tracking import products

D = parse_cycles("(1 2)(3 4)")
print([format_cycles(p) for p in products(D)])

for E in ({1, 2}, {1, 3}, {1, 2, 3}):
    inst = TrackInstance(D, frozenset(E))
    rep = track_counts(inst)
    print(sorted(E), "theta", rep.theta, "histogram", rep.histogram, "formula", theta(inst))

# replacing the E-labels by fresh labels turns E-touching cycles into paths
inst = TrackInstance(D, frozenset({1, 3}))
print("punctured:", puncture(inst))
r = verify_reduction(inst)
print("arrays per level:", r.w_counts, "findings:", r.findings)
