"""Exhaustive check of the one-half inequality, and the smallest ratios W_k / W_{k+1}."""
import time

from bijfact import scan_conjecture, verify_theorem31
from bijfact.enumeration import ratio_minima

t0 = time.perf_counter()
rep = verify_theorem31(7)
print(len(rep.entries), "types,", len(rep.violations), "violations,",
      len(rep.witnesses), "equality cases", f"({time.perf_counter() - t0:.1f}s)")
for e in rep.witnesses:
    print("  equality at", e.ctype, e.w_next, "vs", e.w_max)

per_n, best = ratio_minima(scan_conjecture(7))
for n, r in per_n.items():
    print(f"n={n}: smallest ratio {r.ratio} at {r.ctype}, k={r.k}")
print("overall", best.ratio)
