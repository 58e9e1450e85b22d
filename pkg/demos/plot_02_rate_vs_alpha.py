"""
Normalized deterministic rate against interference level
========================================================

Tabulate the symmetric rate per direct level, R/n, as the cross-link
strength alpha = m/n grows, for a few feedback levels beta = p/n.
"""

import math
from fractions import Fraction

from fbic.sweep import sweep_det_alpha, sweep_gdof

# n = 840 makes every alpha on a 1/120 grid an exact ratio m/n.
betas = [Fraction(0), Fraction(1, 10), Fraction(1, 5), math.inf]
rows = sweep_det_alpha(betas, k_users=3)
table = {(r.alpha, r.beta): r.rate_norm for r in rows}

shown = [Fraction(k, 12) for k in range(0, 37, 2)]
print("alpha  " + "  ".join(f"beta={b!s:>4}" for b in betas))
for a in shown:
    cells = "  ".join(f"{float(table[(a, b)]):9.4f}" for b in betas)
    print(f"{float(a):5.3f}  {cells}")

# The W shape: without feedback the curve dips to 1/2 at alpha = 1/2, climbs
# to 2/3 at alpha = 2/3, and reaches 1/K at alpha = 1. Unlimited feedback
# lifts the weak side to 1 - alpha/2 and the strong side to alpha/2.
print("\nalpha=1/2:", table[(Fraction(1, 2), 0)], "->", table[(Fraction(1, 2), math.inf)])
print("alpha=1:", table[(Fraction(1), 0)])

# The Gaussian GDoF lower bound traces the same curves, except that alpha = 1
# has no defined value.
gd = sweep_gdof([Fraction(1, 10)], [Fraction(1, 4), Fraction(1), Fraction(5, 2)])
for r in gd:
    print(f"GDoF at alpha={r.alpha}, beta=1/10:", "NA" if r.gdof is None else r.gdof)
