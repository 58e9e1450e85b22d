"""
Auditing the constant-gap certificate
=====================================

Check on a grid that the default power splits stay within the regime
constants of the conjectured upper bound.
"""

from collections import defaultdict

from fbic.gauss import FeedbackBranch, GaussRegime, gap_L, regime_gap_const
from fbic.sweep import gap_audit

rows, summary = gap_audit()
print(summary.to_dict())

# Worst observed gap next to the certified constant, per regime and K.
worst = defaultdict(float)
const = {}
for r in rows:
    key = (r.regime.value, r.k)
    worst[key] = max(worst[key], r.gap)
    const[key] = max(const.get(key, 0.0), r.regime_const)
for key in sorted(worst):
    print(f"{key[0]:>9} K={key[1]}: worst gap {worst[key]:6.3f}  constant {const[key]:6.3f}")

# The constants themselves, for K = 3.
for regime in (GaussRegime.VERY_WEAK, GaussRegime.WEAK, GaussRegime.STRONG):
    for branch in FeedbackBranch:
        print(f"{regime.value:>9} {branch.value:>9}: {regime_gap_const(3, regime, branch):.4f}")
print("L(2) =", round(gap_L(2), 4), " L(3) =", round(gap_L(3), 4))
