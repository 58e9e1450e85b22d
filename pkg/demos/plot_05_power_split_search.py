"""
Searching for better power splits
=================================

The default power splits are chosen to make the gap analysis tractable,
not to maximize rate. A small grid search often does better.
"""

from fbic.gauss import UNBOUNDED, GaussParams, SearchSpec, achievable_rate, default_mu, optimize_mu

spec = SearchSpec(points=5, rounds=3)
print(f"{'snr_db':>6} {'alpha':>6} {'c_fb':>5} {'default':>8} {'searched':>8}")
for snr_db, alpha, cfb in [(40, 0.25, 1.0), (40, 0.25, 0.0), (60, 7 / 12, 2.0), (30, 2.5, 0.0), (30, 2.5, UNBOUNDED)]:
    p = GaussParams.from_db(snr_db, alpha * snr_db, cfb, 3)
    base = achievable_rate(p, default_mu(p)).r_sym
    mu, best = optimize_mu(p, search=spec)
    print(f"{snr_db:6} {alpha:6.3f} {cfb!s:>5} {base:8.3f} {best.r_sym:8.3f}")

# Without feedback in the strong regime the fed-back layer is pure
# interference, and the search switches it off.
p = GaussParams.from_db(30, 75, 0.0, 3)
mu, best = optimize_mu(p, search=spec)
print("strong, no feedback:", [f"{x:.3g}" for x in mu.mu])
