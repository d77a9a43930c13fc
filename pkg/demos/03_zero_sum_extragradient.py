# Zero-sum games: extragradient with a duality-gap certificate, checked
# against exact support enumeration.
#
# Run: python demos/03_zero_sum_extragradient.py
import numpy as np

from varnash import (
    JointStrategy, SolverConfig, ZeroSumGame, enumerate_equilibria, extract_saddle,
    load_fixture, solve_zero_sum, zero_sum_value,
)

diag = load_fixture("diag")
r = solve_zero_sum(diag, config=SolverConfig(record_trace=True))
print("strategies:", r.z)
print(f"value {r.u1:.8f} (exact {zero_sum_value(diag):.8f}), gap {r.certificate.value:.2e},"
      f" {r.certificate.iterations} iterations")
for k, res, gap in r.trace[::20]:
    print(f"  iter {k:3d}: gap {gap:.2e}")

# Starting away from the equilibrium on matching pennies.
pennies = load_fixture("pennies")
r = solve_zero_sum(pennies, config=SolverConfig(start=JointStrategy([1, 0], [1, 0])))
print("pennies from a corner:", r.z, "gap", r.certificate.value)

# The returned point is a saddle point up to the tolerance.
z, cert = extract_saddle(diag)
print("saddle check:", cert.kind.value, cert.value, "accepted" if cert.accepted else "rejected")

# A batch comparison with the exact oracle.
rng = np.random.default_rng(1)
worst = 0.0
for _ in range(25):
    g = ZeroSumGame(rng.uniform(-1, 1, (3, 3)))
    worst = max(worst, abs(solve_zero_sum(g).u1 - zero_sum_value(g)))
print(f"worst value error over 25 random 3x3 games: {worst:.2e}")

# Support enumeration also lists every equilibrium of a general game.
for e in enumerate_equilibria(load_fixture("rnd")):
    print("R&D equilibrium:", e.z, "payoffs", e.u1, e.u2)
