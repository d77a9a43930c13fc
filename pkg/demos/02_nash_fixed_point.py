# Nash equilibria as fixed points of a projection map.
#
# (p, q) is an equilibrium exactly when
#     p = P(p + A q; simplex)   and   q = P(q + B p; simplex).
#
# Run: python demos/02_nash_fixed_point.py
import numpy as np

from varnash import (
    JointStrategy, Method, NonConvergence, SolverConfig, check_nash, load_fixture,
    nash_residual, phi_map, solve_bimatrix_heuristic,
)

# Two firms decide whether to invest in R&D (strategy 0) or not (strategy 1).
rnd = load_fixture("rnd")
print("A =\n", rnd.A, "\nB =\n", rnd.B)

both_invest = JointStrategy([1, 0], [1, 0])
print("phi(both invest) =", phi_map(rnd, None, both_invest))
print("check_nash:", check_nash(rnd, both_invest))
print("check_nash at (don't, don't):", check_nash(rnd, JointStrategy([0, 1], [0, 1])))

# Iterating the map from the uniform profile lands on the equilibrium at once.
cfg = SolverConfig(method=Method.FIXED_POINT, tol=1e-8, start=JointStrategy([0.5, 0.5], [0.5, 0.5]))
r = solve_bimatrix_heuristic(rnd, config=cfg)
print("fixed-point iteration:", r.z, "residual", r.certificate.value)

# Existence of a fixed point does not make the iteration converge.  On matching
# pennies the iterates circle the corners of the strategy square forever.
pennies = load_fixture("pennies").to_bimatrix()
cfg = SolverConfig(method=Method.FIXED_POINT, max_iters=12, record_trace=True)
try:
    solve_bimatrix_heuristic(pennies, config=cfg)
except NonConvergence as exc:
    for k, res, gain in exc.result.trace[:8]:
        print(f"  iter {k}: residual {res:.3f}, best deviation gain {gain:.3f}")
print("the equilibrium itself:", nash_residual(pennies, None, JointStrategy([0.5, 0.5], [0.5, 0.5])))
