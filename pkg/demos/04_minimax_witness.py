# Weak duality, minimax equality, and dual witnesses on finite grids.
#
# Run: python demos/04_minimax_witness.py
import numpy as np

from varnash import GridFunction, Infeasible, dual_witness, minimax_gap_bilinear, load_fixture, weak_duality_gap

A = load_fixture("pennies").A

# With pure strategies only, max-min and min-max differ.
print("pure table (maxmin, minmax, gap):", weak_duality_gap(GridFunction(A)))

# Mixing closes the gap: a grid that contains the uniform strategies has zero gap,
# and the solver certifies the gap of the full mixed extension.
print("grid with 5 points per edge:", weak_duality_gap(GridFunction.bilinear(A, 5)))
print("certified mixed gap:", minimax_gap_bilinear(load_fixture("pennies")))

# A dual witness is a column mixture beta capping every row at alpha.
g = GridFunction(A)
for alpha in (0.5, 0.1, 1e-6, -1e-3, -0.5, -2.0):
    w = dual_witness(g, alpha)
    if isinstance(w, Infeasible):
        why = f"row {w.row} already >= alpha" if w.row is not None else f"row mix guarantees {w.lower_bound:.3g}"
        print(f"alpha {alpha:>8}: infeasible ({why})")
    else:
        print(f"alpha {alpha:>8}: beta {np.round(w.beta, 6)}, guarantee {w.guarantee:.2e}")
