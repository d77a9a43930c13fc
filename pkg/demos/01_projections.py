# Projections onto compact convex sets, and what they certify.
#
# Run: python demos/01_projections.py
import numpy as np

from varnash import Ball, Box, Simplex, distance, normal_cone_check, project, variational_check

rng = np.random.default_rng(0)

# The simplex projection sorts, finds a threshold and clips.
S = Simplex(3)
x = np.array([0.8, 0.6, -0.4])
px = project(S, x)
print("P(x; simplex) =", px, " sum =", px.sum())

# The nearest point is characterized by an obtuse-angle condition:
# <x - P(x), w - P(x)> <= 0 for every w in the set.
print("variational inequality holds:", variational_check(S, x, px))
print("and fails for the barycenter:", variational_check(S, x, S.barycenter()))

# Projections never increase distances.
y = rng.normal(size=3)
print(f"|P(x) - P(y)| = {np.linalg.norm(px - project(S, y)):.4f} <= |x - y| = {np.linalg.norm(x - y):.4f}")

# v is a normal direction at xbar exactly when projecting xbar + v returns xbar.
xbar = np.array([1.0, 0.0, 0.0])
print("(1, -1, -1) normal at e1:", normal_cone_check(S, xbar, [1.0, -1.0, -1.0]))
print("(-1, 1, 0) normal at e1:", normal_cone_check(S, xbar, [-1.0, 1.0, 0.0]))

# Boxes clamp, balls rescale.
print("box:", project(Box([0, 0], [1, 2]), [-3, 5]))
print("ball:", project(Ball([0, 0], 1.0), [3, 4]), " distance", distance(Ball([0, 0], 1.0), [3, 4]))
