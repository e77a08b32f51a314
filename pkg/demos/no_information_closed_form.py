"""
Closed-form worst-case play without private information
========================================================

When neither player sees any realization, player A's worst-case problem is
maximizing sum(p*E) - max(p*E)/2 over the simplex.  The exact solution
supports the highest-mean resources and equalizes p_k * E_k across the
support -- so the better a supported resource, the *less* often it is
picked.  A brute-force grid search confirms the closed form.
"""

import numpy as np

from congames import explicit_solution, no_info_objective

means = np.array([2.4, 1.7, 1.0, 0.6])
sol = explicit_solution(means)

print(f"means                : {means}")
print(f"support size         : {sol.support_size}")
print(f"optimal p            : {np.round(sol.p, 6)}")
print(f"p * E on the support : {np.round(sol.p * means, 6)}  (equalized)")
print(f"worst-case utility   : {sol.value:.6f}")

# brute-force oracle over the simplex
step = 0.02
axes = [np.arange(int(1 / step) + 1)] * (means.size - 1)
mesh = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, means.size - 1)
mesh = mesh[mesh.sum(axis=1) <= int(1 / step)]
grid = np.column_stack([mesh, int(1 / step) - mesh.sum(axis=1)]) * step
loads = grid * means
grid_best = float(np.max(loads.sum(axis=1) - 0.5 * loads.max(axis=1)))
print(f"grid search (step {step}): {grid_best:.6f}")

# the optimum is typically not unique
print("\nmeans (2, 1):")
print(f"  closed form value {explicit_solution([2.0, 1.0]).value:.4f} at p = (1, 0)")
print(f"  p = (1/3, 2/3) ties it: {no_info_objective([1/3, 2/3], [2.0, 1.0]):.4f}")
