"""
Shrinkage on a two-row frame
============================

The smallest redundant frame is a single column ``(1, c)``. Here the frame
soft shrinkage, its subgradient map and the potential all have closed forms,
so the iterative machinery can be checked by eye.
"""

import numpy as np

from proxframe import build_frame, frame_soft_shrink
from proxframe.subgradient import h_1d_breakpoint, h_1d_value, h_element, phi_1d_value

c, gamma = 2.0, 5.0 / 3.0
F = build_frame([[1.0], [c]])

###############################################################################
# Transform, shrink each coefficient, map back with the pseudoinverse.

for z in (0.5, 1.0, 3.0):
    print(f"P({z}) = {frame_soft_shrink(F, gamma, np.array([z]))[0]:.12f}")

###############################################################################
# The set-valued map H satisfies ``x = P(x + y)`` for every ``y`` in ``H(x)``.
# A relaxed fixed-point iteration finds one element; compare with the
# closed form on both sides of the breakpoint.

xb = h_1d_breakpoint(c, gamma)
print(f"\nbreakpoint x* = {xb:.6f}")
for x in (0.0, 1 / 3, xb, 2.0):
    el = h_element(F, gamma, np.array([x]))
    lo, hi = h_1d_value(c, gamma, x)
    print(f"x={x:.4f}  iterative y={el.y[0]:+.8f}  closed form [{lo:+.6f}, {hi:+.6f}]"
          f"  ({el.iterations} steps)")

###############################################################################
# The potential is quadratic up to the breakpoint and linear after it.

xs = np.linspace(-2, 2, 9)
print("\n x      phi(x)")
for x in xs:
    print(f"{x:+.2f}  {phi_1d_value(c, gamma, x):.6f}")
