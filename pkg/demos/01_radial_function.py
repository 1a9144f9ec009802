"""How far does each latitude circle travel when the ball is flattened?

Walks the closed-form radial stretch function from pole to equator and
shows how close it sits to the straight line that an equidistant per-face
projection would use.
"""

import math

import numpy as np

from flatdisk import closedform as cf

print("colatitude -> disk radius (unnormalized)")
print(f"{'theta_deg':>10} {'f(theta)':>14} {'slope':>12} {'chord':>14} {'gap':>12}")
for deg in range(0, 95, 5):
    t = math.radians(deg)
    f = cf.eval_f(t)
    chord = t * cf.TWO_LN2 / (math.pi / 2)
    print(f"{deg:>10} {f:>14.8f} {cf.eval_f_prime(t):>12.8f}"
          f" {chord:>14.8f} {chord - f:>12.8f}")

print()
print(f"equator radius f(pi/2) = 2 ln 2 = {cf.TWO_LN2:.12f}")
print(f"pole slope     f'(0)   = (1+ln 2)/2 = {cf.POLE_SLOPE:.12f}")

t = np.linspace(0, math.pi / 2, 10_000)
gap = t * cf.TWO_LN2 / (math.pi / 2) - cf.eval_f(t)
i = int(np.argmax(gap))
print(f"largest gap to the chord: {gap[i]:.6f} at theta = {math.degrees(t[i]):.2f} deg")
print("so the curve is almost, but not exactly, a straight line.")
