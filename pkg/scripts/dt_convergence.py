"""Sampled vs continuous vertical excursion as the planning step shrinks."""
import math

from saddle_walk import GaitRequest, plan_walk

for v in (0.7, 1.0, 1.6):
    for dt in (0.08, 0.04, 0.02, 0.01, 0.005):
        r = plan_walk(GaitRequest(v, math.radians(10), 20, 1.79, 63.3, dt=dt)).report
        print(f"v={v:.1f} dt={dt:.3f}  sampled {r.dz_achieved:.5f}  dense {r.dz_achieved_dense:.5f}"
              f"  target {r.dz_target:.5f}  BoS {r.bos_fraction:.3f}")
