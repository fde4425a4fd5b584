"""Regenerate tests/fixtures/bessel_reference.json.

Reference values for J_nu, Y_nu and first derivatives at 50 points of the
validated box, computed with mpmath at 40 significant digits (ascending
series / arbitrary precision, fully independent of scipy).  Run from the
repository root:

    python tests/make_bessel_fixtures.py
"""

import json
import pathlib

import mpmath as mp
import numpy as np

DPS = 40
N_POINTS = 50
SEED = 20240817


def main():
    mp.mp.dps = DPS
    rng = np.random.default_rng(SEED)
    points = []
    # one anchor matching the documented example point
    nus = [2.0]
    zs = [complex(3.0, 0.5)]
    while len(nus) < N_POINTS:
        nu = float(rng.uniform(0.0, 20.0))
        z = complex(float(rng.uniform(0.5, 50.0)), float(rng.uniform(-5.0, 5.0)))
        if abs(z) < 0.5 or abs(z) > 50.0:
            continue
        nus.append(nu)
        zs.append(z)
    for nu, z in zip(nus, zs):
        zm = mp.mpc(z.real, z.imag)
        vals = {
            "j": mp.besselj(nu, zm),
            "y": mp.bessely(nu, zm),
            "j_prime": mp.besselj(nu, zm, derivative=1),
            "y_prime": mp.bessely(nu, zm, derivative=1),
        }
        rec = {"nu": repr(nu), "z_re": repr(z.real), "z_im": repr(z.imag)}
        for k, v in vals.items():
            rec[k + "_re"] = mp.nstr(v.real, 30)
            rec[k + "_im"] = mp.nstr(v.imag, 30)
        points.append(rec)
    out = pathlib.Path(__file__).parent / "fixtures" / "bessel_reference.json"
    out.parent.mkdir(exist_ok=True)
    out.write_text(json.dumps({"dps": DPS, "seed": SEED, "points": points},
                              indent=1))
    print(f"wrote {len(points)} points to {out}")


if __name__ == "__main__":
    main()
