"""Dev harness: validate the ML evaluation regimes against mpmath references."""
import sys, time
sys.path.insert(0, "/root/pkg/src")

import numpy as np
import mpmath
from scipy.special import erfcx

from graphfrac.special import ml_values, gamma, _ml_series_mp

def ml_ref(alpha, beta, z, m=None):
    """High-precision series reference (only viable for moderate m)."""
    if m is None:
        m = abs(z) ** (1.0 / alpha) if z != 0 else 1.0
    return _ml_series_mp(alpha, beta, float(z), float(m))

def check_grid():
    worst = {}
    t0 = time.time()
    for alpha in [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.93, 0.96, 0.99, 0.999, 1.1, 1.5, 1.9]:
        for beta in sorted({1.0, alpha, 0.5, min(1.0 + 0.8 * alpha, 1.9)}):
            mmax = 300.0  # reference affordable up to here
            xs = []
            for x in np.geomspace(1e-3, 1e8, 45):
                m = x ** (1.0 / alpha)
                if m <= mmax:
                    xs.append(x)
            xs = np.array(xs)
            if xs.size == 0:
                continue
            mine = ml_values(alpha, beta, -xs)
            ref = np.array([ml_ref(alpha, beta, -x) for x in xs])
            err = np.max(np.abs(mine - ref))
            worst[(alpha, beta)] = err
    print(f"grid check took {time.time()-t0:.1f}s")
    for k in sorted(worst):
        flag = " <-- BAD" if worst[k] > 1e-12 else ""
        print(f"alpha={k[0]:.3f} beta={k[1]:.3f} maxabserr={worst[k]:.2e}{flag}")
    print("overall worst:", max(worst.values()))

def check_erfcx():
    xs = np.geomspace(1e-3, 1e8, 60)
    mine = ml_values(0.5, 1.0, -xs)
    ref = erfcx(xs)
    print("erfcx check (alpha=1/2): max abs err", np.max(np.abs(mine - ref)))

def check_exp():
    xs = np.linspace(0, 50, 101)
    mine = ml_values(1.0, 1.0, -xs)
    print("exp check (alpha=1): max abs err", np.max(np.abs(mine - np.exp(-xs))))

def check_seams():
    print("seam agreement (value jumps across regime boundaries):")
    for alpha in [0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99, 1.5]:
        for beta in sorted({1.0, alpha}):
            for mseam in [3.0, 32.0]:
                x = mseam ** alpha
                lo = ml_values(alpha, beta, -(x * (1 - 1e-9)))
                hi = ml_values(alpha, beta, -(x * (1 + 1e-9)))
                jump = abs(lo - hi)
                flag = " <-- BAD" if jump > 1e-12 else ""
                print(f"  a={alpha:.3f} b={beta:.3f} seam m={mseam}: jump={jump:.2e}{flag}")

def timing():
    xs = np.geomspace(1e-3, 1e6, 257)
    for alpha, beta in [(0.3, 1.0), (0.5, 1.0), (0.8, 1.0), (0.5, 0.5), (0.8, 0.8)]:
        t0 = time.time()
        for _ in range(50):
            ml_values(alpha, beta, -xs)
        dt = (time.time() - t0) / 50
        print(f"alpha={alpha} beta={beta}: {dt*1e3:.2f} ms per 257-point batch")

if __name__ == "__main__":
    check_exp()
    check_erfcx()
    check_seams()
    timing()
    check_grid()
