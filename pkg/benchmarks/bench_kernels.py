"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--quick]

Each kernel is called once before timing so JIT compilation is excluded.
The script also checks that both variants agree on the benchmark inputs.
"""
import argparse
import json
import timeit

import numpy as np

from macovert import kernels
from macovert._jit import HAVE_NUMBA
from macovert.config import ScenarioConfig


def _link_case(rng):
    cfg = ScenarioConfig()
    ground = np.array([cfg.covert_user, *cfg.nodes, cfg.warden], dtype=float)
    uav = np.array([120.0, 80.0, cfg.altitude])
    pos = np.sort(rng.uniform(0.0, cfg.array_length, cfg.n_antennas))
    w_c = (rng.normal(size=cfg.n_antennas) + 1j * rng.normal(size=cfg.n_antennas)) * 0.3
    w_e = (rng.normal(size=cfg.n_antennas) + 1j * rng.normal(size=cfg.n_antennas)) * 0.3
    rc = cfg.radio
    return (uav, ground, pos, w_c, w_e, rc.beta0, rc.alpha_e, rc.wavelength)


def _dep_case(rng, contexts, points):
    zeta0 = 10.0 ** rng.uniform(-14, -8, contexts)
    zeta1 = zeta0 * (1.0 + 10.0 ** rng.uniform(-3, 1, contexts))
    tau_max = 40.0 * zeta1
    taus = np.linspace(0.0, 1.0, points)[None, :] * tau_max[:, None]
    return zeta0, zeta1, tau_max, taus


def _time(fn, repeat, number):
    fn()
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def run(repeat=5, quick=False):
    rng = np.random.default_rng(0)
    link = _link_case(rng)
    contexts, points = (256, 2048) if quick else (2048, 20000)
    z0, z1, tmax, taus = _dep_case(rng, contexts, points)

    cases = {
        "link_budget": (lambda: kernels.link_budget_numpy(*link),
                        lambda: kernels.link_budget_numba(*link), 2000),
        "dep_grid_min": (lambda: kernels.dep_grid_min_numpy(z0, z1, taus),
                         lambda: kernels.dep_grid_min_numba(z0, z1, taus), 1),
        "dep_uniform_min": (lambda: kernels.dep_uniform_min_numpy(z0, z1, tmax, points),
                            lambda: kernels.dep_uniform_min_numba(z0, z1, tmax, points), 1),
    }
    rows = []
    for name, (f_np, f_nb, number) in cases.items():
        a, b = f_np(), f_nb()
        a = a if isinstance(a, tuple) else (a,)
        b = b if isinstance(b, tuple) else (b,)
        err = max(float(np.max(np.abs(x - y) / np.maximum(np.abs(x), 1e-300))) for x, y in zip(a, b))
        t_np = _time(f_np, repeat, number)
        t_nb = _time(f_nb, repeat, number)
        rows.append({"kernel": name, "numpy_s": t_np, "numba_s": t_nb,
                     "speedup": t_np / t_nb, "max_rel_diff": err})
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="small DEP grids")
    ap.add_argument("--json", action="store_true", help="print JSON instead of a table")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rows = run(args.repeat, args.quick)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<18}{'numpy':>12}{'numba':>12}{'speedup':>9}{'max rel diff':>14}")
    for r in rows:
        print(f"{r['kernel']:<18}{r['numpy_s'] * 1e3:>10.3f}ms{r['numba_s'] * 1e3:>10.3f}ms"
              f"{r['speedup']:>8.1f}x{r['max_rel_diff']:>14.1e}")


if __name__ == "__main__":
    main()
