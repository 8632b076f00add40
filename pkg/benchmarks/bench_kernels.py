"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--number 2000]

Times each kernel at the shapes one environment step uses (three bodies,
up to three sensed spheres of 92 points) and a whole stage-2 ``Arena.step``
with each backend swapped in. Also checks that both backends agree.
"""

import argparse
import timeit

import numpy as np

from darl import _pykernels, kernels
from darl.arena import Arena
from darl.dynamics import OrbitParams, cw_transition_matrices
from darl.sensing import _icosphere

try:
    from darl import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def kernel_cases(rng):
    phi, gam = cw_transition_matrices(OrbitParams())
    states = rng.normal(size=(3, 6))
    acc = rng.uniform(-0.1, 0.1, (3, 3))
    yield "cw_propagate (3 bodies)", lambda m: m.cw_propagate(phi, gam, states, acc)
    sphere = np.asarray(_icosphere(3))
    for k in (1, 3):
        pts = np.concatenate([rng.uniform(-6, 6, 3) + sphere for _ in range(k)])
        yield f"polar_histogram ({len(pts)} pts)", lambda m, pts=pts: m.polar_histogram(pts, 10.0, 8, 8)


def env_step_time(module, repeat, number):
    saved = kernels.cw_propagate, kernels.polar_histogram
    import darl.arena as arena_mod

    arena_mod.kernels.cw_propagate = module.cw_propagate
    arena_mod.kernels.polar_histogram = module.polar_histogram
    try:
        env = Arena()
        rng = np.random.default_rng(0)

        def one():
            if env.state is None or env.state.finished:
                env.reset_stage2(seed=int(rng.integers(1 << 30)))
                # park adversaries inside sensor range so the histogram has work to do
                env.state.adversaries[:, :3] = rng.uniform(-6, 6, (2, 3)) + [8.0, 0, 0]
            env.step(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, (2, 3)))

        return best_of(one, repeat, number)
    finally:
        kernels.cw_propagate, kernels.polar_histogram = saved


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=2000)
    args = ap.parse_args(argv)

    print(f"active backend: {kernels.BACKEND}")
    if _ckernels is None:
        print("compiled extension not available; only the fallback can be timed")
    rng = np.random.default_rng(0)
    print(f"{'case':<34}{'numpy (us)':>12}{'cython (us)':>13}{'speedup':>9}")
    for name, call in kernel_cases(rng):
        t_py = best_of(lambda: call(_pykernels), args.repeat, args.number)
        if _ckernels is not None:
            a, b = call(_pykernels), call(_ckernels)
            assert np.allclose(a, b, rtol=0, atol=1e-12), f"backends disagree on {name}"
            t_c = best_of(lambda: call(_ckernels), args.repeat, args.number)
            print(f"{name:<34}{t_py * 1e6:>12.2f}{t_c * 1e6:>13.2f}{t_py / t_c:>8.1f}x")
        else:
            print(f"{name:<34}{t_py * 1e6:>12.2f}{'-':>13}{'-':>9}")
    n_env = max(1, args.number // 4)
    t_py = env_step_time(_pykernels, args.repeat, n_env)
    if _ckernels is not None:
        t_c = env_step_time(_ckernels, args.repeat, n_env)
        print(f"{'Arena.step (stage 2)':<34}{t_py * 1e6:>12.2f}{t_c * 1e6:>13.2f}{t_py / t_c:>8.1f}x")
    else:
        print(f"{'Arena.step (stage 2)':<34}{t_py * 1e6:>12.2f}{'-':>13}{'-':>9}")


if __name__ == "__main__":
    main()
