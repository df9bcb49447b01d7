"""Compare the numba kernels with their pure-numpy twins.

Run with ``python3 benchmarks/bench_kernels.py``. The kernel timings call
both implementations directly; the end-to-end row runs one epoch of channel
training in a subprocess, once with ``ADBN_NO_NUMBA=1``.
"""
import os
import subprocess
import sys
import timeit

import numpy as np

from adbn import kernels
from adbn._accel import HAVE_NUMBA

EPOCH_SCRIPT = """
import time
import numpy as np
from adbn.rbm import RbmLayer, TrainConfig, train_rbm
rng = np.random.default_rng(0)
data = (rng.random((2000, 784)) < 0.15).astype(float)
rbm = RbmLayer.random(784, 500, rng)
cfg = TrainConfig(epochs=1, batch_size=100, momentum=0.9)
train_rbm(rbm, data[:100], cfg, rng)  # warm-up / jit
start = time.perf_counter()
train_rbm(rbm, data, cfg, rng)
print(time.perf_counter() - start)
"""


def best_of(fn, repeat=5, number=3):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def kernel_cases(rng):
    x = rng.normal(size=(100, 500))
    p, u = rng.random((100, 500)), rng.random((100, 500))
    err = rng.normal(size=(100, 500))
    w = rng.normal(0, 0.5, (8, 8))
    bv, bh = rng.normal(size=8), rng.normal(size=8)
    v0 = (rng.random((100, 8)) < 0.5).astype(float)
    uh, uv = rng.random((1000, 100, 8)), rng.random((1000, 100, 8))
    return {
        "sigmoid 100x500": ("sigmoid", (x,)),
        "bernoulli 100x500": ("bernoulli", (p, u)),
        "logistic_delta 100x500": ("logistic_delta", (p, err)),
        "gibbs_chains 8x8, 100 chains x 1000 steps": ("gibbs_chains", (w, bv, bh, v0, uh, uv)),
    }


def epoch_seconds(disable_numba):
    env = dict(os.environ)
    if disable_numba:
        env["ADBN_NO_NUMBA"] = "1"
    else:
        env.pop("ADBN_NO_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", EPOCH_SCRIPT], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main():
    if not HAVE_NUMBA:
        print("numba is not installed; only the numpy path can run")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':45s} {'numpy ms':>10s} {'numba ms':>10s} {'speed-up':>9s}")
    for label, (name, args) in kernel_cases(rng).items():
        slow = getattr(kernels, f"{name}_numpy")
        fast = getattr(kernels, f"{name}_numba")
        fast(*args)  # compile
        t_np = best_of(lambda: slow(*args))
        t_nb = best_of(lambda: fast(*args))
        print(f"{label:45s} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:8.1f}x")

    t_np, t_nb = epoch_seconds(True), epoch_seconds(False)
    label = "CD-1 epoch, 784x500, 2000 images"
    print(f"{label:45s} {1e3 * t_np:10.1f} {1e3 * t_nb:10.1f} {t_np / t_nb:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
