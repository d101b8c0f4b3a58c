"""Compare the numba kernels with the pure-Python fallback.

Each backend runs in its own interpreter because the switch is read at
import time. Compilation is warmed up before timing.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from knotq import _jit, groups, links
from knotq.enumerator import CapExceeded, enumerate_quandle
from knotq.quandle import automorphisms, from_cayley

repeat = int(sys.argv[1])

def best(fn):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

def cap_run(p, cap):
    def go():
        try:
            enumerate_quandle(p, cap)
        except CapExceeded:
            pass
    return go

t35 = links.torus(3, 5, None, 2)
q35 = from_cayley(enumerate_quandle(t35))
axis8 = from_cayley(enumerate_quandle(links.torus_with_axis(8)))
cases = {
    "enumerate Q2(T3,5)": lambda: enumerate_quandle(t35),
    "enumerate Q2(T2,3 u B)": lambda: enumerate_quandle(links.named("trefoil-axis-b", 2)),
    "cap run Q6(T2,3), 20000": cap_run(links.torus(2, 3, None, 6), 20000),
    "cap run Q3(T3,3), 20000": cap_run(links.torus(3, 3, None, 3), 20000),
    "automorphisms Q2(T3,5)": lambda: automorphisms(q35),
    "automorphisms Q2(T2,8 u A)": lambda: automorphisms(axis8),
    "group iso Aut Q2(T3,5)": lambda: groups.group_isomorphic(groups.automorphism_group(q35),
                                                             groups.reference_group("Z2 x S5")),
}
print(json.dumps({"backend": _jit.backend(), "times": {k: best(f) for k, f in cases.items()}}))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("KNOTQ_DISABLE_NUMBA", None)
    if disable:
        env["KNOTQ_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    width = max(map(len, fast["times"]))
    print(f"{'case':<{width}}  {fast['backend']:>10}  {slow['backend']:>10}  speedup")
    for case, t in fast["times"].items():
        s = slow["times"][case]
        print(f"{case:<{width}}  {t * 1e3:8.2f}ms  {s * 1e3:8.2f}ms  {s / t:7.1f}x")


if __name__ == "__main__":
    main()
