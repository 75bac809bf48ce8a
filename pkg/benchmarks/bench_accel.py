"""Compare the numba kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the backend is fixed at
import time by ISODOM_DISABLE_JIT. The numba run warms up first so compile
time is not counted.

    python3 benchmarks/bench_accel.py [--repeat 3] [--json]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from isodom import kernels
from isodom._accel import backend_name
from isodom.graph import gen_family, gen_random_graph

cases = [
    ("brute", "isds", gen_family("cycle", 18)),
    ("brute", "sds", gen_random_graph(16, 0.25, 1)),
    ("bnb", "isds", gen_family("path", 28)),
    ("bnb", "sds", gen_random_graph(30, 0.15, 2)),
]
kinds = {"ds": kernels.DS, "sds": kernels.SDS, "ids": kernels.IDS, "isds": kernels.ISDS}
repeat = int(sys.argv[1])

def run(method, kind, g):
    o, c = g.masks
    if method == "brute":
        return kernels.brute_search(kinds[kind], o, c, g.n)[0]
    return kernels.bnb_search(kinds[kind], o, c, g.n, g.n + 1)[0]

rows = []
for method, kind, g in cases:
    run(method, kind, g)  # warm-up (jit compile)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        mask = run(method, kind, g)
        best = min(best, time.perf_counter() - t0)
    rows.append({"case": f"{method}/{kind}/n={g.n}", "seconds": best, "mask": int(mask)})
print(json.dumps({"backend": backend_name(), "rows": rows}))
"""


def run_backend(disable, repeat):
    env = dict(os.environ, ISODOM_DISABLE_JIT="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    table = []
    for a, b in zip(fast["rows"], slow["rows"]):
        if a["mask"] != b["mask"]:
            raise SystemExit(f"backends disagree on {a['case']}: {a['mask']} vs {b['mask']}")
        table.append({"case": a["case"], fast["backend"]: a["seconds"], slow["backend"]: b["seconds"],
                      "speedup": b["seconds"] / a["seconds"] if a["seconds"] else None})
    if args.json:
        print(json.dumps(table, indent=2))
        return
    print(f"{'case':<22}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for row in table:
        print(f"{row['case']:<22}{row[fast['backend']]:>12.4f}{row[slow['backend']]:>12.4f}"
              f"{row['speedup']:>9.1f}x")


if __name__ == "__main__":
    main()
