"""Per-check trial outcomes and timings for the verification harness.

    python3 scripts/hit_rates.py --trials 500 --seed 42
"""

import argparse
import time

from ueq import checks as K


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--max-carrier", type=int, default=6)
    args = ap.parse_args()
    cfg = K.HarnessConfig(seed=args.seed, trials=args.trials, max_carrier=args.max_carrier)

    print(f"{'check':8s} {'pass':>5s} {'fail':>5s} {'vac':>5s} {'hit':>6s} {'secs':>6s}")
    for pc in K.CHECKS.values():
        start = time.perf_counter()
        r = K.run_check(pc, cfg)
        secs = time.perf_counter() - start
        flag = "" if r.ok else "  <-- not ok"
        print(f"{pc.id:8s} {r.passes:5d} {r.failures:5d} {r.vacuous:5d} {r.hit_rate:6.2f} {secs:6.2f}{flag}")


if __name__ == "__main__":
    main()
