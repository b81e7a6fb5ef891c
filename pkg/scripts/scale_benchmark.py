"""Time and peak memory of building and fully verifying large nets."""

import argparse
import time
import tracemalloc
from fractions import Fraction

from stringnet import FrameParams, NetConfig, build_net, check_all, total_area


def run(n: int, frame: FrameParams) -> None:
    tracemalloc.start()
    t0 = time.perf_counter()
    net = build_net(NetConfig(n, frame))
    t1 = time.perf_counter()
    rep = check_all(net, mirror=frame.b != 0)
    t2 = time.perf_counter()
    total = total_area(net)
    t3 = time.perf_counter()
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    print(
        f"N={n:>5} frame=({frame.a},{frame.b}) vertices={len(net):>8} "
        f"build={t1 - t0:6.2f}s checks={t2 - t1:6.2f}s area={t3 - t2:6.2f}s "
        f"peak={peak / 2**20:7.1f}MiB all_hold={rep.all_hold} total={total}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sizes", nargs="*", type=int, default=[250, 500, 1000, 2000])
    ap.add_argument("--skew", action="store_true", help="also run the (3/5, 4/5) frame")
    args = ap.parse_args()
    frames = [FrameParams()]
    if args.skew:
        frames.append(FrameParams(Fraction(3, 5), Fraction(4, 5)))
    for n in args.sizes:
        for fr in frames:
            run(n, fr)


if __name__ == "__main__":
    main()
