"""Write a small gallery of SVG drawings: plain, checkered, envelope, skew, uneven pegs."""

import argparse
from fractions import Fraction as F
from pathlib import Path

from stringnet import FrameParams, NetConfig, RenderOptions, Spacing, build_net, render

FIGURES = {
    "right_n10.svg": (NetConfig(10), RenderOptions(show_vertices=True)),
    "checkered_n10.svg": (NetConfig(10), RenderOptions(checkered=True)),
    "envelope_n20.svg": (NetConfig(20), RenderOptions(show_envelope=True)),
    "acute_n12.svg": (NetConfig(12, FrameParams(F(3, 5), F(4, 5))), RenderOptions(checkered=True)),
    "obtuse_n12.svg": (NetConfig(12, FrameParams(F(3, 5), F(-4, 5))), RenderOptions(checkered=True)),
    "squares_n4.svg": (
        NetConfig(4, spacing=Spacing((F(0), F(1, 16), F(1, 4), F(9, 16), F(1)))),
        RenderOptions(checkered=True, show_vertices=True),
    ),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (cfg, opts) in FIGURES.items():
        data = render(build_net(cfg), opts)
        (out / name).write_bytes(data)
        print(f"{out / name}  {len(data)} bytes")


if __name__ == "__main__":
    main()
