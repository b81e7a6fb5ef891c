"""Exact construction and verification of string-art line nets."""

from .areas import (
    PieceId,
    area_Q,
    area_T,
    area_Tbar,
    area_Tbarprime,
    area_Tboundary,
    area_Tprime,
    area_totals,
    diagonal_length_sq,
    envelope_reference,
    total_area,
    triangle_area,
)
from .invariants import PropertyReport, check_all
from .net import (
    ConfigError,
    FrameParams,
    Net,
    NetConfig,
    Point,
    Spacing,
    Vec2,
    build_net,
    intercepts,
    vertex,
)
from .rational import Rational, approximate_real, format_rational, parse_rational
from .render import RenderOptions, render
from .spacing import SolveOutcome, solve_spacing, verify_uniqueness_bruteforce

__version__ = "0.1.0"
