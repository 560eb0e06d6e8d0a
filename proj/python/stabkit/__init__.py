"""Exact lattice and tilt-stability computations for the Kuznetsov
component of a cubic 5-fold.

Every value crossing the boundary is an exact fraction rendered as a
string; convert with fractions.Fraction where arithmetic is needed.
"""

from ._core import (
    chern,
    delta,
    euler_pairing_c0,
    gepner_check,
    gram,
    nu,
    pick_tree,
    plot_hexagon,
    plot_xieta,
    project_ku,
    serre_orbit,
    todd,
    v_point,
    verify,
    walls,
    z_tilt,
)

__all__ = [
    "chern",
    "delta",
    "euler_pairing_c0",
    "gepner_check",
    "gram",
    "nu",
    "pick_tree",
    "plot_hexagon",
    "plot_xieta",
    "project_ku",
    "serre_orbit",
    "todd",
    "v_point",
    "verify",
    "walls",
    "z_tilt",
]
