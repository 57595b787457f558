"""Exact enumeration of hexagonal polyominoes with at most two runs per column."""

from .asymptotics import asymptotic_check, asymptotic_form, dominant_singularity, extrapolate_growth, find_roots
from .classify import ClassId, Kind, member
from .enumeration import count_class, generate, members
from .hexgrid import ColumnShape, columns, is_connected, neighbors, normalize, reflect, shared_edges
from .series import IntPolynomial, RationalFunction, paper_gf, series_expand, solve_level1
from .transfer import (
    check_level1_equations,
    check_level2_equations,
    count_blocks,
    count_cheesy,
    statistics_series,
)

__version__ = "0.1.0"
