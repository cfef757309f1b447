"""Braids, cycle presentations and bouquets of curves on surfaces."""

from ._core import (
    Certificate,
    CurveSystem,
    InvalidSystem,
    MoveRefused,
    ParseError,
    SurfaceInfo,
    bouquet_to_chain,
    braid_equal,
    braid_normal_form,
    detect_bouquet,
    linear_criterion,
    twist_word_equal,
    verify_presentation,
)

__all__ = [
    "Certificate",
    "CurveSystem",
    "InvalidSystem",
    "MoveRefused",
    "ParseError",
    "SurfaceInfo",
    "bouquet_to_chain",
    "braid_equal",
    "braid_normal_form",
    "detect_bouquet",
    "linear_criterion",
    "twist_word_equal",
    "verify_presentation",
]
