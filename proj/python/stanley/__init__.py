"""Depth and Stanley depth of edge ideals of strong products of paths and cycles."""

from ._stanley import (
    __version__,
    depth,
    generators,
    info,
    run_suite,
    sdepth,
    verify_decomposition,
)

__all__ = [
    "__version__",
    "depth",
    "generators",
    "info",
    "run_suite",
    "sdepth",
    "verify_decomposition",
]
