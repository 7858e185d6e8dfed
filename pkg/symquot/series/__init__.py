"""Hilbert series of off-shell and on-shell invariant rings."""

from symquot.series.counting import (
    SeriesTruncation,
    circle_series_parity,
    expand_rational,
    format_rational,
    offshell_dims,
    onshell_dims,
    quotient_dims,
    series_equal,
    supported_on_monoid,
)

__all__ = [
    "SeriesTruncation",
    "circle_series_parity",
    "expand_rational",
    "format_rational",
    "offshell_dims",
    "onshell_dims",
    "quotient_dims",
    "series_equal",
    "supported_on_monoid",
]
