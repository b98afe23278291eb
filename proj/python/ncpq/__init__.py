"""Quiver root systems, exceptional sequences and non-crossing partitions."""

import json as _json

from ._core import (
    CapExceeded,
    Error,
    InternalError,
    InvalidArgument,
    ParseError,
    Quiver,
    Registry,
    UnsupportedType,
    absolute_length,
    cartan_matrix,
    classify_type,
    coxeter_element,
    euler_form,
    hurwitz_move,
    hurwitz_orbit,
    load_quiver,
    noncrossing_partitions,
    parse_quiver,
    positive_roots,
    reflection,
    reflection_factorizations,
    symmetric_form,
)


def verify_bijection(q, order=(), group_cap=1_000_000, sequence_cap=1_000_000, seed=1, jobs=1):
    """Run the exhaustive check and return the report as a dict."""
    from ._core import verify_bijection_json

    return _json.loads(verify_bijection_json(q, list(order), group_cap, sequence_cap, seed, jobs))


__all__ = [name for name in dir() if not name.startswith("_")]
