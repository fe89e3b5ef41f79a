"""Hom(R) posets of finite rings and of Z."""

import json as _json

from ._homposet import (
    HomPair,
    HomposetError,
    Ring,
    claim_ids,
    hasse,
    hom,
    is_epimorphism,
    max_elements,
    morphisms,
    pair_of,
    render,
    z_join,
    z_leq,
    z_meet,
    z_rho,
)
from ._homposet import run_oracle as _run_oracle


def run_oracle(bound=16, only=()):
    """Run the brute-force theorem battery and return the report as a dict."""
    return _json.loads(_run_oracle(bound, list(only)))


__all__ = [
    "HomPair",
    "HomposetError",
    "Ring",
    "claim_ids",
    "hasse",
    "hom",
    "is_epimorphism",
    "max_elements",
    "morphisms",
    "pair_of",
    "render",
    "run_oracle",
    "z_join",
    "z_leq",
    "z_meet",
    "z_rho",
]
