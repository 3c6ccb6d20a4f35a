"""Exact polytope face lattices, face-number bounds, angle sums and projections."""

import json
from fractions import Fraction

from ._core import (
    Polytope,
    PolyfaceError,
    corpus_csv,
    diagram_lemma_check,
    from_json,
    generate,
    hull,
    sample_direction,
)
from . import _core

__all__ = [
    "Polytope",
    "PolyfaceError",
    "angle_sum",
    "corpus_csv",
    "curvature",
    "diagram_lemma_check",
    "from_json",
    "generate",
    "hull",
    "project",
    "rho",
    "sample_direction",
    "solid_angle",
    "verify_bounds",
]


def rho(d, k):
    return Fraction(_core.rho(d, k))


def verify_bounds(polytope):
    return json.loads(_core.verify_bounds_json(polytope))


def solid_angle(polytope, face, samples=1_000_000, seed=0):
    return json.loads(_core.solid_angle_json(polytope, list(face), samples, seed))


def angle_sum(polytope, k, samples=1_000_000, seed=0):
    return json.loads(_core.angle_sum_json(polytope, k, samples, seed))


def curvature(polytope, face, samples=1_000_000, seed=0):
    return json.loads(_core.curvature_json(polytope, list(face), samples, seed))


def project(polytope, direction=None, seed=0):
    return json.loads(_core.project_json(polytope, direction, seed))
