"""Exact-arithmetic toolkit for strongly homotopy Lie structures.

Thin Python wrapper over the compiled ``_shlie`` extension.  The extension
speaks the same JSON documents the command-line tool reads and writes; this
package parses them into plain dicts so callers can work with native types.
All arithmetic underneath is exact (rationals), and every check reported
here is a zero-tolerance identity.
"""

from __future__ import annotations

import json
from typing import Any

from . import _shlie

__version__ = "1.0.0"

__all__ = [
    "gen_lie_ideal",
    "gen_random",
    "check",
    "build",
    "verify",
    "truncate",
    "example",
]


def gen_lie_ideal(preset: str) -> dict[str, Any]:
    """Generate a named preset instance (e.g. ``"lie2"``, ``"perturbed4"``)."""
    return json.loads(_shlie.gen_lie_ideal(preset))


def gen_random(
    seed: int, dims: list[int] | None = None, height: int = 9
) -> dict[str, Any]:
    """Generate a seeded random instance whose complex is exact in positive
    degrees.  ``dims`` requests dimensions per degree; empty draws a shape
    from the seed."""
    return json.loads(_shlie.gen_random(seed, dims or [], height))


def check(instance: dict[str, Any]) -> dict[str, Any]:
    """Check acyclicity in positive degrees plus the degree-0 compatibility
    conditions of the input bracket."""
    return json.loads(_shlie.check(json.dumps(instance)))


def build(
    instance: dict[str, Any], max_arity: int = 5
) -> tuple[dict[str, Any], dict[str, Any]]:
    """Run the inductive construction up to ``max_arity``.

    Returns ``(structure, report)``: the stored bracket family and the full
    build report (conditions, boundary checks, vanishing pattern, relation
    defects)."""
    structure_json, report_json = _shlie.build(json.dumps(instance), max_arity)
    return json.loads(structure_json), json.loads(report_json)


def verify(structure: dict[str, Any]) -> dict[str, Any]:
    """Re-verify a stored structure: relation defects for every arity it
    holds, and the vanishing pattern."""
    return json.loads(_shlie.verify(json.dumps(structure)))


def truncate(instance: dict[str, Any]) -> dict[str, Any]:
    """Cut an instance to the three-term complex whose top degree is the
    kernel of the first differential (with the inclusion as differential)."""
    return json.loads(_shlie.truncate(json.dumps(instance)))


def example(
    which: str, samples: int = 100, seed: int = 0, max_freq: int = 2
) -> dict[str, Any]:
    """Run a built-in geometric example suite: ``"courant"`` (generalized
    tangent bundle of the flat 2-torus) or ``"symplectic"`` (closed 1-forms
    with the area form)."""
    return json.loads(_shlie.example(which, samples, seed, max_freq))
