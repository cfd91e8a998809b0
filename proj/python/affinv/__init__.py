"""Modular invariants and extensions of affine sl3 at positive integer level.

Results are plain dicts with the same JSON schemas as the ``affinv`` CLI.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _affinv
from ._affinv import GuardExceeded

__all__ = [
    "GuardExceeded",
    "build_invariant",
    "catalog",
    "classify",
    "conformal_weight",
    "dominant_weights",
    "embedding_check",
    "enumerate_invariants",
    "smat",
    "verify_invariant",
]

FORMAT_VERSION = _affinv.format_version()


def smat(level: int, cache_dir: str | None = None) -> dict[str, Any]:
    return json.loads(_affinv.smat(level, cache_dir))


def build_invariant(level: int, name: str) -> dict[str, Any]:
    return json.loads(_affinv.build_invariant(level, name))


def verify_invariant(invariant: dict[str, Any], cache_dir: str | None = None) -> dict[str, Any]:
    return json.loads(_affinv.verify_invariant(json.dumps(invariant), cache_dir))


def enumerate_invariants(
    level: int,
    guard_dim: int = 64,
    guard_nodes: int = 10**8,
    workers: int = 1,
    cache_dir: str | None = None,
) -> dict[str, Any]:
    """All physical invariants in the commutant; raises GuardExceeded.

    The exception message is a JSON object with ``completed_subtrees`` and
    ``partial`` results.
    """
    return json.loads(_affinv.enumerate(level, guard_dim, guard_nodes, workers, cache_dir))


def classify(level: int, enumerated: bool = False, workers: int = 1, cache_dir: str | None = None) -> dict[str, Any]:
    return json.loads(_affinv.classify(level, enumerated, 64, 10**8, workers, cache_dir))


def embedding_check(level: int, target: str, cache_dir: str | None = None) -> dict[str, Any]:
    return json.loads(_affinv.embedding_check(level, target, cache_dir))


def catalog() -> list[dict[str, Any]]:
    return json.loads(_affinv.catalog())["algebras"]


def dominant_weights(level: int) -> list[tuple[int, int]]:
    """Shifted weights of P^k in lexicographic order."""
    return [tuple(w) for w in _affinv.dominant_weights(level)]


def conformal_weight(level: int, m: int, n: int) -> Fraction:
    """h of the unshifted weight m*L1 + n*L2."""
    return Fraction(_affinv.conformal_weight(level, m, n))
