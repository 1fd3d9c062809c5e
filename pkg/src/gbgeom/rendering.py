"""Deterministic text rendering of polynomials.

Both modes print terms in descending lexicographic order and produce strings
that parse back to the rendered polynomial, so regression artifacts can be
pinned as text.  ``monic`` rescales the leading coefficient to one; ``cleared``
multiplies denominators away and normalizes the integer content instead.
"""

from __future__ import annotations

from .polynomials import Polynomial, clear_denominators

__all__ = ["RENDER_MODES", "render"]

RENDER_MODES = ("monic", "cleared")


def render(p: Polynomial, mode: str = "monic") -> str:
    if mode not in RENDER_MODES:
        raise ValueError(f"unknown render mode {mode!r}")
    if not p.terms:
        return "0"
    if mode == "cleared":
        return str(clear_denominators(p))
    return str(p.monic())
