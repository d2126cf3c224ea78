"""Replay of the explicit computations behind the rank-2 automorphism
classification: printed generator matrices, the solved symbolic patterns, the
76-unknown linearized system and its determinant, the matrix-unit generation
argument, and the G2 condition list.  Every check recomputes from scratch in
exact arithmetic and reports pass/fail plus any committed reconciliations."""

from .runner import STEP_NAMES, run_step

__all__ = ['STEP_NAMES', 'run_step']
