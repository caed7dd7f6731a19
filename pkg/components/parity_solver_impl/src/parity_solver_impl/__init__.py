"""Parity game solvers: Zielonka's recursion and an exhaustive oracle."""

from __future__ import annotations

from parity_solver_impl.attractor import attractor
from parity_solver_impl.certify import CertificateReport, certify
from parity_solver_impl.oracle import BruteForceSolver
from parity_solver_impl.zielonka import ZielonkaSolver

__all__ = ["BruteForceSolver", "CertificateReport", "ZielonkaSolver", "attractor", "certify"]
