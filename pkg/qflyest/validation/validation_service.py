# validation/validation_service.py
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel

from ..datamodel import DQIInstance, HardwareProfile, QAOAInstance, QFlyTopology
from ..hwmodel.profile import PENALTY_RANGE, network_penalty
from ..utils import format_rational


class ValidationError(BaseModel):
    field: str
    error: str
    suggestion: Optional[str] = None


class ValidationResponse(BaseModel):
    is_valid: bool
    errors: List[ValidationError] = []
    warnings: List[ValidationError] = []

    def merge(self, other: "ValidationResponse") -> "ValidationResponse":
        return ValidationResponse(
            is_valid=self.is_valid and other.is_valid,
            errors=self.errors + other.errors,
            warnings=self.warnings + other.warnings,
        )


class ValidationService:
    @staticmethod
    def validate_profile(profile: HardwareProfile) -> ValidationResponse:
        """Check profile invariants; out-of-range penalties are warnings, not violations"""
        errors: List[ValidationError] = []
        warnings: List[ValidationError] = []

        positive = {
            "t_toff": profile.t_toff,
            "gridsynth_a": profile.gridsynth_a,
            "gridsynth_b": profile.gridsynth_b,
            "code_cycle_us": profile.code_cycle_us,
            "code_distance": profile.code_distance,
            "raw_bell_rate_hz": profile.raw_bell_rate_hz,
            "distillation_yield": profile.distillation_yield,
            "t_states_per_node_per_cycle": profile.t_states_per_node_per_cycle,
        }
        for field, value in positive.items():
            if value <= 0:
                errors.append(
                    ValidationError(
                        field=field,
                        error=f"{field} must be positive",
                        suggestion=f"Set {field} to a value greater than zero",
                    )
                )

        if profile.distillation_yield > 1:
            errors.append(
                ValidationError(
                    field="distillation_yield",
                    error="distillation_yield must not exceed 1",
                    suggestion="Use the fraction of raw Bell pairs surviving distillation, e.g. 1/3",
                )
            )

        lo, hi = profile.t_bell_domain
        if lo <= 0 or lo > hi:
            errors.append(
                ValidationError(
                    field="t_bell_domain",
                    error=f"invalid T_Bell domain [{format_rational(lo)}, {format_rational(hi)}]",
                    suggestion="Use a positive interval such as [2, 10]",
                )
            )

        if profile.t_states_per_node_per_cycle != 1:
            warnings.append(
                ValidationError(
                    field="t_states_per_node_per_cycle",
                    error="only one T state per node per cycle is modeled; T_Toff is not rescaled",
                )
            )

        if profile.code_distance < 3:
            errors.append(
                ValidationError(
                    field="code_distance",
                    error=f"code_distance must be at least 3, got {profile.code_distance}",
                )
            )

        if not errors:
            penalty = network_penalty(profile)
            if not PENALTY_RANGE[0] <= penalty <= PENALTY_RANGE[1]:
                warnings.append(
                    ValidationError(
                        field="code_distance",
                        error=(
                            f"penalty {float(penalty):g} outside modeled domain "
                            f"[{format_rational(PENALTY_RANGE[0])},{format_rational(PENALTY_RANGE[1])}]"
                        ),
                        suggestion="Pick a code distance between 3 and 15 at default rates",
                    )
                )

        for warning in warnings:
            logger.warning(f"Hardware profile: {warning.error}")
        return ValidationResponse(is_valid=not errors, errors=errors, warnings=warnings)

    @staticmethod
    def validate_qaoa_layout(instance: QAOAInstance, topology: QFlyTopology) -> ValidationResponse:
        """Every group must hold a full copy of the variables across its nodes"""
        errors: List[ValidationError] = []
        capacity = instance.vars_per_node * topology.nodes_per_group
        if capacity < instance.n_vars:
            errors.append(
                ValidationError(
                    field="qaoa.vars_per_node",
                    error=f"{instance.vars_per_node} vars x {topology.nodes_per_group} nodes cannot hold {instance.n_vars} variables",
                    suggestion="Raise vars_per_node or nodes_per_group",
                )
            )
        if instance.vars_per_node + 2 > topology.logical_compute_per_node:
            errors.append(
                ValidationError(
                    field="qaoa.vars_per_node",
                    error=(
                        f"{instance.vars_per_node} variables plus 2 ancillas exceed "
                        f"{topology.logical_compute_per_node} compute qubits per node"
                    ),
                )
            )
        return ValidationResponse(is_valid=not errors, errors=errors)

    @staticmethod
    def validate_dqi_instance(instance: DQIInstance, topology: QFlyTopology) -> ValidationResponse:
        errors: List[ValidationError] = []
        warnings: List[ValidationError] = []
        if 2 * instance.weight_l >= instance.m_clauses:
            errors.append(
                ValidationError(
                    field="dqi.weight_l",
                    error=f"weight_l={instance.weight_l} must be below m_clauses/2={instance.m_clauses / 2:g}",
                )
            )
        if instance.clause_qubits_per_node != topology.logical_compute_per_node:
            warnings.append(
                ValidationError(
                    field="dqi.clause_qubits_per_node",
                    error=(
                        f"clause packing {instance.clause_qubits_per_node} differs from "
                        f"{topology.logical_compute_per_node} compute qubits per node"
                    ),
                )
            )
        return ValidationResponse(is_valid=not errors, errors=errors, warnings=warnings)
