"""Model checking, translations, bisimulations, proof checking and bounded
satisfiability search for the modal logic of strong noncontingency."""

from ._core import (
    BudgetExceededError,
    Formula,
    FormulaSyntaxError,
    Frame,
    Model,
    UnknownWorldError,
    bisimilar,
    check_proof,
    contract,
    largest_bisimulation,
    logically_equivalent,
    parse,
    render,
    satisfiable,
    satisfies,
    separating_formula,
    to_blacktri,
    to_box,
    valid_on_frame,
    valid_on_model,
)

__all__ = [
    "BudgetExceededError",
    "Formula",
    "FormulaSyntaxError",
    "Frame",
    "Model",
    "UnknownWorldError",
    "bisimilar",
    "check_proof",
    "contract",
    "largest_bisimulation",
    "logically_equivalent",
    "parse",
    "render",
    "satisfiable",
    "satisfies",
    "separating_formula",
    "to_blacktri",
    "to_box",
    "valid_on_frame",
    "valid_on_model",
]
