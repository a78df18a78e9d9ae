"""charkit: exact computations around Weyl groups, Hecke traces and
nonabelian Fourier transforms, down to the table of values at the regular
unipotent classes of E7 in characteristic 2.

All arithmetic is exact (rationals, cyclotomic numbers, Laurent polynomials
in a square root of q); every value object is immutable and safe to share.
"""

from .cartan import CartanDatum, InvalidCartan
from .cyclotomic import CycNum, parse_cyc
from .e7 import (
    AmbiguousSign, CharValueTable, RegUnipModel, SignSolution,
    chi_cuspidal_table, cell_sum, empty_cell_backsolve, final_value_table,
    regular_class_model, solve_signs,
)
from .families import FamilyDataset, PinningError, SchemaError, load_family_dataset
from .fourier import (
    FourierMatrix, InvariantViolation, KeyMismatch, MPair, almost_transform,
    fourier_matrix, m_set, pairing,
)
from .groups import (
    CharTable, FiniteGroup, OrderCapExceeded, group_from_text, parse_permutation,
)
from .hecke import (
    DatumMismatch, HeckeElement, IrrepModel, UnsupportedLabel,
    build_irrep_model, supported_labels,
)
from .laurent import LaurentPoly, UnsupportedSpecialization, parse_laurent
from .roots import RootSystem, WeylElement, build_root_system, coxeter_conjugator
from .sandbox import (
    LieGroupSandbox, NonIntegerCharacter, SizeCapExceeded, build_sandbox,
    convolution_hecke_check, heckeuch_report, heckeuch_verify,
    verify_cell_partition, verify_cell_products,
)
from .traces import ConsistencyError, CoxeterTraceDataset, load_coxeter_traces

__version__ = "0.1.0"

__all__ = [
    "AmbiguousSign", "CartanDatum", "CharTable", "CharValueTable",
    "ConsistencyError", "CoxeterTraceDataset", "CycNum", "DatumMismatch",
    "FamilyDataset", "FiniteGroup", "FourierMatrix", "HeckeElement",
    "InvalidCartan", "InvariantViolation", "IrrepModel", "KeyMismatch",
    "LaurentPoly", "LieGroupSandbox", "MPair", "NonIntegerCharacter",
    "OrderCapExceeded", "PinningError", "RegUnipModel", "RootSystem",
    "SchemaError", "SignSolution", "SizeCapExceeded", "UnsupportedLabel",
    "UnsupportedSpecialization", "WeylElement", "almost_transform",
    "build_irrep_model", "build_root_system", "build_sandbox", "cell_sum",
    "chi_cuspidal_table", "convolution_hecke_check", "coxeter_conjugator",
    "empty_cell_backsolve", "final_value_table", "fourier_matrix",
    "group_from_text", "heckeuch_report", "heckeuch_verify",
    "load_coxeter_traces", "load_family_dataset", "m_set", "pairing",
    "parse_cyc", "parse_laurent", "parse_permutation", "regular_class_model",
    "solve_signs", "supported_labels", "verify_cell_partition",
    "verify_cell_products",
]
