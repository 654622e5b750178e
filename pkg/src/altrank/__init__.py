"""Exact bounds for codes in the alternating forms graph Alt_n(F_q)."""

from .bounds import BoundReport, BoundValue, NotApplicable, full_report
from .gf import FieldElement, FieldSpec, field, field_of_order
from .spectra import intersection_array, spectrum

__version__ = "0.1.0"
