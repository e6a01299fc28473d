"""Braid-closure knot invariants and Bennequin-type defect computations."""

from .braid import (
    BraidWord,
    ParseError,
    closure_components,
    closure_permutation,
    conjugate,
    cyclic_shift,
    exponent_sum,
    family_type1_word,
    family_word,
    format_braid,
    free_reduce,
    mirror,
    parse_braid,
    self_linking,
)
from .garside import (
    ConjugacyCertificate,
    GarsideNormalForm,
    SearchBudgetExceeded,
    conjugacy_decide,
    normal_form,
    verify_certificate,
    words_equal,
)
from .quadform import (
    CongruenceDiagnosis,
    congruence_diagonalize,
    det_exact,
    gauss_pivots,
    knot_signature,
    nullity,
    signature,
)
from .report import InvariantReport, defects, family_report, quasipositive_verdict
from .seifert import (
    BandPresentation,
    SeifertData,
    band_presentation,
    family_four_ball_surface,
    seifert_genus_upper,
    seifert_matrix,
    twist_chain_matrix,
)
from .tau import TauConstraintGraph, TauInterval, family_tau, propagate, torus_knot_tau
from .threebraid import (
    Type1Form,
    psi_nonzero,
    s_invariant_type1,
    theta_and_contact_flags,
    type1_recognize,
)

__version__ = "0.1.0"

__all__ = [
    "BandPresentation",
    "BraidWord",
    "CongruenceDiagnosis",
    "ConjugacyCertificate",
    "GarsideNormalForm",
    "InvariantReport",
    "ParseError",
    "SearchBudgetExceeded",
    "SeifertData",
    "TauConstraintGraph",
    "TauInterval",
    "Type1Form",
    "band_presentation",
    "closure_components",
    "closure_permutation",
    "congruence_diagonalize",
    "conjugacy_decide",
    "conjugate",
    "cyclic_shift",
    "defects",
    "det_exact",
    "exponent_sum",
    "family_four_ball_surface",
    "family_report",
    "family_tau",
    "family_type1_word",
    "family_word",
    "format_braid",
    "free_reduce",
    "gauss_pivots",
    "knot_signature",
    "mirror",
    "normal_form",
    "nullity",
    "parse_braid",
    "propagate",
    "psi_nonzero",
    "quasipositive_verdict",
    "s_invariant_type1",
    "seifert_genus_upper",
    "seifert_matrix",
    "self_linking",
    "signature",
    "theta_and_contact_flags",
    "torus_knot_tau",
    "twist_chain_matrix",
    "type1_recognize",
    "verify_certificate",
    "words_equal",
]
