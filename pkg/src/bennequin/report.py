"""Aggregate invariant reports and Bennequin-type defect computations.

For a knot K with maximal self-linking number SL, the three defects are

    delta_4   = (2*g4(K) - 1 - SL) / 2     (slice-Bennequin slack)
    delta_s   = (s(K)  - 1 - SL) / 2       (s-Bennequin slack)
    delta_tau = (2*tau(K) - 1 - SL) / 2    (tau-Bennequin slack)

all nonnegative, and all zero for quasipositive knots, so a positive
defect certifies nonquasipositivity.  :func:`family_report` runs the whole
pipeline on the built-in family, whose closures have delta_4 = 2n while
delta_s and delta_tau stay 0, and cross-checks every identity before
returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import quadform
from .alexander import (
    LaurentPoly,
    alexander_from_seifert,
    burau_alexander,
)
from .braid import (
    BraidWord,
    closure_components,
    exponent_sum,
    family_word,
    format_braid,
    self_linking,
)
from .garside import SearchBudgetExceeded
from .seifert import (
    BandPresentation,
    family_four_ball_surface,
    seifert_matrix,
    twist_chain_matrix,
)
from .tau import TauInterval, family_tau
from .threebraid import psi_nonzero, s_invariant_type1, theta_and_contact_flags

NOT_QUASIPOSITIVE = "not_quasipositive"
UNKNOWN = "unknown"

# Knot-table names of the first family closures, recorded but not verified.
FAMILY_TABLE_NAMES = {1: "10_125", 2: "12n235"}


@dataclass(frozen=True)
class MaxSelfLinking:
    """SL value with an explicit flag for the minimal-index assumption.

    The diagram value -strands + writhe always bounds SL from below; it
    equals SL when the word realizes the minimal braid index of its
    closure (by the generalized Jones conjecture), which the caller must
    assert.
    """

    value: int
    assumes_minimal_index: bool


@dataclass(frozen=True)
class G4Bounds:
    lower: int
    upper: int


@dataclass(frozen=True)
class SValue:
    value: int
    method: str


@dataclass(frozen=True)
class Defects:
    delta4: Fraction | None
    delta_s: Fraction | None
    delta_tau: Fraction | None


@dataclass(frozen=True)
class Detectors:
    psi_nonzero: bool
    right_veering: bool
    theta_nonzero: bool
    contact_nonzero: bool


@dataclass(frozen=True)
class InvariantReport:
    name: str
    word: str
    strands: int
    exponent_sum: int
    writhe: int
    self_linking: int
    max_self_linking: MaxSelfLinking
    signature: int
    alexander: LaurentPoly
    determinant: int
    g3_upper: int
    g4: G4Bounds
    s: SValue | None
    tau: TauInterval
    defects: Defects
    detectors: Detectors
    quasipositive_verdict: str


def max_self_linking(w: BraidWord, minimal_index_assumed: bool) -> MaxSelfLinking:
    """Self-linking of the diagram, flagged by whether it is claimed maximal."""
    return MaxSelfLinking(self_linking(w), minimal_index_assumed)


def g4_bounds(
    sigma: int,
    surface: BandPresentation | None = None,
    g3_upper: int | None = None,
) -> G4Bounds:
    """Four-ball genus bounds: |signature|/2 below, a surface genus above.

    The caller vouches that the surface (or the fallback Seifert genus
    bound) belongs to the same knot as the signature.
    """
    lower = math.ceil(abs(sigma) / 2)
    if surface is not None:
        upper = surface.genus
    elif g3_upper is not None:
        upper = g3_upper
    else:
        raise ValueError("need a surface or a Seifert genus fallback")
    if upper < lower:
        raise ValueError(
            f"inconsistent genus bounds: lower {lower} exceeds upper {upper}"
        )
    return G4Bounds(lower, upper)


def defects(
    sl_max: int,
    g4_exact: int | None = None,
    s: int | None = None,
    tau_exact: int | None = None,
) -> Defects:
    """Defects of the three Bennequin-type inequalities, where computable.

    Each defect needs its ingredient exactly; a negative result signals an
    upstream bug or a false minimal-index assumption and raises.
    """
    values: dict[str, Fraction | None] = {
        "delta4": None,
        "delta_s": None,
        "delta_tau": None,
    }
    if g4_exact is not None:
        values["delta4"] = Fraction(2 * g4_exact - 1 - sl_max, 2)
    if s is not None:
        values["delta_s"] = Fraction(s - 1 - sl_max, 2)
    if tau_exact is not None:
        values["delta_tau"] = Fraction(2 * tau_exact - 1 - sl_max, 2)
    for name, value in values.items():
        if value is not None and value < 0:
            raise ValueError(
                f"negative defect {name} = {value}: upstream invariants are"
                " inconsistent or the minimal-index assumption is false"
            )
    return Defects(values["delta4"], values["delta_s"], values["delta_tau"])


def quasipositive_verdict(d: Defects) -> str:
    """A positive defect rules quasipositivity out; nothing certifies it."""
    for value in (d.delta4, d.delta_s, d.delta_tau):
        if value is not None and value > 0:
            return NOT_QUASIPOSITIVE
    return UNKNOWN


def _check(condition: bool, identity: str) -> None:
    if not condition:
        raise RuntimeError(f"family report identity violated: {identity}")


def family_report(n: int) -> InvariantReport:
    """Full invariant report of the n-th family knot.

    Every closed-form identity the family satisfies is asserted before the
    report is returned, including the cross-check of the algorithmic
    Seifert signature against the twist-chain matrix.
    """
    if n < 1:
        raise ValueError("family index must be >= 1")
    w = family_word(n)
    e = exponent_sum(w)
    sl = self_linking(w)
    _check(closure_components(w) == 1, "family closure is a knot")
    _check(sl == -2 * n - 1, "self-linking = -2n-1")

    data = seifert_matrix(w)
    v = data.matrix
    size = len(v)
    sym = [[v[i][j] + v[j][i] for j in range(size)] for i in range(size)]
    sigma = quadform.signature(sym)
    _check(sigma == 2 * n, "signature = 2n")
    _check(
        quadform.signature(twist_chain_matrix(2 * n - 1)) == sigma,
        "twist-chain matrix signature agrees with the algorithmic surface",
    )

    alex = burau_alexander(w)
    _check(
        alexander_from_seifert([list(row) for row in v]) == alex,
        "Seifert and Burau routes give one Alexander polynomial",
    )
    determinant = abs(int(alex.eval_at(-1)))

    g3_upper = data.genus
    g4 = g4_bounds(sigma, family_four_ball_surface(n))
    _check(g4 == G4Bounds(n, n), "four-ball genus = n")

    s = s_invariant_type1(w)
    _check(s == -2 * n, "s = -2n")
    tau_value = family_tau(n)
    _check(tau_value == -n, "tau = -n")

    sl_max = max_self_linking(w, minimal_index_assumed=True)
    defect_values = defects(
        sl_max.value, g4_exact=g4.upper, s=s, tau_exact=tau_value
    )
    _check(
        defect_values
        == Defects(Fraction(2 * n), Fraction(0), Fraction(0)),
        "defects = (2n, 0, 0)",
    )
    _check(
        sl_max.value <= s - 1 <= 2 * g4.upper - 1 <= 2 * g3_upper - 1,
        "self-linking chain",
    )

    flags = theta_and_contact_flags(w, s)
    detector_record = Detectors(
        psi_nonzero=psi_nonzero(w, s),
        right_veering=flags.right_veering,
        theta_nonzero=flags.theta_nonzero,
        contact_nonzero=flags.contact_nonzero,
    )
    _check(
        all(
            (
                detector_record.psi_nonzero,
                detector_record.right_veering,
                detector_record.theta_nonzero,
                detector_record.contact_nonzero,
            )
        ),
        "transverse detectors fire",
    )

    name = f"K{n}"
    if n in FAMILY_TABLE_NAMES:
        name = f"K{n} ({FAMILY_TABLE_NAMES[n]})"
    return InvariantReport(
        name=name,
        word=format_braid(w),
        strands=w.strands,
        exponent_sum=e,
        writhe=e,
        self_linking=sl,
        max_self_linking=sl_max,
        signature=sigma,
        alexander=alex,
        determinant=determinant,
        g3_upper=g3_upper,
        g4=g4,
        s=SValue(s, "type1-writhe"),
        tau=TauInterval(tau_value, tau_value),
        defects=defect_values,
        detectors=detector_record,
        quasipositive_verdict=quasipositive_verdict(defect_values),
    )


def _fraction_to_json(value: Fraction | None):
    if value is None:
        return None
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _fraction_from_json(value) -> Fraction | None:
    if value is None:
        return None
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def report_to_dict(report: InvariantReport) -> dict:
    """JSON-ready dictionary mirroring the report fields."""
    return {
        "name": report.name,
        "word": report.word,
        "strands": report.strands,
        "exponent_sum": report.exponent_sum,
        "writhe": report.writhe,
        "self_linking": report.self_linking,
        "max_self_linking": {
            "value": report.max_self_linking.value,
            "assumes_minimal_index": report.max_self_linking.assumes_minimal_index,
        },
        "signature": report.signature,
        "alexander": {str(e): c for e, c in report.alexander.coeffs},
        "determinant": report.determinant,
        "g3_upper": report.g3_upper,
        "g4": {"lower": report.g4.lower, "upper": report.g4.upper},
        "s": None
        if report.s is None
        else {"value": report.s.value, "method": report.s.method},
        "tau": {"lower": report.tau.lower, "upper": report.tau.upper},
        "defects": {
            "delta4": _fraction_to_json(report.defects.delta4),
            "delta_s": _fraction_to_json(report.defects.delta_s),
            "delta_tau": _fraction_to_json(report.defects.delta_tau),
        },
        "detectors": {
            "psi_nonzero": report.detectors.psi_nonzero,
            "right_veering": report.detectors.right_veering,
            "theta_nonzero": report.detectors.theta_nonzero,
            "contact_nonzero": report.detectors.contact_nonzero,
        },
        "quasipositive_verdict": report.quasipositive_verdict,
    }


def report_from_dict(data: dict) -> InvariantReport:
    """Inverse of :func:`report_to_dict`."""
    alex = LaurentPoly(
        tuple(sorted((int(e), int(c)) for e, c in data["alexander"].items()))
    )
    s_data = data["s"]
    detectors = data["detectors"]
    return InvariantReport(
        name=data["name"],
        word=data["word"],
        strands=data["strands"],
        exponent_sum=data["exponent_sum"],
        writhe=data["writhe"],
        self_linking=data["self_linking"],
        max_self_linking=MaxSelfLinking(
            data["max_self_linking"]["value"],
            data["max_self_linking"]["assumes_minimal_index"],
        ),
        signature=data["signature"],
        alexander=alex,
        determinant=data["determinant"],
        g3_upper=data["g3_upper"],
        g4=G4Bounds(data["g4"]["lower"], data["g4"]["upper"]),
        s=None if s_data is None else SValue(s_data["value"], s_data["method"]),
        tau=TauInterval(data["tau"]["lower"], data["tau"]["upper"]),
        defects=Defects(
            _fraction_from_json(data["defects"]["delta4"]),
            _fraction_from_json(data["defects"]["delta_s"]),
            _fraction_from_json(data["defects"]["delta_tau"]),
        ),
        detectors=Detectors(
            detectors["psi_nonzero"],
            detectors["right_veering"],
            detectors["theta_nonzero"],
            detectors["contact_nonzero"],
        ),
        quasipositive_verdict=data["quasipositive_verdict"],
    )


CSV_HEADER = (
    "name,n,SL,sigma,g4_lower,g4_upper,s,tau,delta4,delta_s,delta_tau,verdict"
)


def report_csv_row(report: InvariantReport, n: int | None = None) -> str:
    """One summary line matching :data:`CSV_HEADER`."""

    def frac(value: Fraction | None) -> str:
        json_value = _fraction_to_json(value)
        return "" if json_value is None else str(json_value)

    tau = report.tau
    if tau.exact:
        tau_text = str(tau.lower)
    else:
        lo = "-inf" if tau.lower is None else str(tau.lower)
        hi = "+inf" if tau.upper is None else str(tau.upper)
        tau_text = f"{lo}..{hi}"
    name = report.name.replace(",", " ")
    fields = [
        name,
        "" if n is None else str(n),
        str(report.max_self_linking.value),
        str(report.signature),
        str(report.g4.lower),
        str(report.g4.upper),
        "" if report.s is None else str(report.s.value),
        tau_text,
        frac(report.defects.delta4),
        frac(report.defects.delta_s),
        frac(report.defects.delta_tau),
        report.quasipositive_verdict,
    ]
    return ",".join(fields)


def word_report(
    w: BraidWord,
    assume_minimal_index: bool = False,
    name: str = "",
    candidate_cap: int = 10**5,
    node_cap: int = 10**6,
) -> InvariantReport:
    """Best-effort report for an arbitrary knot-closure braid word.

    Exact s and tau are only available through the combinatorial rules
    this package implements; outside their reach the fields stay None or
    unbounded and the corresponding defects are omitted.  Defects need SL,
    so they are only computed when the caller asserts the minimal braid
    index (or the diagram value is provably maximal for another reason).
    """
    if closure_components(w) != 1:
        raise ValueError("closure has more than one component")
    e = exponent_sum(w)
    data = seifert_matrix(w)
    v = data.matrix
    size = len(v)
    sym = [[v[i][j] + v[j][i] for j in range(size)] for i in range(size)]
    sigma = quadform.signature(sym)
    alex = burau_alexander(w)
    determinant = abs(int(alex.eval_at(-1)))
    g3_upper = data.genus
    g4 = g4_bounds(sigma, g3_upper=g3_upper)

    s_value: SValue | None = None
    if w.strands == 3:
        try:
            s = s_invariant_type1(w, candidate_cap=candidate_cap, node_cap=node_cap)
        except SearchBudgetExceeded:
            s = None
        if s is not None:
            s_value = SValue(s, "type1-writhe")

    sl_max = max_self_linking(w, assume_minimal_index)
    defect_values = defects(
        sl_max.value,
        g4_exact=g4.upper if (assume_minimal_index and g4.lower == g4.upper) else None,
        s=s_value.value if (assume_minimal_index and s_value) else None,
        tau_exact=None,
    )
    if s_value:
        flags = theta_and_contact_flags(w, s_value.value)
        detector_record = Detectors(
            psi_nonzero=psi_nonzero(w, s_value.value),
            right_veering=flags.right_veering,
            theta_nonzero=flags.theta_nonzero,
            contact_nonzero=flags.contact_nonzero,
        )
    else:
        detector_record = Detectors(False, False, False, False)
    return InvariantReport(
        name=name or format_braid(w),
        word=format_braid(w),
        strands=w.strands,
        exponent_sum=e,
        writhe=e,
        self_linking=self_linking(w),
        max_self_linking=sl_max,
        signature=sigma,
        alexander=alex,
        determinant=determinant,
        g3_upper=g3_upper,
        g4=g4,
        s=s_value,
        tau=TauInterval(None, None),
        defects=defect_values,
        detectors=detector_record,
        quasipositive_verdict=quasipositive_verdict(defect_values),
    )
