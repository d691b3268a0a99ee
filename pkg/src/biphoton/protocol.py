"""Bell analysis, exhaustive branch enumeration and the measurement oracle.

The simulated protocol joins an input photon pair (photons 1, 2) with an
auxiliary resource and performs Bell measurements on the photon pairs
(1, 5) and (2, 6).  Projecting both pairs onto PsiPlus teleports the
projected input onto the kept photons (3, 4), entangled with the outcome
register.  Other Bell outcomes teleport a Pauli-rotated copy instead; for
the polarization-parity measurement the Z-type rotations commute with the
projectors, so PsiMinus outcomes are recovered by local phase flips on
the kept photons:

    (PsiPlus,  PsiMinus) -> Z on photon 4
    (PsiMinus, PsiPlus ) -> Z on photon 3
    (PsiMinus, PsiMinus) -> Z on photons 3 and 4

PhiPlus/PhiMinus outcomes would need polarization flips, which neither
the linear-optics analyzer can distinguish nor a phase correction can
undo, so they are reported as inconclusive.  ``run_protocol`` enumerates
every Bell outcome combination (and register reading), so the reported
probabilities are exhaustive and must sum to one; ``oracle_report``
computes the target measurement statistics directly from the projectors
and ``compare_reports`` checks the two against each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from biphoton import auxprep
from biphoton.auxprep import KEPT_PAIR
from biphoton.measurement import (
    BASIS_LABELS,
    ProjectorFamily,
    ket_from_vector,
    parity_family,
    two_photon_vector,
)
from biphoton.statevec import (
    DEFAULT_TOL,
    Ket,
    ValidationError,
    apply_one_photon,
    basis_ket,
    norm,
    normalize,
    partial_bra,
    phase_equal,
    superpose,
    tensor,
)

__all__ = [
    "INPUT_PAIR",
    "ZERO_PROBABILITY",
    "BELL_ORDER",
    "MODES",
    "CORRECTIONS",
    "BellOutcome",
    "AnalyzerModel",
    "LINEAR_ANALYZER",
    "IDEAL_ANALYZER",
    "Branch",
    "ProtocolReport",
    "OracleStatistics",
    "Verdict",
    "bell_ket",
    "corrections_for",
    "apply_corrections",
    "run_protocol",
    "oracle_report",
    "compare_reports",
]

INPUT_PAIR = (1, 2)
ANALYZED_PAIRS = ((1, 5), (2, 6))

#: Branches below this probability are reported but carry no state.
ZERO_PROBABILITY = 1e-12

MODES = ("general", "parity5", "parity4")


class BellOutcome(enum.Enum):
    """The four Bell states of a photon pair."""

    PSI_PLUS = "PsiPlus"
    PSI_MINUS = "PsiMinus"
    PHI_PLUS = "PhiPlus"
    PHI_MINUS = "PhiMinus"


BELL_ORDER = (
    BellOutcome.PSI_PLUS,
    BellOutcome.PSI_MINUS,
    BellOutcome.PHI_PLUS,
    BellOutcome.PHI_MINUS,
)

_BELL_COMPONENTS = {
    BellOutcome.PSI_PLUS: (("HV", 1.0), ("VH", 1.0)),
    BellOutcome.PSI_MINUS: (("HV", 1.0), ("VH", -1.0)),
    BellOutcome.PHI_PLUS: (("HH", 1.0), ("VV", 1.0)),
    BellOutcome.PHI_MINUS: (("HH", 1.0), ("VV", -1.0)),
}


def bell_ket(kind: BellOutcome, pair) -> Ket:
    """The Bell state ``kind`` on two distinct photons."""
    amp = 2.0 ** -0.5
    return superpose(
        [
            (sign * amp, basis_ket(pair, labels))
            for labels, sign in _BELL_COMPONENTS[kind]
        ]
    )


@dataclass(frozen=True)
class AnalyzerModel:
    """Which Bell outcomes the analyzer resolves individually."""

    name: str
    distinguishable: frozenset


#: Linear-optics analyzer: only the two Psi states produce distinct
#: coincidence signatures.
LINEAR_ANALYZER = AnalyzerModel(
    "linear", frozenset({BellOutcome.PSI_PLUS, BellOutcome.PSI_MINUS})
)

#: Hypothetical analyzer resolving all four Bell states.
IDEAL_ANALYZER = AnalyzerModel("ideal", frozenset(BELL_ORDER))

_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_GATES = {"Z": _Z}

#: Local corrections mapping each accepted Bell pair onto the
#: (PsiPlus, PsiPlus) reference channel.  Keys are (outcome on photons
#: (1,5), outcome on photons (2,6)); values are (photon, gate) lists.
CORRECTIONS = {
    (BellOutcome.PSI_PLUS, BellOutcome.PSI_PLUS): (),
    (BellOutcome.PSI_PLUS, BellOutcome.PSI_MINUS): ((4, "Z"),),
    (BellOutcome.PSI_MINUS, BellOutcome.PSI_PLUS): ((3, "Z"),),
    (BellOutcome.PSI_MINUS, BellOutcome.PSI_MINUS): ((3, "Z"), (4, "Z")),
}


def corrections_for(pair) -> tuple:
    """Correction list for an accepted Bell pair; error for Phi outcomes."""
    try:
        return CORRECTIONS[tuple(pair)]
    except KeyError:
        names = ", ".join(k.value for k in pair)
        raise ValidationError(
            f"no local phase correction exists for Bell pair ({names})"
        ) from None


def apply_corrections(pair, residual: Ket) -> Ket:
    """Apply the pair's phase corrections to a teleported residual."""
    corrected = residual
    for photon, gate in corrections_for(pair):
        corrected = apply_one_photon(_GATES[gate], photon, corrected)
    return corrected


@dataclass(frozen=True)
class Branch:
    """One exhaustively enumerated measurement outcome."""

    bell15: BellOutcome
    bell26: BellOutcome
    register_result: str | None
    probability: float
    corrections: tuple
    kind: str  # "success" | "correctable" | "inconclusive" | "zero"
    j: int | None = None
    residual: Ket | None = None

    @property
    def is_success(self) -> bool:
        return self.kind in ("success", "correctable")

    @property
    def classification(self) -> str:
        if self.kind == "success":
            return f"success({self.j})"
        if self.kind == "correctable":
            return f"correctable->success({self.j})"
        return self.kind


@dataclass(frozen=True)
class ProtocolReport:
    """Full branch table and probability totals of one protocol run."""

    mode: str
    analyzer: AnalyzerModel
    input_state: Ket
    family: ProjectorFamily
    branches: tuple
    success_probability: float
    conditional_j: tuple
    inconclusive_probability: float


@dataclass(frozen=True)
class OracleStatistics:
    """Measurement statistics computed directly from the projectors.

    ``states[j]`` is the normalized post-measurement state on the kept
    photon pair, or None when the outcome probability (effectively)
    vanishes.
    """

    probabilities: tuple
    states: tuple


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking a protocol run against the oracle."""

    passed: bool
    mismatches: tuple


_PARITY_PROJECTORS = (
    np.diag([1.0, 0.0, 0.0, 1.0]).astype(complex),
    np.diag([0.0, 1.0, 1.0, 0.0]).astype(complex),
)


def _is_parity(family: ProjectorFamily) -> bool:
    return family.n_outcomes == 2 and all(
        np.allclose(family.projectors[j], _PARITY_PROJECTORS[j], atol=1e-10)
        for j in range(2)
    )


def _validate_input(input_state: Ket, tol: float) -> None:
    if input_state.register != INPUT_PAIR:
        raise ValidationError(
            f"input must live on photons {INPUT_PAIR}, got {input_state.register}"
        )
    n = norm(input_state)
    if abs(n - 1.0) > tol:
        raise ValidationError(
            f"input state must be normalized (norm deviates by {abs(n - 1.0):.3g})"
        )


def _register_outcomes(mode: str):
    if mode == "general":
        return [
            (j, auxprep.encode_j_two_photon(j), BASIS_LABELS[j])
            for j in range(4)
        ]
    if mode == "parity5":
        return [
            (0, auxprep.encode_j_one_photon(0), "H"),
            (1, auxprep.encode_j_one_photon(1), "V"),
        ]
    return None  # parity4: no outcome register, implicitly j = 0


def run_protocol(
    input_state: Ket,
    family: ProjectorFamily,
    mode: str = "general",
    analyzer: AnalyzerModel = LINEAR_ANALYZER,
    tol: float = DEFAULT_TOL,
) -> ProtocolReport:
    """Enumerate every Bell/register outcome of one protocol execution.

    Branches appear in a fixed order: the (1,5) Bell outcome is the
    major index and the (2,6) outcome the minor one, each running
    through (PsiPlus, PsiMinus, PhiPlus, PhiMinus); an accepted pair
    then splits into one row per outcome-register reading (H before V).
    Probabilities are exhaustive: over any input they sum to one.
    """
    _validate_input(input_state, tol)
    if mode not in MODES:
        raise ValidationError(f"unknown mode {mode!r}, expected one of {MODES}")
    if mode == "general":
        accepted_pairs = {(BellOutcome.PSI_PLUS, BellOutcome.PSI_PLUS)}
        aux = auxprep.build_general_aux(family)
    else:
        if not _is_parity(family):
            raise ValidationError(
                f"mode {mode!r} requires the parity projector family"
            )
        psi = (BellOutcome.PSI_PLUS, BellOutcome.PSI_MINUS)
        accepted_pairs = {(a, b) for a in psi for b in psi}
        aux = (
            auxprep.build_parity_aux5()
            if mode == "parity5"
            else auxprep.build_parity_aux4()
        )

    outcomes = _register_outcomes(mode)
    total = tensor(input_state, aux.ket)
    branches = []
    for b15 in BELL_ORDER:
        after15 = partial_bra(bell_ket(b15, ANALYZED_PAIRS[0]), total)
        for b26 in BELL_ORDER:
            residual = partial_bra(bell_ket(b26, ANALYZED_PAIRS[1]), after15)
            accepted = (
                (b15, b26) in accepted_pairs
                and b15 in analyzer.distinguishable
                and b26 in analyzer.distinguishable
            )
            if not accepted:
                branches.append(_unaccepted_branch(b15, b26, residual))
                continue
            corrections = corrections_for((b15, b26))
            corrected = apply_corrections((b15, b26), residual)
            kind = "success" if not corrections else "correctable"
            if outcomes is None:
                branches.append(
                    _accepted_branch(b15, b26, None, corrected, corrections, kind, 0)
                )
            else:
                for j, j_ket, labels in outcomes:
                    sub = partial_bra(j_ket, corrected)
                    branches.append(
                        _accepted_branch(
                            b15, b26, labels, sub, corrections, kind, j
                        )
                    )

    success_probability = sum(b.probability for b in branches if b.is_success)
    inconclusive_probability = sum(
        b.probability for b in branches if b.kind == "inconclusive"
    )
    conditional = [0.0] * family.n_outcomes
    if success_probability > ZERO_PROBABILITY:
        for b in branches:
            if b.is_success:
                conditional[b.j] += b.probability
        conditional = [c / success_probability for c in conditional]
    return ProtocolReport(
        mode=mode,
        analyzer=analyzer,
        input_state=input_state,
        family=family,
        branches=tuple(branches),
        success_probability=float(success_probability),
        conditional_j=tuple(conditional),
        inconclusive_probability=float(inconclusive_probability),
    )


def _unaccepted_branch(b15, b26, residual: Ket) -> Branch:
    probability = norm(residual) ** 2
    if probability < ZERO_PROBABILITY:
        return Branch(b15, b26, None, probability, (), "zero")
    return Branch(
        b15, b26, None, probability, (), "inconclusive",
        residual=normalize(residual),
    )


def _accepted_branch(b15, b26, labels, residual, corrections, kind, j) -> Branch:
    probability = norm(residual) ** 2
    if probability < ZERO_PROBABILITY:
        return Branch(b15, b26, labels, probability, corrections, "zero")
    return Branch(
        b15, b26, labels, probability, corrections, kind,
        j=j, residual=normalize(residual),
    )


def oracle_report(
    input_state: Ket, family: ProjectorFamily, tol: float = DEFAULT_TOL
) -> OracleStatistics:
    """Target statistics straight from the projectors, no protocol involved.

    Post-measurement states are placed on the kept photon pair so they
    can be compared directly with teleported residuals.
    """
    _validate_input(input_state, tol)
    vec = two_photon_vector(input_state)
    probabilities = []
    states = []
    for proj in family.projectors:
        projected = proj @ vec
        p = float(np.vdot(projected, projected).real)
        probabilities.append(p)
        if p > ZERO_PROBABILITY:
            states.append(normalize(ket_from_vector(KEPT_PAIR, projected)))
        else:
            states.append(None)
    return OracleStatistics(tuple(probabilities), tuple(states))


def compare_reports(
    report: ProtocolReport, oracle: OracleStatistics, tol: float = DEFAULT_TOL
) -> Verdict:
    """Check a protocol run against the oracle statistics.

    The verdict passes when the success-conditioned outcome distribution
    matches the oracle probabilities and every success branch's residual
    equals the oracle's post-measurement state up to a global phase.  In
    the four-photon filter mode only outcome 0 is realizable, so there
    the conditional distribution degenerates and the total success
    probability is pinned to half the oracle's even-parity weight.
    """
    mismatches = []
    if report.mode == "parity4":
        expected_total = 0.5 * oracle.probabilities[0]
        if abs(report.success_probability - expected_total) > tol:
            mismatches.append(
                "success probability "
                f"{report.success_probability:.12g} != "
                f"(1/2) * even-parity weight {expected_total:.12g}"
            )
        expected_conditional = [0.0] * len(oracle.probabilities)
        if report.success_probability > tol:
            expected_conditional[0] = 1.0
        else:
            expected_conditional = list(report.conditional_j)  # vacuous
    else:
        expected_conditional = list(oracle.probabilities)

    for j, expected in enumerate(expected_conditional):
        got = report.conditional_j[j]
        if abs(got - expected) > tol:
            mismatches.append(
                f"conditional probability of outcome {j}: "
                f"report {got:.12g} vs oracle {expected:.12g}"
            )

    for index, branch in enumerate(report.branches):
        if not branch.is_success:
            continue
        target = oracle.states[branch.j]
        if target is None:
            mismatches.append(
                f"branch {index} succeeds with outcome {branch.j}, "
                "which the oracle rules out"
            )
            continue
        if not phase_equal(branch.residual, target, tol=tol):
            mismatches.append(
                f"branch {index} ({branch.bell15.value}, {branch.bell26.value}"
                f", outcome {branch.j}): residual differs from the projected "
                "input beyond global phase"
            )
    return Verdict(not mismatches, tuple(mismatches))
