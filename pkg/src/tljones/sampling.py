"""Simulated quantum execution phase: Hadamard-test sampling of the trace.

For a unitary U and a basis walk p, one ancilla-assisted circuit run outputs
a bit whose bias encodes one component of the bracket a = <p|U|p>:

    real test:      Prob(bit 0) = 1/2 + Re(a)/2
    imaginary test: Prob(bit 0) = 1/2 - Im(a)/2

and the frequency estimators (#0 - #1)/shots and (#1 - #0)/shots converge to
Re(a) and Im(a). Sampling happens at the amplitude level: the bracket is
computed classically from the gate's diagonal and bits are drawn from the
resulting Bernoulli laws, which is statistically indistinguishable from
evolving a statevector per shot. hadamard_circuit_check validates the
circuit identity itself once, by direct statevector simulation of
(H on ancilla) -> controlled-U -> (H on ancilla), with an extra ancilla
phase gate diag(1, i) for the imaginary variant.

Bit streams are counter-based (Philox keyed by a SHA-256 hash of the master
seed, the sector, the walk index, and the test kind), so results are
reproducible and independent of loop scheduling or thread count.

Degenerate-channel short circuit: when one channel's Bernoulli law is
deterministic (probability exactly 0 or 1), that component of the bracket is
+-1, and unitarity forces the other component to 0; the estimator then
returns the forced exact bracket without consuming randomness. Identity
gates therefore sample with exactly zero error, as the acceptance contract
requires, while every nondegenerate bracket uses the plain frequency
estimator.

The full estimation loop follows the execution-phase pseudocode: for every
sector m, for every walk p in the sector, accumulate per-walk bracket
estimates, weigh the sector sums by lambda_m, and (unlike the raw loop
output, which is exposed as raw_trace) divide by the normalization N and
apply the writhe prefactor and d^(n-1) so the output estimates the Jones
value itself.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math

import numpy as np

from .braids import BraidWord, writhe
from .evaluation import (
    EvaluationResult,
    build_gates,
    scale_trace,
    weighted_trace,
    writhe_prefactor_numeric,
)
from .pathmodel import SectorOperator, enumerate_paths


class SamplerError(ValueError):
    """Invalid sampler configuration or a non-unitary operator."""


def iterations_for(epsilon: float, delta: float) -> int:
    """Two-sided Hoeffding sample count: ceil(ln(2/delta) / (2 epsilon^2))."""
    if not 0.0 < epsilon < 1.0:
        raise SamplerError(f"epsilon must be in (0, 1), got {epsilon}")
    if not 0.0 < delta < 1.0:
        raise SamplerError(f"delta must be in (0, 1), got {delta}")
    return max(1, math.ceil(math.log(2.0 / delta) / (2.0 * epsilon**2)))


@dataclasses.dataclass(frozen=True)
class SamplerConfig:
    """Accuracy target, optional explicit shot count, and master seed."""

    epsilon: float = 0.1
    delta: float = 0.05
    iterations: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.iterations is None:
            iterations_for(self.epsilon, self.delta)  # validates the ranges
        elif self.iterations < 1:
            raise SamplerError(f"iterations must be >= 1, got {self.iterations}")

    def resolved_iterations(self) -> int:
        if self.iterations is not None:
            return self.iterations
        return iterations_for(self.epsilon, self.delta)


def bit_stream(seed: int, sector: int, path_index: int, kind: str) -> np.random.Generator:
    """Counter-based generator for one (sector, walk, test-kind) stream."""
    tag = f"{seed & 0xFFFFFFFFFFFFFFFF}:{sector}:{path_index}:{kind}"
    digest = hashlib.sha256(tag.encode("ascii")).digest()
    key = int.from_bytes(digest[:16], "big")
    return np.random.Generator(np.random.Philox(key=key))


def _checked_probability(p: float) -> float:
    if p < -1e-9 or p > 1.0 + 1e-9:
        raise SamplerError(f"bit probability {p} outside [0, 1]; operator is not unitary")
    return min(1.0, max(0.0, p))


def hadamard_test_re(u: SectorOperator, p: int, rng: np.random.Generator) -> int:
    """One bit of the real test: 0 with probability 1/2 + Re<p|U|p>/2."""
    a = complex(u.matrix[p, p])
    p0 = _checked_probability(0.5 + 0.5 * a.real)
    return 0 if rng.random() < p0 else 1


def hadamard_test_im(u: SectorOperator, p: int, rng: np.random.Generator) -> int:
    """One bit of the imaginary test: 0 with probability 1/2 - Im<p|U|p>/2."""
    a = complex(u.matrix[p, p])
    p0 = _checked_probability(0.5 - 0.5 * a.imag)
    return 0 if rng.random() < p0 else 1


def forced_bracket(a: complex) -> complex | None:
    """The exact bracket when either channel's bit law is deterministic.

    Exact comparisons are deliberate: only a bit-exact degenerate probability
    (0.0 or 1.0) short-circuits, and |a| <= 1 for a unitary diagonal entry
    then forces the orthogonal component to vanish.
    """
    p0_re = 0.5 + 0.5 * a.real
    if p0_re == 1.0:
        return 1 + 0j
    if p0_re == 0.0:
        return -1 + 0j
    p0_im = 0.5 - 0.5 * a.imag
    if p0_im == 0.0:
        return 1j
    if p0_im == 1.0:
        return -1j
    return None


def _frequency(bits_are_one: np.ndarray) -> float:
    """(#0 - #1) / shots for a boolean array marking the 1-bits."""
    shots = bits_are_one.size
    ones = int(np.count_nonzero(bits_are_one))
    return (shots - 2 * ones) / shots


def estimate_bracket(
    u: SectorOperator, p: int, iterations: int, rng: np.random.Generator
) -> complex:
    """Frequency estimate of <p|U|p>: real bits first, then imaginary bits.

    Degenerate channels short-circuit to the exact forced bracket; otherwise
    both channels draw `iterations` bits each from the given stream.
    """
    if iterations < 1:
        raise SamplerError(f"iterations must be >= 1, got {iterations}")
    a = complex(u.matrix[p, p])
    forced = forced_bracket(a)
    if forced is not None:
        return forced
    p0_re = _checked_probability(0.5 + 0.5 * a.real)
    p0_im = _checked_probability(0.5 - 0.5 * a.imag)
    re_est = _frequency(rng.random(iterations) >= p0_re)
    im_est = -_frequency(rng.random(iterations) >= p0_im)
    return complex(re_est, im_est)


def sample_jones_value(word: BraidWord, k: int, config: SamplerConfig) -> EvaluationResult:
    """Estimate the Jones value of a braid closure from simulated circuit bits.

    Triple loop over sectors, walks, and shots, with one independent bit
    stream per (sector, walk, test kind). raw_trace is the literal loop
    output sum_m lambda_m * sector sum; the returned value additionally
    divides by N and applies the writhe prefactor and d^(n-1), matching the
    exact evaluator's arithmetic exactly so error-free runs agree bitwise.
    """
    basis = enumerate_paths(word.strands, k)
    params = basis.params
    gates = build_gates(basis, word)
    iterations = config.resolved_iterations()
    lam = params.lam

    raw = 0j
    for m in basis.nonempty_sectors():
        gate = gates[m]
        sector_sum = 0j
        for path_index in range(len(basis.sectors[m])):
            a = complex(gate.matrix[path_index, path_index])
            forced = forced_bracket(a)
            if forced is not None:
                sector_sum += forced
                continue
            p0_re = _checked_probability(0.5 + 0.5 * a.real)
            p0_im = _checked_probability(0.5 - 0.5 * a.imag)
            re_stream = bit_stream(config.seed, m, path_index, "re")
            im_stream = bit_stream(config.seed, m, path_index, "im")
            re_est = _frequency(re_stream.random(iterations) >= p0_re)
            im_est = -_frequency(im_stream.random(iterations) >= p0_im)
            sector_sum += complex(re_est, im_est)
        raw += lam[m] * sector_sum

    wtrace_est = raw / basis.normalization()
    w = writhe(word)
    exact_wtrace = weighted_trace(basis, gates)
    exact_value = scale_trace(params, w, exact_wtrace)
    estimate = scale_trace(params, w, wtrace_est)
    return EvaluationResult(
        method="sampled",
        k=k,
        n=word.strands,
        word=word.signed_indices(),
        writhe=w,
        a_value=params.a_value,
        d=params.d,
        normalization=basis.normalization(),
        weighted_trace=wtrace_est,
        prefactor=writhe_prefactor_numeric(params, w),
        value=estimate,
        iterations=iterations,
        epsilon=config.epsilon,
        delta=config.delta,
        seed=config.seed,
        exact_value=exact_value,
        abs_error=abs(estimate - exact_value),
        raw_trace=raw,
    )


@dataclasses.dataclass(frozen=True)
class CircuitCheckReport:
    """Statevector validation of the Hadamard-test identity for one (U, p)."""

    dim: int
    path_index: int
    bracket: complex
    re_prob0_circuit: float
    re_prob0_formula: float
    im_prob0_circuit: float
    im_prob0_formula: float

    @property
    def max_deviation(self) -> float:
        return max(
            abs(self.re_prob0_circuit - self.re_prob0_formula),
            abs(self.im_prob0_circuit - self.im_prob0_formula),
        )

    def passed(self, tol: float = 1e-12) -> bool:
        return self.max_deviation <= tol


def hadamard_circuit_check(u: SectorOperator, p: int, max_dim: int = 64) -> CircuitCheckReport:
    """Simulate the full ancilla circuit and compare against the bit laws.

    Statevector layout |ancilla> tensor |walk>; the imaginary variant inserts
    the ancilla phase gate diag(1, i) after the first Hadamard.
    """
    dim = u.dim
    if dim > max_dim:
        raise SamplerError(f"dimension {dim} exceeds circuit-check limit {max_dim}")
    if not 0 <= p < dim:
        raise SamplerError(f"basis index {p} out of range for dimension {dim}")
    a = complex(u.matrix[p, p])
    inv_sqrt2 = 1.0 / math.sqrt(2.0)

    def run(phase_gate: bool) -> float:
        anc0 = np.zeros(dim, dtype=complex)
        anc1 = np.zeros(dim, dtype=complex)
        anc0[p] = 1.0
        anc0, anc1 = inv_sqrt2 * (anc0 + anc1), inv_sqrt2 * (anc0 - anc1)  # H on ancilla
        if phase_gate:
            anc1 = 1j * anc1
        anc1 = u.matrix @ anc1  # controlled-U
        anc0, anc1 = inv_sqrt2 * (anc0 + anc1), inv_sqrt2 * (anc0 - anc1)  # H on ancilla
        return float(np.vdot(anc0, anc0).real)

    return CircuitCheckReport(
        dim=dim,
        path_index=p,
        bracket=a,
        re_prob0_circuit=run(phase_gate=False),
        re_prob0_formula=0.5 + 0.5 * a.real,
        im_prob0_circuit=run(phase_gate=True),
        im_prob0_formula=0.5 - 0.5 * a.imag,
    )
