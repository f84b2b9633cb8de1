"""Stochastic model of the probes-plus-cantilever logic device.

Two electrostatic probes can bend an elastic cantilever; the tip's deflection
angle from the vertical encodes the device output. Angles are dimensionless,
with the decision boundary between the one-probe and two-probe regimes scaled
to 1. The equilibrium angle depends only on which probes are powered, never
on the initial angle; thermal noise spreads the measured tip position into a
Gaussian around that equilibrium.

All randomness flows through an explicit numpy Generator, so identical seeds
and configs reproduce sample streams bit-exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

DEFAULT_BIN_WIDTH = 0.02

# Samples are kept within this many standard deviations of the equilibrium
# angle (and above 0) by resampling, so every histogram has bounded support.
SUPPORT_SIGMAS = 6.0


class Probe(str, Enum):
    D = "D"  # off, no voltage applied
    A = "A"  # on, voltage applied


@dataclass(frozen=True)
class ProbeState:
    p1: Probe
    p2: Probe

    @classmethod
    def from_bits(cls, text: str) -> "ProbeState":
        """Parse "01"-style input: 0 = off (D), 1 = on (A); position 0 = probe 1."""
        if len(text) != 2 or any(c not in "01" for c in text):
            raise ValueError(f"probe state must be two bits, got {text!r}")
        return cls(Probe.A if text[0] == "1" else Probe.D,
                   Probe.A if text[1] == "1" else Probe.D)

    @property
    def bits(self) -> tuple[int, int]:
        return (int(self.p1 is Probe.A), int(self.p2 is Probe.A))

    def __str__(self) -> str:
        return self.p1.value + self.p2.value


DD = ProbeState(Probe.D, Probe.D)
DA = ProbeState(Probe.D, Probe.A)
AD = ProbeState(Probe.A, Probe.D)
AA = ProbeState(Probe.A, Probe.A)

#: All probe states in encoding order of their bits (00, 01, 10, 11).
PROBE_STATES = (DD, DA, AD, AA)

# Garbage-pair symbols: the off/off outcome, then one marker per powered
# combination (01, 10, 11).
_SYMBOLS = {DD: "*", DA: "△", AD: "○", AA: "□"}


def encode_symbolic(ps: ProbeState) -> str:
    """Symbol for the probe pair carried along with the output bit."""
    return _SYMBOLS[ps]


@dataclass(frozen=True)
class DeviceConfig:
    """Equilibrium angles and noise width, in boundary-normalized units.

    ``alpha_hat1`` and ``alpha_tilde1`` are the one-probe equilibria for
    inputs DA and AD. With ``distinguishable`` unset (the default) the two
    are treated as experimentally identical and both collapse to their
    average ``alpha1``; set it when the apparatus can resolve them, which
    requires the strict ordering 0 < alpha_hat1 < alpha_tilde1 < 1 < alpha2.
    """

    alpha_hat1: float = 0.78
    alpha_tilde1: float = 0.93
    alpha2: float = 1.12
    sigma: float = 0.03
    distinguishable: bool = False

    def __post_init__(self) -> None:
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if min(self.alpha_hat1, self.alpha_tilde1) <= 0:
            raise ValueError("one-probe angles must be positive")
        if self.distinguishable:
            if not self.alpha_hat1 < self.alpha_tilde1 < 1 < self.alpha2:
                raise ValueError(
                    "distinguishable config needs 0 < alpha_hat1 < alpha_tilde1 < 1 < alpha2"
                )
        elif not self.alpha1 < 1 < self.alpha2:
            raise ValueError("config needs 0 < alpha1 < 1 < alpha2")

    @property
    def alpha1(self) -> float:
        """The common one-probe angle used when DA and AD are not resolved."""
        return 0.5 * (self.alpha_hat1 + self.alpha_tilde1)


@dataclass(frozen=True)
class AngleSample:
    """One device shot: the probe input, the initial angle, the measured output."""

    probes: ProbeState
    alpha_i: float
    output_angle: float

    def __post_init__(self) -> None:
        if self.output_angle < 0:
            raise ValueError("angles are measured from the vertical, must be >= 0")


def equilibrium_angle(ps: ProbeState, cfg: DeviceConfig | None = None) -> float:
    """Noise-free rest angle for a probe configuration.

    Independent of the initial angle: an unpowered device relaxes back to the
    vertical, a powered one settles at the angle its voltages dictate.
    """
    cfg = cfg or DeviceConfig()
    if ps == DD:
        return 0.0
    if ps == AA:
        return cfg.alpha2
    if not cfg.distinguishable:
        return cfg.alpha1
    return cfg.alpha_hat1 if ps == DA else cfg.alpha_tilde1


def sample_many(
    ps: ProbeState,
    n: int,
    cfg: DeviceConfig,
    rng: np.random.Generator,
    alpha_i: float = 0.0,
) -> np.ndarray:
    """Draw ``n`` output angles for one probe input.

    Values come from Normal(equilibrium, sigma), resampled (never clamped)
    until they land in [max(0, mean - 6 sigma), mean + 6 sigma]; clamping
    would pile a spurious point mass at 0 into the DD histograms.
    """
    if alpha_i < 0:
        raise ValueError("initial angle must be >= 0")
    mean = equilibrium_angle(ps, cfg)
    lo = max(0.0, mean - SUPPORT_SIGMAS * cfg.sigma)
    hi = mean + SUPPORT_SIGMAS * cfg.sigma
    out = np.empty(n)
    filled = 0
    while filled < n:
        draw = rng.normal(mean, cfg.sigma, size=n - filled)
        keep = draw[(draw >= lo) & (draw <= hi)]
        out[filled:filled + keep.size] = keep
        filled += keep.size
    return out


def sample_output(
    ps: ProbeState,
    alpha_i: float,
    cfg: DeviceConfig,
    rng: np.random.Generator,
) -> AngleSample:
    """One noisy device shot."""
    angle = float(sample_many(ps, 1, cfg, rng, alpha_i)[0])
    return AngleSample(ps, alpha_i, angle)


@dataclass(frozen=True)
class Histogram:
    """Binned output angles; edges sit on integer multiples of the bin width."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    mean: float
    stddev: float

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def mode_bin(self) -> tuple[float, float]:
        """(low, high) of the fullest bin; ties resolve to the lowest bin."""
        best = max(range(len(self.counts)), key=lambda i: (self.counts[i], -i))
        return (self.bin_edges[best], self.bin_edges[best + 1])


def run_histogram(
    ps: ProbeState,
    n: int,
    cfg: DeviceConfig | None = None,
    seed: int = 0,
    bin_width: float = DEFAULT_BIN_WIDTH,
) -> Histogram:
    """Histogram of ``n`` seeded device shots with the tip initially vertical."""
    if n < 1:
        raise ValueError("need at least one trial")
    if bin_width <= 0:
        raise ValueError("bin width must be positive")
    cfg = cfg or DeviceConfig()
    samples = sample_many(ps, n, cfg, np.random.default_rng(seed))
    k_lo = int(np.floor(samples.min() / bin_width))
    k_hi = int(np.floor(samples.max() / bin_width)) + 1
    edges = np.arange(k_lo, k_hi + 1) * bin_width
    counts, _ = np.histogram(samples, bins=edges)
    return Histogram(
        bin_edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        mean=float(samples.mean()),
        stddev=float(samples.std()),
    )
