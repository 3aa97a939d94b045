"""Parameter-space path segments and the small text language describing them.

A path is a chronological sequence of segments.  `theta:<from>-><to>` ramps
the amplitude mixing angle at zero phases; `phi:ma=<int>,mb=<int>@theta=<val>`
winds the two drive phases from 0 to 2*pi times the given integers at fixed
theta.  Angle literals accept plain floats and `pi`-style fractions such as
`pi/4`, `3*pi/8` or `-pi/2`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import pi
from typing import Union

from .model import ControlParams

_ENDPOINT_TOL = 1e-9


class PathSyntaxError(ValueError):
    """Malformed path text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PathContinuityError(ValueError):
    """Consecutive segments do not share their endpoint parameters."""

    def __init__(self, message: str, segment: int):
        super().__init__(f"{message} (segment {segment})")
        self.segment = segment


@dataclass(frozen=True)
class ThetaRamp:
    """Ramp theta from theta_from to theta_to with phi_a = phi_b = 0."""

    theta_from: float
    theta_to: float

    def __post_init__(self):
        for v in (self.theta_from, self.theta_to):
            if not (-_ENDPOINT_TOL <= v <= pi / 2 + _ENDPOINT_TOL):
                raise ValueError(f"theta endpoint {v} outside [0, pi/2]")

    @property
    def arc(self) -> float:
        return abs(self.theta_to - self.theta_from)

    def params(self, s: float, omega: float = 1.0) -> ControlParams:
        theta = self.theta_from + s * (self.theta_to - self.theta_from)
        return ControlParams(omega=omega, theta=theta)

    def start(self) -> float:
        return self.theta_from

    def end(self) -> float:
        return self.theta_to


@dataclass(frozen=True)
class PhiLoop:
    """Wind phi_a and phi_b from 0 to 2*pi*m_a and 2*pi*m_b at fixed theta."""

    m_a: int
    m_b: int
    theta: float

    def __post_init__(self):
        if not isinstance(self.m_a, int) or not isinstance(self.m_b, int):
            raise ValueError("winding numbers must be integers")

    @property
    def arc(self) -> float:
        return 2 * pi * (abs(self.m_a) + abs(self.m_b))

    def params(self, s: float, omega: float = 1.0) -> ControlParams:
        return ControlParams(
            omega=omega,
            theta=self.theta,
            phi_a=2 * pi * self.m_a * s,
            phi_b=2 * pi * self.m_b * s,
        )

    def start(self) -> float:
        return self.theta

    def end(self) -> float:
        return self.theta


PathSegment = Union[ThetaRamp, PhiLoop]


@dataclass(frozen=True)
class PathProgram:
    """Chronological, continuity-checked sequence of segments."""

    segments: tuple[PathSegment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        for i in range(1, len(segs)):
            prev, cur = segs[i - 1], segs[i]
            if abs(prev.end() - cur.start()) > _ENDPOINT_TOL:
                raise PathContinuityError(
                    f"segment starts at theta={cur.start()} but previous "
                    f"ended at theta={prev.end()}",
                    i,
                )

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def total_arc(self) -> float:
        return sum(seg.arc for seg in self.segments)


_ANGLE_RE = re.compile(
    r"""^\s*(?P<sign>-)?\s*(?:
        (?P<coef>\d+(?:\.\d+)?)\s*\*\s*pi(?:\s*/\s*(?P<den1>\d+(?:\.\d+)?))?
        | pi(?:\s*/\s*(?P<den2>\d+(?:\.\d+)?))?
        | (?P<plain>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
    )\s*$""",
    re.VERBOSE,
)


def parse_angle(text: str, position: int = 0) -> float:
    m = _ANGLE_RE.match(text)
    if not m:
        raise PathSyntaxError(f"cannot parse angle {text!r}", position)
    if m.group("plain") is not None:
        value = float(m.group("plain"))
    else:
        value = float(m.group("coef")) * pi if m.group("coef") else pi
        den = m.group("den1") or m.group("den2")
        if den:
            value /= float(den)
    return -value if m.group("sign") else value


_THETA_RE = re.compile(r"^theta\s*:\s*(?P<from>[^>]+?)\s*->\s*(?P<to>.+)$")
_PHI_RE = re.compile(
    r"^phi\s*:\s*ma\s*=\s*(?P<ma>-?\d+)\s*,\s*mb\s*=\s*(?P<mb>-?\d+)"
    r"\s*@\s*theta\s*=\s*(?P<theta>.+)$"
)


def parse_path(text: str) -> PathProgram:
    """Parse the path mini-language into a validated program."""
    segments: list[PathSegment] = []
    pos = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        start_pos = pos + (len(chunk) - len(chunk.lstrip()))
        pos += len(chunk) + 1
        if not stripped:
            continue
        m = _THETA_RE.match(stripped)
        if m:
            seg = ThetaRamp(
                parse_angle(m.group("from"), start_pos),
                parse_angle(m.group("to"), start_pos),
            )
            segments.append(seg)
            continue
        m = _PHI_RE.match(stripped)
        if m:
            segments.append(
                PhiLoop(
                    int(m.group("ma")),
                    int(m.group("mb")),
                    parse_angle(m.group("theta"), start_pos),
                )
            )
            continue
        raise PathSyntaxError(f"unrecognized segment {stripped!r}", start_pos)
    return PathProgram(tuple(segments))


def theta_ramp_program(theta_from: float, theta_to: float) -> PathProgram:
    return PathProgram((ThetaRamp(theta_from, theta_to),))


def w_program(m_a: int, m_b: int, theta_1: float) -> PathProgram:
    """Chronological path whose holonomy is the three-factor gate sequence
    starting and ending at theta = pi/4."""
    return PathProgram(
        (
            ThetaRamp(pi / 4, theta_1),
            PhiLoop(m_a, m_b, theta_1),
            ThetaRamp(theta_1, pi / 4),
        )
    )


def w_prime_program(m_a: int, m_b: int, theta_1: float) -> PathProgram:
    """Chronological path of the state-preparation variant: theta starts at 0
    and ends at pi/4."""
    return PathProgram(
        (
            ThetaRamp(0.0, theta_1),
            PhiLoop(m_a, m_b, theta_1),
            ThetaRamp(theta_1, pi / 4),
        )
    )
