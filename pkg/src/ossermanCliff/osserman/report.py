from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import pandas as pd

from ossermanCliff.clifford.hurwitz import radon_number
from ossermanCliff.utils.spectrum import SpectrumProfile


class Prop2Class(str, Enum):
    TWO_POINT_HOMOGENEOUS = "TwoPointHomogeneous"
    UNDETERMINED = "Undetermined"


def classify(n: int, nu: int) -> Prop2Class:
    """
    Lookup of when a Cliff(ν)-structure forces two-point homogeneity.

    TwoPointHomogeneous iff n ∉ {2, 4, 8, 16}, or n = 8 and ν < 3, or n = 16 and ν ≠ 8.
    """
    if not 0 <= nu <= n - 1:
        raise ValueError(f"ν={nu} outside [0, {n - 1}]")
    if n not in (2, 4, 8, 16):
        return Prop2Class.TWO_POINT_HOMOGENEOUS
    if n == 8 and nu < 3:
        return Prop2Class.TWO_POINT_HOMOGENEOUS
    if n == 16 and nu != 8:
        return Prop2Class.TWO_POINT_HOMOGENEOUS
    return Prop2Class.UNDETERMINED


def prop1_hypotheses(n: int, nu: int) -> Tuple[bool, bool]:
    """(n ≥ 3ν, n > (ν+1)²/4), the dimension conditions under which a Clifford structure is recovered."""
    return n >= 3 * nu, 4 * n > (nu + 1) ** 2


def radon_guarantees_hypotheses(n: int) -> bool:
    """Whether ν ≤ ρ(n) − 1 alone implies both dimension conditions."""
    return all(prop1_hypotheses(n, radon_number(n) - 1))


def sixteen_dimensional_criterion(profile: SpectrumProfile) -> bool:
    """For n = 16: true when no eigenvalue has multiplicity 7, 8 or 9."""
    return not any(m in (7, 8, 9) for m in profile.multiplicities)


@dataclass(frozen=True)
class OssermanReport:
    is_osserman: bool
    profile: SpectrumProfile
    max_deviation: float
    samples_used: int
    m0: int
    nu: int
    prop1_hypotheses: Tuple[bool, bool]
    radon_bound_ok: bool
    prop2_class: Prop2Class

    @property
    def n(self) -> int:
        return self.m0 + self.nu + 1

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.prop1_hypotheses)

    def to_dict(self) -> dict:
        return {
            "is_osserman": self.is_osserman,
            "profile": self.profile.to_dict(),
            "max_deviation": self.max_deviation,
            "samples_used": self.samples_used,
            "m0": self.m0,
            "nu": self.nu,
            "prop1_hypotheses": list(self.prop1_hypotheses),
            "radon_bound_ok": self.radon_bound_ok,
            "prop2_class": self.prop2_class.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OssermanReport":
        return cls(
            is_osserman=bool(data["is_osserman"]),
            profile=SpectrumProfile.from_dict(data["profile"]),
            max_deviation=float(data["max_deviation"]),
            samples_used=int(data["samples_used"]),
            m0=int(data["m0"]),
            nu=int(data["nu"]),
            prop1_hypotheses=tuple(bool(b) for b in data["prop1_hypotheses"]),
            radon_bound_ok=bool(data["radon_bound_ok"]),
            prop2_class=Prop2Class(data["prop2_class"]),
        )

    def to_frame(self) -> pd.DataFrame:
        rows = [
            ("is_osserman", self.is_osserman),
            ("profile", str(self.profile)),
            ("max_deviation", f"{self.max_deviation:.3e}"),
            ("samples_used", self.samples_used),
            ("m0", self.m0),
            ("nu", self.nu),
            ("n >= 3nu", self.prop1_hypotheses[0]),
            ("n > (nu+1)^2/4", self.prop1_hypotheses[1]),
            ("radon_bound_ok", self.radon_bound_ok),
            ("prop2_class", self.prop2_class.value),
        ]
        return pd.DataFrame(rows, columns=["field", "value"])
