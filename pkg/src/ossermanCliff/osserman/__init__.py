from .report import (
    OssermanReport, Prop2Class, classify, prop1_hypotheses,
    radon_guarantees_hypotheses, sixteen_dimensional_criterion
)
from .check import osserman_check, sampled_spectra
from .duality import DualityReport, DualityViolation, duality_check
