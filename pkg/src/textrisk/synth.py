"""Synthetic firm-year corpus with controllable text and tabular signal.

Stands in for the proprietary report corpus.  Distressed firm-years draw
auditor-text content tokens from a distress pool with probability
``signal_strength`` and get a mean shift of ``tabular_signal_strength``
standard deviations on a fixed subset of continuous features.  The label
already encodes the two-year distress horizon, so no survival bookkeeping
happens here.

Generation is a pure function of the spec: identical specs produce
byte-identical corpora.
"""

from dataclasses import dataclass, field

import numpy as np

from textrisk.errors import DataError
from textrisk.records import N_CATEGORICAL, N_CONTINUOUS, FirmYearRecord
from textrisk.rng import substream

DEFAULT_DISTRESS_POOL = (
    "arrears", "bankruptcy", "breach", "caveat", "cessation", "covenant",
    "creditor", "default", "deficit", "depletion", "dissolution", "distress",
    "doubt", "erosion", "exhausted", "failing", "forbearance", "foreclosure",
    "illiquid", "impairment", "insolvency", "jeopardy", "liquidation",
    "losses", "negative", "overdue", "qualification", "reservation",
    "restructuring", "shortfall", "termination", "unable", "uncertainty",
    "undercapitalized", "winding", "writedown",
)

DEFAULT_NEUTRAL_POOL = (
    "achievements", "acquisition", "advertising", "assembly", "auditing",
    "bookkeeping", "branding", "budget", "capacity", "certification",
    "collaboration", "compliance", "components", "construction", "consulting",
    "continuation", "contracts", "customers", "dedicated", "development",
    "distribution", "diversified", "dividend", "domestic", "efficiency",
    "engineering", "equipment", "established", "expansion", "experienced",
    "exports", "favorable", "forecast", "governance", "growth", "hardware",
    "healthy", "imports", "innovation", "installation", "insurance",
    "inventory", "investment", "leasing", "logistics", "machinery", "margins",
    "marketing", "materials", "milestones", "modernization", "motivated",
    "national", "nordic", "objectives", "orders", "ordinary", "packaging",
    "partnership", "payroll", "pension", "performance", "pipeline", "planning",
    "portfolio", "positive", "premises", "pricing", "procurement",
    "production", "productivity", "profitable", "projects", "property",
    "prudent", "quality", "recruitment", "regional", "renewal", "renovation",
    "research", "retail", "revenue", "robust", "satisfactory", "seasonality",
    "shipping", "software", "solid", "sound", "stable", "staffing", "steady",
    "strategy", "subsidiary", "successful", "suppliers", "sustainable",
    "taxation", "training", "transport", "turnover", "upgrades", "utilization",
    "volume", "warehouse", "wholesale",
)

# function words emitted for texture; the pipeline scrubs them again
_FILLER_WORDS = (
    "the", "of", "and", "to", "in", "for", "with", "on", "as", "is", "are",
    "has", "have", "this", "that", "it", "by", "from", "at", "be", "was",
    "were",
)

# continuous columns shifted for distressed firm-years, with sign pattern
_SHIFT_COLUMNS = np.arange(8)
_SHIFT_SIGNS = np.array([-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0])

_COLUMN_LOC = 0.1 * np.arange(N_CONTINUOUS, dtype=np.float64)
_COLUMN_SCALE = 1.0 + 0.5 * (np.arange(N_CONTINUOUS) % 5)

_CATEGORY_CHOICES = (
    ("no", "yes"),
    ("no", "yes"),
    ("no", "yes"),
    ("no", "yes"),
    ("north", "south", "east", "west", "capital"),
    ("retail", "industry", "services", "transport", "farming", "media",
     "energy", "trades"),
)
_CATEGORY_WEIGHTS = (
    (0.9, 0.1),
    (0.6, 0.4),
    (0.8, 0.2),
    (0.85, 0.15),
    (0.2, 0.2, 0.2, 0.2, 0.2),
    (0.2, 0.2, 0.15, 0.15, 0.1, 0.08, 0.07, 0.05),
)

# length draws matched to the report-length quartiles: auditor text around
# 187/205/219 words, management statements around 37/54/83 words
_AUDITOR_LEN_MEAN = 205.0
_AUDITOR_LEN_SD = 23.7
_MANAGEMENT_LEN_LOG_MEAN = float(np.log(54.0))
_MANAGEMENT_LEN_LOG_SD = 0.594


@dataclass(frozen=True)
class SyntheticCorpusSpec:
    """Everything the generator needs; two specs equal => corpora equal."""

    n_firms: int
    seed: int
    year_start: int = 2013
    year_end: int = 2016
    max_years_per_firm: int = 3
    base_rate: float = 0.10
    signal_strength: float = 0.8
    tabular_signal_strength: float = 0.3
    distress_pool: tuple = DEFAULT_DISTRESS_POOL
    neutral_pool: tuple = DEFAULT_NEUTRAL_POOL

    def validate(self) -> None:
        if self.n_firms < 1:
            raise DataError("n_firms must be positive")
        if self.year_end < self.year_start:
            raise DataError("year_end must not precede year_start")
        if not 0.0 <= self.signal_strength <= 1.0:
            raise DataError("signal_strength must lie in [0, 1]")
        if not 0.0 <= self.tabular_signal_strength <= 1.0:
            raise DataError("tabular_signal_strength must lie in [0, 1]")
        if not 0.0 < self.base_rate < 1.0:
            raise DataError("base_rate must lie in (0, 1)")
        overlap = set(self.distress_pool) & set(self.neutral_pool)
        if overlap:
            raise DataError(
                f"distress and neutral token pools overlap: {sorted(overlap)[:5]}"
            )
        if not self.distress_pool or not self.neutral_pool:
            raise DataError("token pools must be non-empty")

    def to_dict(self) -> dict:
        return {
            "n_firms": self.n_firms,
            "seed": self.seed,
            "year_start": self.year_start,
            "year_end": self.year_end,
            "max_years_per_firm": self.max_years_per_firm,
            "base_rate": self.base_rate,
            "signal_strength": self.signal_strength,
            "tabular_signal_strength": self.tabular_signal_strength,
            "distress_pool": list(self.distress_pool),
            "neutral_pool": list(self.neutral_pool),
        }


def _firm_name(index: int) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"
    suffix = []
    value = index
    for _ in range(4):
        suffix.append(letters[value % 26])
        value //= 26
    return "velt" + "".join(reversed(suffix))


def _draw_text(
    rng: np.random.Generator,
    length: int,
    spec: SyntheticCorpusSpec,
    with_signal: bool,
    entity_name: str,
) -> str:
    """One report segment: content words plus filler, numbers, an entity."""
    entity_at = -1
    if rng.random() < 0.3 and length > 6:
        entity_at = int(rng.integers(2, length - 1))
    sentence_len = int(rng.integers(8, 15))
    words = []
    pos_in_sentence = 0
    for i in range(length):
        if i == entity_at:
            word = entity_name.capitalize()
        else:
            u = rng.random()
            if u < 0.30:
                word = _FILLER_WORDS[int(rng.integers(0, len(_FILLER_WORDS)))]
            elif u < 0.33:
                word = str(int(rng.integers(10, 100000)))
            elif with_signal and rng.random() < spec.signal_strength:
                word = spec.distress_pool[
                    int(rng.integers(0, len(spec.distress_pool)))
                ]
            else:
                word = spec.neutral_pool[
                    int(rng.integers(0, len(spec.neutral_pool)))
                ]
            if pos_in_sentence == 0:
                word = word.capitalize()
        words.append(word)
        pos_in_sentence += 1
        if pos_in_sentence >= sentence_len and i < length - 1:
            words[-1] += "."
            pos_in_sentence = 0
            sentence_len = int(rng.integers(8, 15))
    return " ".join(words) + "."


def generate_synthetic(spec: SyntheticCorpusSpec) -> list:
    """Generate the firm-year records described by ``spec``."""
    spec.validate()
    rng = substream(spec.seed, "synth")
    span = spec.year_end - spec.year_start + 1
    records = []
    for firm_index in range(spec.n_firms):
        firm_id = f"F{firm_index:06d}"
        entity_name = _firm_name(firm_index)
        n_years = int(rng.integers(1, min(spec.max_years_per_firm, span) + 1))
        first_year = spec.year_start + int(rng.integers(0, span - n_years + 1))
        for year in range(first_year, first_year + n_years):
            distressed = bool(rng.random() < spec.base_rate)
            z = rng.standard_normal(N_CONTINUOUS)
            heavy = rng.random(N_CONTINUOUS) < 0.05
            z = np.where(heavy, z * 8.0, z)
            if distressed:
                z[_SHIFT_COLUMNS] += _SHIFT_SIGNS * spec.tabular_signal_strength
            continuous = _COLUMN_LOC + _COLUMN_SCALE * z
            categorical = tuple(
                choices[int(rng.choice(len(choices), p=weights))]
                for choices, weights in zip(_CATEGORY_CHOICES, _CATEGORY_WEIGHTS)
            )
            aud_len = int(np.clip(round(rng.normal(_AUDITOR_LEN_MEAN,
                                                   _AUDITOR_LEN_SD)), 30, 400))
            man_len = int(np.clip(round(rng.lognormal(
                _MANAGEMENT_LEN_LOG_MEAN, _MANAGEMENT_LEN_LOG_SD)), 5, 300))
            records.append(FirmYearRecord(
                firm_id=firm_id,
                year=year,
                continuous=tuple(float(x) for x in continuous),
                categorical=categorical,
                auditor_text=_draw_text(rng, aud_len, spec,
                                        with_signal=distressed,
                                        entity_name=entity_name),
                management_text=_draw_text(rng, man_len, spec,
                                           with_signal=False,
                                           entity_name=entity_name),
                distressed=distressed,
                firm_size=float(rng.lognormal(np.log(5e6), 1.5)),
            ))
    return records
