"""Firm-year records, feature encoding, and the JSONL corpus format."""

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from textrisk.errors import DataError

N_CONTINUOUS = 44
N_CATEGORICAL = 6

_RECORD_FIELDS = (
    "firm_id", "year", "continuous", "categorical",
    "auditor_text", "management_text", "distressed", "firm_size",
)

_ENCODER_FORMAT_VERSION = 1


@dataclass(frozen=True)
class FirmYearRecord:
    """One annual report: financial features, both text segments, label."""

    firm_id: str
    year: int
    continuous: tuple
    categorical: tuple
    auditor_text: str
    management_text: str
    distressed: bool
    firm_size: float

    def __post_init__(self):
        if len(self.continuous) != N_CONTINUOUS:
            raise DataError(
                f"record {self.firm_id}/{self.year}: expected "
                f"{N_CONTINUOUS} continuous features, got {len(self.continuous)}"
            )
        if len(self.categorical) != N_CATEGORICAL:
            raise DataError(
                f"record {self.firm_id}/{self.year}: expected "
                f"{N_CATEGORICAL} categorical features, got {len(self.categorical)}"
            )
        if not self.firm_size > 0:
            raise DataError(
                f"record {self.firm_id}/{self.year}: firm_size must be positive"
            )

    @property
    def record_id(self) -> str:
        return f"{self.firm_id}:{self.year}"

    def text(self, segment: str) -> str:
        if segment == "aud":
            return self.auditor_text
        if segment == "man":
            return self.management_text
        raise ValueError(f"unknown text segment {segment!r}")


def record_to_dict(rec: FirmYearRecord) -> dict:
    return {
        "firm_id": rec.firm_id,
        "year": rec.year,
        "continuous": list(rec.continuous),
        "categorical": list(rec.categorical),
        "auditor_text": rec.auditor_text,
        "management_text": rec.management_text,
        "distressed": rec.distressed,
        "firm_size": rec.firm_size,
    }


def record_from_dict(doc: dict, where: str = "") -> FirmYearRecord:
    unknown = set(doc) - set(_RECORD_FIELDS)
    if unknown:
        raise DataError(f"unknown record fields {sorted(unknown)}{where}")
    missing = set(_RECORD_FIELDS) - set(doc)
    if missing:
        raise DataError(f"missing record fields {sorted(missing)}{where}")
    if not doc["auditor_text"] or not doc["management_text"]:
        raise DataError(
            f"record {doc.get('firm_id')}/{doc.get('year')} lacks a text "
            f"segment; statements must contain both{where}"
        )
    return FirmYearRecord(
        firm_id=str(doc["firm_id"]),
        year=int(doc["year"]),
        continuous=tuple(float(x) for x in doc["continuous"]),
        categorical=tuple(str(x) for x in doc["categorical"]),
        auditor_text=str(doc["auditor_text"]),
        management_text=str(doc["management_text"]),
        distressed=bool(doc["distressed"]),
        firm_size=float(doc["firm_size"]),
    )


def load_records_jsonl(path) -> list:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid JSON ({exc})") from exc
            records.append(record_from_dict(doc, where=f" ({path}:{lineno})"))
    if not records:
        raise DataError(f"{path}: no records")
    return records


def save_records_jsonl(records: Sequence[FirmYearRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_dict(rec), ensure_ascii=False,
                                sort_keys=True))
            fh.write("\n")


@dataclass(frozen=True)
class FeatureEncoder:
    """Winsorize-standardize continuous features, one-hot categoricals.

    All statistics are fitted from training rows only; every categorical
    feature carries an explicit trailing "unseen" bucket for values that
    were absent at fit time.
    """

    winsor_low: np.ndarray
    winsor_high: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    category_values: tuple  # per categorical feature: sorted tuple of values
    standardize: bool = True

    @property
    def feature_dim(self) -> int:
        return N_CONTINUOUS + sum(len(v) + 1 for v in self.category_values)

    def encode(self, record: FirmYearRecord) -> np.ndarray:
        cont = np.asarray(record.continuous, dtype=np.float64)
        cont = np.clip(cont, self.winsor_low, self.winsor_high)
        if self.standardize:
            cont = (cont - self.mean) / self.std
        parts = [cont]
        for j, values in enumerate(self.category_values):
            onehot = np.zeros(len(values) + 1, dtype=np.float64)
            try:
                idx = values.index(record.categorical[j])
            except ValueError:
                idx = len(values)  # unseen bucket
            onehot[idx] = 1.0
            parts.append(onehot)
        return np.concatenate(parts)

    def encode_matrix(self, records: Sequence[FirmYearRecord]) -> np.ndarray:
        out = np.empty((len(records), self.feature_dim), dtype=np.float64)
        for i, rec in enumerate(records):
            out[i] = self.encode(rec)
        return out

    def to_json(self) -> str:
        doc = {
            "format_version": _ENCODER_FORMAT_VERSION,
            "winsor_low": self.winsor_low.tolist(),
            "winsor_high": self.winsor_high.tolist(),
            "mean": self.mean.tolist(),
            "std": self.std.tolist(),
            "category_values": [list(v) for v in self.category_values],
            "standardize": self.standardize,
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FeatureEncoder":
        doc = json.loads(text)
        if doc.get("format_version") != _ENCODER_FORMAT_VERSION:
            raise DataError(
                f"unsupported encoder format_version: {doc.get('format_version')!r}"
            )
        return cls(
            winsor_low=np.asarray(doc["winsor_low"], dtype=np.float64),
            winsor_high=np.asarray(doc["winsor_high"], dtype=np.float64),
            mean=np.asarray(doc["mean"], dtype=np.float64),
            std=np.asarray(doc["std"], dtype=np.float64),
            category_values=tuple(tuple(v) for v in doc["category_values"]),
            standardize=doc["standardize"],
        )


def fit_encoder(
    records: Sequence[FirmYearRecord], standardize: bool = True
) -> FeatureEncoder:
    """Fit winsorization quantiles, standardization stats and category maps.

    Quantiles use linear interpolation over sorted order statistics; the
    standardization statistics are computed on the winsorized values.
    """
    if not records:
        raise DataError("no training rows")
    X = np.asarray([rec.continuous for rec in records], dtype=np.float64)
    bad = np.argwhere(~np.isfinite(X))
    if bad.size:
        i, j = bad[0]
        raise DataError(
            f"non-finite continuous feature: record {records[i].record_id}, "
            f"column {j}"
        )
    winsor_low = np.quantile(X, 0.05, axis=0, method="linear")
    winsor_high = np.quantile(X, 0.95, axis=0, method="linear")
    clipped = np.clip(X, winsor_low, winsor_high)
    mean = clipped.mean(axis=0)
    std = clipped.std(axis=0)
    std = np.where(std > 0, std, 1.0)
    category_values = tuple(
        tuple(sorted({rec.categorical[j] for rec in records}))
        for j in range(N_CATEGORICAL)
    )
    return FeatureEncoder(
        winsor_low=winsor_low,
        winsor_high=winsor_high,
        mean=mean,
        std=std,
        category_values=category_values,
        standardize=standardize,
    )
