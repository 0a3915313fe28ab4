# app/models.py

import json
from typing import List, Optional

from pydantic import BaseModel, ConfigDict


class CheckRecord(BaseModel):
    """One verified instance: both sides rendered exactly, integers as decimal strings."""

    model_config = ConfigDict(frozen=True)

    instance: str
    lhs: str
    rhs: str
    status: str  # 'OK' or 'FAIL'
    witness: Optional[List[str]] = None


class ReportSummary(BaseModel):
    suite: str
    total: str
    passed: str
    failed: str
    first_failure: Optional[str] = None


class VerificationReport(BaseModel):
    """Records sorted by instance key plus a summary record."""

    records: List[CheckRecord]
    summary: ReportSummary

    @property
    def ok(self) -> bool:
        return self.summary.failed == "0"


class DegreeResult(BaseModel):
    command: str = "degree"
    shape: str
    value: str
    oracle_value: Optional[str] = None
    agrees: Optional[bool] = None


class CharResult(BaseModel):
    command: str = "char"
    shape: str
    cycle_type: str
    value: str
    oracle_value: Optional[str] = None
    agrees: Optional[bool] = None


class CharPolyResult(BaseModel):
    command: str = "charpoly"
    lam: str
    nu: Optional[str] = None
    rect: Optional[str] = None
    polynomial: str
    coefficients: List[str]
    valid_from: Optional[str] = None


class BenchRow(BaseModel):
    strategy: str
    instances: str
    calls: str
    per_instance_calls: List[str]
    wall_seconds: float


class BenchResult(BaseModel):
    command: str = "bench"
    family: str
    rows: List[BenchRow]


def to_json(model: BaseModel) -> str:
    """Canonical compact JSON: declared field order, no whitespace, None fields dropped."""
    return json.dumps(model.model_dump(mode="json", exclude_none=True), separators=(",", ":"), ensure_ascii=False)
