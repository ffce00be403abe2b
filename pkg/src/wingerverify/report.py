"""Claim records and the machine-readable verification report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__


@dataclass
class Claim:
    id: str
    description: str
    status: str  # "pass" | "fail" | "skipped"
    witness: object = None
    millis: int = 0

    def to_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
        }


@dataclass
class ClaimReport:
    convention: str
    claims: list = field(default_factory=list)
    version: str = __version__

    def add(self, claim: Claim):
        if any(c.id == claim.id for c in self.claims):
            raise ValueError(f"duplicate claim id {claim.id}")
        if claim.status == "pass" and not claim.witness:
            raise ValueError(f"passing claim {claim.id} has no witness")
        self.claims.append(claim)

    @property
    def failed(self):
        return [c for c in self.claims if c.status == "fail"]

    def to_dict(self):
        return {
            "version": self.version,
            "convention": self.convention,
            "claims": [c.to_dict() for c in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def run_claim(report: ClaimReport, claim_id: str, description: str, fn):
    """Execute one check; fn returns (ok, witness) or raises for internal errors."""
    start = time.monotonic()
    ok, witness = fn()
    elapsed = int((time.monotonic() - start) * 1000)
    report.add(Claim(id=claim_id, description=description,
                     status="pass" if ok else "fail",
                     witness=witness if witness else ("checked" if ok else None),
                     millis=elapsed))
    return ok
