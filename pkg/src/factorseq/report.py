"""Structured verdict records shared by the CLI and the scan reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .conditions import Verdict
from .seqcore import DegreeSequence

SCHEMA_VERSION = 1


def _param(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    return value


def verdict_record(
    pi: DegreeSequence,
    condition: str,
    params: dict,
    verdict: Verdict,
    elapsed_ms: float,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "sequence": list(pi.degrees),
        "n": pi.n,
        "condition": condition,
        "params": {k: _param(v) for k, v in params.items()},
        "verdict": verdict.outcome.value,
        "witness": None if verdict.witness is None else verdict.witness.to_dict(),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def error_record(line: int, text: str, error: Exception) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "line": line,
        "input": text,
        "error": type(error).__name__,
        "message": str(error),
    }


@dataclass
class Report:
    """One record per checked instance plus a summary."""

    scan: str
    params: dict
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    summary_line: str = ""

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "scan": self.scan,
            "params": self.params,
            "records": self.records,
            "summary": self.summary,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def lines(self):
        for rec in self.records:
            params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
            text = f"{rec['condition']} {params} {rec['verdict'].upper()}"
            if rec["witness"] is not None:
                wit = " ".join(f"{k}={v}" for k, v in rec["witness"].items() if k != "kind")
                text += f" {rec['witness']['kind']} {wit}"
            yield text
        yield self.summary_line

    def to_text(self) -> str:
        return "\n".join(self.lines())
