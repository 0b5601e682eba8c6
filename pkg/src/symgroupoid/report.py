"""Check/report structures shared by every verification suite."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

ENGINE_VERSION = "0.1.0"


@dataclass
class Check:
    """One verifiable claim: a callable returning True, or (False, witness)."""

    id: str
    claim: str
    run: object  # zero-argument callable


@dataclass
class CheckResult:
    id: str
    claim: str
    status: str  # pass | fail | skipped
    wall_time_ms: int
    witness: str | None = None

    def to_json(self) -> dict:
        # timings are shown in the human table only, keeping reports
        # byte-identical under a fixed rng seed
        out = {"id": self.id, "claim": self.claim, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    rng_seed: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.checks if c.status == "skipped")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "engine_version": ENGINE_VERSION,
            "rng_seed": self.rng_seed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.id)],
            "summary": {"pass": self.passed, "fail": self.failed, "skipped": self.skipped},
        }

    def render_table(self) -> str:
        lines = [f"suite {self.suite}  (rng seed {self.rng_seed})"]
        width = max((len(c.id) for c in self.checks), default=4)
        for c in sorted(self.checks, key=lambda c: c.id):
            mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[c.status]
            line = f"  {c.id:<{width}}  {mark:<4}  {c.wall_time_ms:>6} ms  {c.claim}"
            if c.witness:
                line += f"  [{c.witness}]"
            lines.append(line)
        lines.append(
            f"  total: {self.passed} passed, {self.failed} failed, {self.skipped} skipped"
        )
        return "\n".join(lines)


def _num_workers(n_checks: int) -> int:
    raw = os.environ.get("GC_NUM_THREADS", "1")
    try:
        cap = max(1, int(raw))
    except ValueError:
        cap = 1
    return min(cap, max(1, n_checks))


def _execute(check: Check) -> CheckResult:
    start = time.monotonic()
    witness = None
    try:
        outcome = check.run()
        if isinstance(outcome, tuple):
            ok, witness = outcome
        else:
            ok = bool(outcome)
        status = "pass" if ok else "fail"
    except NotImplementedError as exc:
        status = "skipped"
        witness = str(exc)
    except Exception as exc:  # a crashed check is a failed check with a witness
        status = "fail"
        witness = f"{type(exc).__name__}: {exc}"
    ms = int((time.monotonic() - start) * 1000)
    return CheckResult(check.id, check.claim, status, ms, witness)


def run_suite_checks(suite: str, checks: list, rng_seed: int) -> SuiteReport:
    """Execute checks (optionally in parallel, capped by GC_NUM_THREADS)."""
    report = SuiteReport(suite=suite, rng_seed=rng_seed)
    workers = _num_workers(len(checks))
    if workers == 1:
        report.checks = [_execute(c) for c in checks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            report.checks = list(pool.map(_execute, checks))
    return report


def write_report(report: SuiteReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
