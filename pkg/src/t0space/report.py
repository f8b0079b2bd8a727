"""Run reports: canonical JSON emitted by every CLI command, re-checkable by
the verify subcommand in a fresh process."""

import json
import time

from . import __version__
from .certificates import certificate_from_json, recheck_certificate
from .docio import dumps_canonical
from .errors import ParseError

SCHEMA = "t0space-report/1"


class ReportTimer:
    def __init__(self):
        self.start = time.perf_counter()

    def ms(self) -> int:
        return int((time.perf_counter() - self.start) * 1000)


def build_report(command, verdicts, certificates=(), details=None, passed=True,
                 timer: ReportTimer | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": list(command),
        "pass": bool(passed),
        "verdicts": dict(verdicts),
        "details": details or {},
        "certificates": [c.to_json() for c in certificates],
        "timing_ms": timer.ms() if timer else 0,
    }


def emit(report: dict) -> str:
    return dumps_canonical(report)


def load_report(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read report {path}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ParseError(f"not a {SCHEMA} report")
    return doc


def verify_report(doc: dict) -> dict[str, bool]:
    """Re-check every serialized certificate against its space's procedures."""
    results = {}
    for i, cert_doc in enumerate(doc.get("certificates", [])):
        cert = certificate_from_json(cert_doc)
        results[f"certificate-{i}-{cert_doc['kind']}"] = recheck_certificate(cert)
    return results
