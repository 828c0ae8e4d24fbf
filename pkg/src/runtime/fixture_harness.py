# -*- coding: utf-8 -*-
"""Golden-file fixture harness for replayable CLI verification."""

import argparse
import io
import json
from datetime import datetime, timezone
from pathlib import Path
from uuid import uuid4

from src.runtime import cli
from src.runtime.contracts import FIXTURE_CASE_SCHEMA_VERSION, FIXTURE_SUITE_SCHEMA_VERSION
from src.utils.logger import app_logger

MISSING = object()


def _iso_now():
    return datetime.now(timezone.utc).isoformat()


def lookup(document, dotted_path):
    """Resolve ``output.product.a0.0`` style paths; list indices are integers."""
    current = document
    for part in dotted_path.split("."):
        if isinstance(current, list):
            try:
                current = current[int(part)]
            except (ValueError, IndexError):
                return MISSING
        elif isinstance(current, dict) and part in current:
            current = current[part]
        else:
            return MISSING
    return current


class FixtureHarness:
    """Run fixture cases through the CLI and compare against golden envelopes."""

    def __init__(self, golden_dir="evals/golden", eval_dir="runtime/evals"):
        self.golden_dir = Path(golden_dir)
        self.eval_dir = Path(eval_dir)

    def load_cases(self, cases_dir):
        cases = []
        for case_path in sorted(Path(cases_dir).glob("*.json")):
            case = json.loads(case_path.read_text(encoding="utf-8"))
            if case.get("schema_version") != FIXTURE_CASE_SCHEMA_VERSION:
                raise ValueError(f"unsupported fixture case schema: {case_path}")
            case["_path"] = str(case_path)
            cases.append(case)
        return cases

    def run_suite(self, cases_dir, update=False):
        cases = self.load_cases(cases_dir)
        suite_id = f"{datetime.now(timezone.utc).strftime('%Y%m%dT%H%M%SZ')}_{uuid4().hex[:8]}"
        summary_dir = self.eval_dir / suite_id
        summary_dir.mkdir(parents=True, exist_ok=True)
        if update:
            self.golden_dir.mkdir(parents=True, exist_ok=True)

        results = [self._run_case(case, update) for case in cases]
        summary = {
            "schema_version": FIXTURE_SUITE_SCHEMA_VERSION,
            "suite_id": suite_id,
            "created_at": _iso_now(),
            "mode": "update" if update else "verify",
            "cases_total": len(results),
            "cases_passed": sum(1 for result in results if result["passed"]),
            "cases_failed": sum(1 for result in results if not result["passed"]),
            "results": results,
        }

        summary_path = summary_dir / "summary.json"
        results_path = summary_dir / "results.jsonl"
        summary_path.write_text(json.dumps(summary, ensure_ascii=False, indent=2), encoding="utf-8")
        with results_path.open("w", encoding="utf-8") as handle:
            for result in results:
                handle.write(json.dumps(result, ensure_ascii=False) + "\n")
        summary["summary_path"] = str(summary_path)
        summary["results_path"] = str(results_path)
        return summary

    def execute(self, case):
        """Run one case in-process; returns (exit_code, stdout text)."""
        stdout = io.StringIO()
        exit_code = cli.run(
            [case["command"], "--input", "-", "--pretty"],
            stdin=io.StringIO(json.dumps(case["input"], ensure_ascii=False)),
            stdout=stdout,
        )
        return exit_code, stdout.getvalue()

    def _run_case(self, case, update):
        exit_code, text = self.execute(case)
        golden_path = self.golden_dir / f"{case['id']}.json"
        mismatches = []

        if update:
            golden_path.write_text(text, encoding="utf-8")
            app_logger.info(f"更新金标文件: {golden_path}")
        elif not golden_path.exists():
            mismatches.append({"field": "golden", "expected": str(golden_path), "actual": None})
        elif golden_path.read_text(encoding="utf-8") != text:
            mismatches.append({"field": "golden", "expected": "byte-identical envelope", "actual": "differs"})

        expected_exit = case.get("exit_code", 0)
        if exit_code != expected_exit:
            mismatches.append({"field": "exit_code", "expected": expected_exit, "actual": exit_code})
        mismatches.extend(self._compare_expected(case.get("expect", {}), json.loads(text)))

        return {
            "case_id": case["id"],
            "description": case.get("description", ""),
            "command": case["command"],
            "passed": not mismatches,
            "mismatches": mismatches,
            "exit_code": exit_code,
            "golden_path": str(golden_path),
            "case_path": case.get("_path"),
        }

    def _compare_expected(self, expected, document):
        mismatches = []
        for field, expected_value in expected.items():
            actual_value = lookup(document, field)
            if actual_value is MISSING:
                mismatches.append({"field": field, "expected": expected_value, "actual": None})
                continue

            if isinstance(expected_value, dict) and "approx" in expected_value:
                tolerance = expected_value.get("tol", 1e-9)
                matched = (
                    isinstance(actual_value, (int, float))
                    and abs(actual_value - expected_value["approx"]) <= tolerance
                )
            else:
                matched = actual_value == expected_value
            if not matched:
                mismatches.append({"field": field, "expected": expected_value, "actual": actual_value})
        return mismatches


def main(argv=None):
    parser = argparse.ArgumentParser(description="Replay CLI fixture cases against golden envelopes.")
    parser.add_argument("--cases-dir", default="evals/cases")
    parser.add_argument("--golden-dir", default="evals/golden")
    parser.add_argument("--eval-dir", default="runtime/evals")
    parser.add_argument("--update", action="store_true", help="rewrite the golden envelopes")
    args = parser.parse_args(argv)

    harness = FixtureHarness(golden_dir=args.golden_dir, eval_dir=args.eval_dir)
    suite_result = harness.run_suite(args.cases_dir, update=args.update)
    report = {"summary_path": suite_result["summary_path"], "cases_failed": suite_result["cases_failed"]}
    print(json.dumps(report, ensure_ascii=False))
    return 0 if suite_result["cases_failed"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
