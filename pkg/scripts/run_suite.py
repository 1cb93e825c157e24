"""Run the full statement suite and write records plus a JSON summary.

    python scripts/run_suite.py --out results/ --jobs 4 --diagnostic
"""

import argparse
import json
import logging
from pathlib import Path

from hclab.harness import SuiteConfig, verify_suite

log = logging.getLogger("run_suite")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--diagnostic", action="store_true")
    ap.add_argument("ids", nargs="*", help="statement ids (default: all)")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    report = verify_suite(args.ids or None, cfg=SuiteConfig(jobs=args.jobs, diagnostic=args.diagnostic))
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "records.jsonl").write_text(report.to_records())
    summary = {
        "corpus_version": report.corpus_version,
        "groups": report.groups,
        "wall_time_s": round(report.wall_time, 3),
        "tallies": {sid: dict(t) for sid, t in report.tallies().items()},
        "nonvacuity": report.nonvacuity(),
        "failures": [c.record() for c in report.failures],
    }
    if args.diagnostic:
        summary["contrapositive"] = report.contrapositive()
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    log.info(report.to_text())
    log.info("wrote %s and %s", args.out / "records.jsonl", args.out / "summary.json")
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
