"""Run the suite under each deliberately broken HC decision procedure and
report which statements catch it."""

import argparse

from hclab.embedding import HC_MUTATIONS
from hclab.harness import SuiteConfig, verify_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--show", type=int, default=3, help="failures to print per mutation")
    args = ap.parse_args()
    for mode in HC_MUTATIONS:
        report = verify_suite(cfg=SuiteConfig(jobs=args.jobs, hc_mutation=mode))
        caught = {sid: t["FAIL"] for sid, t in report.tallies().items() if t["FAIL"]}
        print(f"{mode}: {len(report.failures)} FAIL in {len(caught)} statements {caught}")
        for c in report.failures[: args.show]:
            print(f"  {c.statement} {c.group} {c.params} {c.witness}")


if __name__ == "__main__":
    main()
