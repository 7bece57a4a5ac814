"""Rerun the worked reference instances and print a pass/fail table."""

import argparse
import json

from triflag.experiments import format_table, reproduce_examples


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ledger", action="store_true", help="also print each run's candidate ledger")
    args = parser.parse_args()

    results = reproduce_examples()
    print(format_table(results))
    if args.ledger:
        for res in results:
            if res.result is None:
                continue
            print(f"\n== {res.name}")
            for rep in res.result.ledger:
                print(json.dumps(rep.to_json()))


if __name__ == "__main__":
    main()
