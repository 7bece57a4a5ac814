"""Candidate-count sampling study: edges uniform on [1, edge_max], exact bound checked per run."""

import argparse

from triflag.experiments import sample_candidate_stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--edge-max", type=int, default=10**6)
    parser.add_argument("--vertex-mode", choices=("ample", "random"), default="ample")
    parser.add_argument("--seeds", type=int, nargs="+", default=[0])
    parser.add_argument("--csv", help="write per-instance rows; the seed is appended to the stem")
    args = parser.parse_args()

    for seed in args.seeds:
        rep = sample_candidate_stats(args.n, args.edge_max, args.vertex_mode, seed)
        print(rep.summary())
        if args.csv:
            stem, dot, ext = args.csv.rpartition(".")
            path = f"{stem}_{seed}.{ext}" if dot else f"{args.csv}_{seed}"
            rep.write_csv(path)


if __name__ == "__main__":
    main()
