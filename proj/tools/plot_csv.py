#!/usr/bin/env python3
"""Plot two columns of a spectator CSV, one line per condition value."""
import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("x")
    ap.add_argument("y")
    ap.add_argument("--by", help="column that splits the rows into curves")
    ap.add_argument("--out", default="plot.png")
    args = ap.parse_args()

    curves = defaultdict(lambda: ([], []))
    with open(args.csv, newline="") as f:
        for row in csv.DictReader(f):
            key = row[args.by] if args.by else ""
            curves[key][0].append(float(row[args.x]))
            curves[key][1].append(float(row[args.y]))

    fig, ax = plt.subplots()
    for key, (xs, ys) in curves.items():
        ax.plot(xs, ys, marker=".", label=f"{args.by}={key}" if args.by else None)
    ax.set_xlabel(args.x)
    ax.set_ylabel(args.y)
    if args.by:
        ax.legend()
    fig.savefig(args.out, dpi=120)


if __name__ == "__main__":
    main()
