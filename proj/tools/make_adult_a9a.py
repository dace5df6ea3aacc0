# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Binarize the raw UCI Adult file into a 123-feature sparse dataset.

Layout follows the widely used a9a encoding: continuous attributes are cut
into quantile bins (capital gain and loss into zero / non-zero), categorical
attributes are one-hot, and a missing value ('?') sets no feature of its
attribute. Lines are "label idx:1 ..." with 1-based indices and labels +1
(>50K) and -1.

Usage: make_adult_a9a.py adult.data out.txt [--blocks blocks.json]
"""

import argparse
import bisect
import csv
import json
import sys

CATEGORIES = {
    "workclass": ["Private", "Self-emp-not-inc", "Self-emp-inc", "Federal-gov", "Local-gov",
                  "State-gov", "Without-pay", "Never-worked"],
    "education": ["Bachelors", "Some-college", "11th", "HS-grad", "Prof-school", "Assoc-acdm",
                  "Assoc-voc", "9th", "7th-8th", "12th", "Masters", "1st-4th", "10th",
                  "Doctorate", "5th-6th", "Preschool"],
    "marital-status": ["Married-civ-spouse", "Divorced", "Never-married", "Separated", "Widowed",
                       "Married-spouse-absent", "Married-AF-spouse"],
    "occupation": ["Tech-support", "Craft-repair", "Other-service", "Sales", "Exec-managerial",
                   "Prof-specialty", "Handlers-cleaners", "Machine-op-inspct", "Adm-clerical",
                   "Farming-fishing", "Transport-moving", "Priv-house-serv", "Protective-serv",
                   "Armed-Forces"],
    "relationship": ["Wife", "Own-child", "Husband", "Not-in-family", "Other-relative",
                     "Unmarried"],
    "race": ["White", "Asian-Pac-Islander", "Amer-Indian-Eskimo", "Other", "Black"],
    "sex": ["Female", "Male"],
    "native-country": ["United-States", "Cambodia", "England", "Puerto-Rico", "Canada",
                       "Germany", "Outlying-US(Guam-USVI-etc)", "India", "Japan", "Greece",
                       "South", "China", "Cuba", "Iran", "Honduras", "Philippines", "Italy",
                       "Poland", "Jamaica", "Vietnam", "Mexico", "Portugal", "Ireland", "France",
                       "Dominican-Republic", "Laos", "Ecuador", "Taiwan", "Haiti", "Columbia",
                       "Hungary", "Guatemala", "Nicaragua", "Scotland", "Thailand", "Yugoslavia",
                       "El-Salvador", "Trinadad&Tobago", "Peru", "Hong", "Holand-Netherlands"],
}

# (name, kind, bins) in column order; kind is "quantile", "nonzero" or "category".
COLUMNS = [
    ("age", "quantile", 5),
    ("workclass", "category", 8),
    ("fnlwgt", "quantile", 5),
    ("education", "category", 16),
    ("education-num", "quantile", 5),
    ("marital-status", "category", 7),
    ("occupation", "category", 14),
    ("relationship", "category", 6),
    ("race", "category", 5),
    ("sex", "category", 2),
    ("capital-gain", "nonzero", 2),
    ("capital-loss", "nonzero", 2),
    ("hours-per-week", "quantile", 5),
    ("native-country", "category", 41),
]


def read_rows(path):
    rows = []
    with open(path, newline="") as f:
        for rec in csv.reader(f, skipinitialspace=True):
            if not rec or rec[0].startswith("|"):
                continue
            if len(rec) != 15:
                sys.exit(f"{path}: expected 15 fields, got {len(rec)}")
            rows.append([x.strip() for x in rec])
    return rows


def cut_points(values, bins):
    s = sorted(values)
    return [s[(len(s) * k) // bins] for k in range(1, bins)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("raw")
    ap.add_argument("out")
    ap.add_argument("--blocks", help="also write the attribute blocks as JSON")
    args = ap.parse_args()

    rows = read_rows(args.raw)
    offsets, cuts, start = [], {}, 1
    for col, (name, kind, bins) in enumerate(COLUMNS):
        offsets.append(start)
        start += bins
        if kind == "quantile":
            cuts[col] = cut_points([float(r[col]) for r in rows if r[col] != "?"], bins)
    assert start - 1 == 123

    with open(args.out, "w") as out:
        for r in rows:
            label = "+1" if r[14].rstrip(".") == ">50K" else "-1"
            idx = []
            for col, (name, kind, bins) in enumerate(COLUMNS):
                x = r[col]
                if x == "?":
                    continue
                if kind == "quantile":
                    b = bisect.bisect_right(cuts[col], float(x))
                elif kind == "nonzero":
                    b = 0 if float(x) == 0 else 1
                else:
                    if x not in CATEGORIES[name]:
                        sys.exit(f"unknown {name} value '{x}'")
                    b = CATEGORIES[name].index(x)
                idx.append(offsets[col] + b)
            out.write(label + "".join(f" {i}:1" for i in idx) + "\n")

    if args.blocks:
        blocks = [list(range(offsets[c], offsets[c] + COLUMNS[c][2])) for c in range(len(COLUMNS))]
        with open(args.blocks, "w") as f:
            json.dump({"blocks": blocks}, f)
    print(f"wrote {len(rows)} rows, 123 features to {args.out}")


if __name__ == "__main__":
    main()
