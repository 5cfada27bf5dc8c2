#!/usr/bin/env python3
# Copyright 2026 The leancode Authors
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

"""Writes table2_dump.jsonl, a synthetic encoder-decoder attention dump.

Each category gets one token with 100 in-category occurrences whose max, min
and mean hit the target row, plus 100 occurrences of the same token in Other
statements that pull its token-wide mean to the target global average. All
scores sit on a 2^-20 grid so every partial sum is exact and equal targets
produce bit-identical means.
"""

import json
import random
import sys

GRID = 1 << 20
PER_CATEGORY = 100

# category, token, max, min, global, category-local
ROWS = [
    ("Annotation", "Override", 7.94, 0.32, 2.61, 1.55),
    ("Arithmetic", "+=", 37.44, 0.07, 2.69, 2.30),
    ("VariableDeclaration", "count", 65.54, 0.09, 2.87, 2.69),
    ("FunctionInvocation", "append", 63.97, 0.01, 2.86, 2.80),
    ("Return", "return", 55.23, 0.10, 3.08, 4.76),
    ("Switch", "switch", 30.03, 0.07, 2.71, 2.41),
    ("Break", "break", 28.02, 0.04, 2.64, 2.67),
    ("Setter", "setName", 69.06, 0.03, 2.85, 2.33),
    ("Synchronized", "synchronized", 78.09, 0.04, 2.84, 3.11),
    ("Try", "try", 78.27, 0.03, 2.82, 2.46),
    ("Catch", "catch", 34.99, 0.07, 3.01, 2.44),
    ("MethodSignature", "getUserName", 91.69, 0.14, 3.29, 5.91),
    ("Finally", "finally", 10.49, 0.74, 2.38, 2.99),
    ("Getter", "getName", 68.49, 0.03, 2.88, 2.58),
    ("Throw", "throw", 87.67, 0.06, 2.80, 3.10),
    ("Case", "case", 23.25, 0.03, 2.75, 1.80),
    ("While", "while", 67.68, 0.04, 2.70, 2.41),
    ("Continue", "continue", 9.85, 0.27, 2.49, 1.73),
    ("IfCondition", "if", 57.88, 0.05, 2.84, 2.50),
    ("For", "for", 60.62, 0.03, 2.91, 2.99),
    ("Logging", "info", 65.63, 0.04, 2.77, 2.89),
]


def on_grid(x):
    return round(x * GRID) / GRID


def category_scores(hi, lo, mean):
    total = round(mean * PER_CATEGORY)  # an integer for two-decimal targets
    hi, lo = on_grid(hi), on_grid(lo)
    rest = total - hi - lo
    fill = int(rest / (PER_CATEGORY - 2) * GRID) / GRID
    last = rest - fill * (PER_CATEGORY - 3)
    assert lo <= fill <= hi and lo <= last <= hi
    return [hi, lo] + [fill] * (PER_CATEGORY - 3) + [last]


def main(path):
    rng = random.Random(20240611)
    records = []
    for cat, token, hi, lo, glob, local in ROWS:
        for s in category_scores(hi, lo, local):
            records.append((cat, token, s))
        other = on_grid(2 * glob - local)
        assert other >= 0
        records.extend(("Other", token, other) for _ in range(PER_CATEGORY))
    rng.shuffle(records)
    with open(path, "w") as f:
        for n, (cat, token, score) in enumerate(records):
            rec = {
                "snippet_id": "t2-%04d" % (n // 8),
                "token_index": n % 8,
                "token_text": token,
                "category": cat,
                "score": score,
                "kind": "ende",
            }
            f.write(json.dumps(rec) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "table2_dump.jsonl")
