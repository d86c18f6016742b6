#!/usr/bin/env python3
# Copyright 2026 The lexrwa Authors
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
"""Solves an exported free-format MPS model with scipy's MILP solver.

Used to cross-check the built-in branch-and-bound against an independent
solver:

    lexrwa export ... --format mps --output model.mps
    python3 tools/crosscheck_milp.py model.mps --time-limit 600

Prints the status, the scaled objective and the scale factor found in the
header comment, so the objective can be compared with the "objective" field
of `lexrwa solve` (objective = scaled / scale).
"""

import argparse
import re
import sys
from fractions import Fraction

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import coo_matrix


def read_mps(path):
    rows = {}  # name -> (index, type)
    row_order = []
    columns = {}  # name -> index
    entries = []  # (row index, column index, value)
    objective = {}
    rhs = {}
    scale = 1
    section = None
    with open(path) as f:
        for line in f:
            if line.startswith("*"):
                m = re.search(r"scaled by (\d+)", line)
                if m:
                    scale = int(m.group(1))
                continue
            if not line.strip():
                continue
            if not line[0].isspace():
                section = line.split()[0]
                continue
            tok = line.split()
            if section == "ROWS":
                kind, name = tok
                if kind == "N":
                    rows[name] = (-1, "N")
                else:
                    rows[name] = (len(row_order), kind)
                    row_order.append(name)
            elif section == "COLUMNS":
                if tok[1] == "'MARKER'":
                    continue
                col = columns.setdefault(tok[0], len(columns))
                for r, v in zip(tok[1::2], tok[2::2]):
                    index, kind = rows[r]
                    if kind == "N":
                        objective[col] = float(v)
                    else:
                        entries.append((index, col, float(v)))
            elif section == "RHS":
                for r, v in zip(tok[1::2], tok[2::2]):
                    rhs[rows[r][0]] = float(v)
    return rows, row_order, columns, entries, objective, rhs, scale


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("mps")
    parser.add_argument("--time-limit", type=float, default=600.0)
    args = parser.parse_args()

    rows, row_order, columns, entries, objective, rhs, scale = read_mps(args.mps)
    n = len(columns)
    m = len(row_order)
    c = np.zeros(n)
    for col, v in objective.items():
        c[col] = v
    if entries:
        r, k, v = zip(*entries)
    else:
        r, k, v = (), (), ()
    a = coo_matrix((v, (r, k)), shape=(m, n)).tocsr()
    lo = np.full(m, -np.inf)
    hi = np.full(m, np.inf)
    for name in row_order:
        index, kind = rows[name]
        b = rhs.get(index, 0.0)
        if kind in ("E", "G"):
            lo[index] = b
        if kind in ("E", "L"):
            hi[index] = b
    res = milp(
        c,
        constraints=LinearConstraint(a, lo, hi),
        integrality=np.ones(n),
        bounds=Bounds(0, 1),
        options={"time_limit": args.time_limit, "disp": False},
    )
    print(f"status {res.status} {res.message}")
    if res.x is not None:
        scaled = int(round(res.fun))
        print(f"scaled_objective {scaled}")
        print(f"scale {scale}")
        print(f"objective {Fraction(scaled, scale)}")
        bound = getattr(res, "mip_dual_bound", None)
        if bound is not None:
            print(f"dual_bound {bound}")
    return 0 if res.status in (0, 1) and res.x is not None else 2


if __name__ == "__main__":
    sys.exit(main())
