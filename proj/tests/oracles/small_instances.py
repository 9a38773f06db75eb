#!/usr/bin/env python3
# Copyright 2026 The tsimg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force oracle for the small worked instances frozen into the C++ tests.

Evaluates the raw trigonometric and counting definitions directly, with no
shared code path with the library. Run it and compare against the constants
in tests/unit/gaf_test.cpp, mtf_test.cpp and tests/acceptance/acceptance.cpp.
Exits non-zero if a definition disagrees with a frozen constant.
"""
import math


def gasf_trig(x):
    phi = [math.acos(v) for v in x]
    return [[math.cos(a + b) for b in phi] for a in phi]


def gadf_trig(x):
    phi = [math.acos(v) for v in x]
    return [[math.sin(a - b) for b in phi] for a in phi]


def quantile_bins(x, q):
    order = sorted(range(len(x)), key=lambda i: (x[i], i))
    bins = [0] * len(x)
    for pos, idx in enumerate(order):
        bins[idx] = min(q - 1, pos * q // len(x))
    return bins


def markov(bins, q):
    counts = [[0] * q for _ in range(q)]
    for a, b in zip(bins, bins[1:]):
        counts[a][b] += 1
    out = []
    for row in counts:
        s = sum(row)
        out.append([c / s if s else 0.0 for c in row])
    return out


def mtf(x, q):
    bins = quantile_bins(x, q)
    w = markov(bins, q)
    return bins, w, [[w[bi][bj] for bj in bins] for bi in bins]


def blur(m, size):
    n = len(m)
    step = -(-n // size)
    out_n = -(-n // step)
    out = []
    for a in range(out_n):
        row = []
        for b in range(out_n):
            cells = [m[i][j]
                     for i in range(a * step, min((a + 1) * step, n))
                     for j in range(b * step, min((b + 1) * step, n))]
            row.append(sum(cells) / len(cells))
        out.append(row)
    return out


def show(name, m):
    print(name)
    for row in m:
        print("  " + ", ".join(f"{v:.5f}" for v in row))


if __name__ == "__main__":
    x = [1.0, 0.5, 0.0]
    show("GASF [1,0.5,0]", gasf_trig(x))
    show("GADF [1,0.5,0]", gadf_trig(x))
    show("GADF [0,1]", gadf_trig([0.0, 1.0]))
    print("diag-inverse", [math.sqrt((g + 1) / 2) for g in [1.0, -0.5, -1.0]])
    bins, w, m = mtf([1, 2, 1, 2], 2)
    print("bins", bins)
    show("W", w)
    show("MTF", m)
    show("blur S=2", blur(m, 2))
    print("bins [4,1,3,2] Q=2", quantile_bins([4, 1, 3, 2], 2))
    print("bins [5,5,5,5] Q=2", quantile_bins([5, 5, 5, 5], 2))
    print("bins [1,2,3,4] Q=4", quantile_bins([1, 2, 3, 4], 4))
    show("W [0,0,0]", markov([0, 0, 0], 2))
    n5 = [[float(i * 5 + j) for j in range(5)] for i in range(5)]
    show("blur 5x5 S=2", blur(n5, 2))
    print("png 0 ->", math.floor((0 + 1) / 2 * 255 + 0.5))
    print("paa [1..5] S=2", [sum([1, 2]) / 2, sum([3, 4, 5]) / 3])

    def close(a, b):
        return all(abs(u - v) <= 0.5e-5 for ra, rb in zip(a, b) for u, v in zip(ra, rb))

    assert close(gasf_trig(x), [[1, 0.5, 0], [0.5, -0.5, -0.86603], [0, -0.86603, -1]])
    assert close(gadf_trig(x), [[0, -0.86603, -1], [0.86603, 0, -0.5], [1, 0.5, 0]])
    assert close(gadf_trig([0.0, 1.0]), [[0, 1], [-1, 0]])
    assert bins == [0, 1, 0, 1] and w == [[0, 1], [1, 0]]
    assert close(blur(m, 2), [[0.5, 0.5], [0.5, 0.5]])
    print("all frozen constants agree")
