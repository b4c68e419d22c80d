#!/usr/bin/env python3
# Copyright 2026 The cvrepeater Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracles for the frozen fixtures in the C++ unit tests.

Nothing here shares code with the library. Symplectic spectra come from a
dense eigen-decomposition of i*Omega*V, the relay output from the full
block-matrix conditioning formula, and the heralding expectation from an
explicit enumeration of the joint geometric distribution.
"""
from fractions import Fraction
import math

import numpy as np

OMEGA1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
Z = np.diag([1.0, -1.0])
I2 = np.eye(2)


def cm(a, b, c):
    return np.block([[a * I2, c * Z], [c * Z, b * I2]])


def symplectic_oracle(v):
    n = v.shape[0] // 2
    omega = np.kron(np.eye(n), OMEGA1)
    w = np.sort(np.abs(np.linalg.eigvals(1j * omega @ v)))
    return w[::2]


def h(x):
    if x <= 1.0:
        return 0.0
    p, m = (x + 1) / 2, (x - 1) / 2
    return p * math.log2(p) - m * math.log2(m)


def relay_dense(l, r):
    (a1, b1, c1), (a2, b2, c2) = l, r
    # modes ordered (a1, b2, b1, a2)
    blocks = {}
    full = np.zeros((8, 8))
    def put(i, j, m):
        full[2 * i:2 * i + 2, 2 * j:2 * j + 2] = m
        full[2 * j:2 * j + 2, 2 * i:2 * i + 2] = m.T
    put(0, 0, a1 * I2); put(1, 1, b2 * I2); put(2, 2, b1 * I2); put(3, 3, a2 * I2)
    put(0, 2, c1 * Z); put(1, 3, c2 * Z)
    vab = full[:4, :4]
    c_1 = full[:4, 4:6]
    c_2 = full[:4, 6:8]
    B = full[4:6, 4:6]
    D = full[4:6, 6:8]
    A = full[6:8, 6:8]
    ups = 0.5 * (Z @ B @ Z + A - Z @ D - D.T @ Z)
    w = [np.array([[0.0, 1.0], [1.0, 0.0]]), np.array([[0.0, 1.0], [-1.0, 0.0]])]
    cs = [c_1, c_2]
    acc = np.zeros((4, 4))
    for j in range(2):
        for k in range(2):
            acc += cs[j] @ (w[j].T @ ups @ w[k]) @ cs[k].T
    return vab - acc / (2 * np.linalg.det(ups))


def nla(mu, eta, xi, g):
    k = eta * (g * g - 1)
    l2 = (mu - 1) / (mu + 1) * (2 - k * (xi - 2)) / (2 - k * xi)
    lam = math.sqrt(l2) if l2 >= 0 else float('nan')
    mug = (1 + l2) / (1 - l2)
    etag = eta * g * g / (1 + eta * g * g * (k * (xi - 2) * xi / 4 - xi + 1))
    xig = xi - k * (xi - 2) * xi / 2
    return lam, mug, etag, xig


def expected_max_geometric(p, n, tail=1e-12):
    q = 1 - p
    total = 0.0
    k = 1
    while True:
        cdf_k = (1 - q ** k) ** n
        cdf_km1 = (1 - q ** (k - 1)) ** n
        total += k * (cdf_k - cdf_km1)
        if 1 - cdf_k < tail:
            return total
        k += 1


def main():
    np.set_printoptions(precision=17)
    v = cm(3.0, 2.6, math.sqrt(6.4))
    nm, npl = symplectic_oracle(v)
    print("lossy tmsv spectrum", repr(nm), repr(npl))
    print("  CI (h(b)-..)", repr(h(2.6) - h(nm) - h(npl)),
          " RCI (h(a)-..)", repr(h(3.0) - h(nm) - h(npl)))
    v = cm(3.0, 2.61, math.sqrt(6.4))
    nm2, np2 = symplectic_oracle(v)
    print("  xi=0.01 RCI", repr(h(3.0) - h(nm2) - h(np2)))

    print("nla (3, 0.01, 0, 10.05)", [repr(x) for x in nla(3, 0.01, 0, 10.05)])
    print("nla (3, 0.01, 0, 10.0)", [repr(x) for x in nla(3, 0.01, 0, 10.0)])
    # witness scan for lambda_g >= 1 at (eta, xi) = (0.9, 0.2)
    for mu in (2.0, 5.0, 10.0):
        for g in (1.5, 2.0, 2.5, 3.0):
            lam = nla(mu, 0.9, 0.2, g)[0]
            if lam == lam and lam >= 1:
                print("witness", mu, g, repr(lam))
                break
    print("boundary g for mu=3, eta=0.01:", repr(math.sqrt(1 + 1 / 0.01)))

    # exact rational recursion on (a, b, c^2) for tmsv(3): c^2 = mu^2 - 1 = 8
    a, b, c2 = Fraction(3), Fraction(3), Fraction(8)
    for _ in range(2):
        k = c2 / (a + b)
        a, b, c2 = a - k, b - k, k * k
    print("depth-2 tmsv(3):", a, b, "c^2 =", c2)

    rng = np.random.default_rng(20260101)
    for _ in range(3):
        trip = []
        for _ in range(2):
            x, y = 1 + 9 * rng.random(2)
            cmax = math.sqrt((min(x, y) - 1) * (max(x, y) + 1))
            trip.append((x, y, cmax * rng.random()))
        out = relay_dense(*trip)
        print("relay", [tuple(repr(float(t)) for t in tr) for tr in trip],
              "->", repr(out[0, 0]), repr(out[2, 2]), repr(out[0, 2]),
              "offstd", float(np.max(np.abs(out - cm(out[0, 0], out[2, 2], out[0, 2])))))

    print("E[max G1,G2] p=1/2:", repr(expected_max_geometric(0.5, 2)), "vs 8/3", 8 / 3)
    print("E[max G] p=0.2 N=4:", repr(expected_max_geometric(0.2, 4)))


if __name__ == "__main__":
    main()
