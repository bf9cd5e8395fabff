#!/usr/bin/env python3
# Copyright 2026 The lorentz-harmonics Authors. All rights reserved.
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
"""Freezes mpmath reference values into tests/data.

Run once; the outputs are checked in. Needs mpmath only.
"""

import argparse
import json
import os

import mpmath as mp

mp.mp.dps = 60


def log_phase(z):
    z = mp.mpc(z)
    if z == 0:
        return None, 0.0
    return float(mp.log(abs(z))), float(mp.arg(z))


def diagonal(j, m, tau, eps):
    e = mp.mpf(eps)
    it = 1j * mp.mpc(tau) * j / 2
    f = mp.hyp2f1(j + 1 + it, m + j + 1, 2 * j + 2, 1 - e**4)
    return mp.exp(2 * (m + j + 1 + it) * mp.log(e)) * f


def watson(j, m, tau, eps, sign=-1):
    e = mp.mpf(eps)
    it = 1j * mp.mpc(tau) * j / 2

    def power(x, p):
        if x < 0:
            return mp.exp(p * (mp.log(-x) + sign * 1j * mp.pi))
        return mp.exp(p * mp.log(x))

    v = power(e**4 - 1, -(1 + j + it)) * mp.power(2, 1 + 2 * it) * mp.gamma(2 + 2 * j)
    v *= mp.sqrt(mp.pi) * mp.power(j, -0.5) / (mp.gamma(m + 1 + j) * mp.gamma(1 - m + j))
    v *= power((e**2 - 1) / (e**2 + 1), 1 + it + j)
    v *= mp.power(2 / (e**2 + 1), -0.5 - it + m) * mp.power(2 * e**2 / (e**2 + 1), -m - it - 0.5)
    return v * mp.exp(2 * (m + j + 1 + it) * mp.log(e))


def wigner_small_d(tj, tm, tn, beta):
    # Factorial sum d^j_{m n}(beta) in the usual sign convention; independent
    # of the Jacobi form used by the library.
    jpm, jmm = (tj + tm) // 2, (tj - tm) // 2
    jpn, jmn = (tj + tn) // 2, (tj - tn) // 2
    dmn = (tm - tn) // 2
    c, s = mp.cos(mp.mpf(beta) / 2), mp.sin(mp.mpf(beta) / 2)
    pref = mp.sqrt(mp.factorial(jpm) * mp.factorial(jmm) * mp.factorial(jpn) * mp.factorial(jmn))
    total = mp.mpf(0)
    for k in range(0, tj + 1):
        args = (jpn - k, k, dmn + k, jmm - k)
        if min(args) < 0:
            continue
        den = mp.fprod(mp.factorial(x) for x in args)
        total += (-1) ** (dmn + k) * c ** (tj - dmn - 2 * k) * s ** (dmn + 2 * k) / den
    return pref * total


def grid_hyp(out):
    rows = []
    js = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 100, 200, 400]
    taus = [0, 0.3, 0.5, complex(1, 0.2)]
    epss = [0.2, 0.3, 0.5, 2, 4, 5]
    for j in js:
        ms = sorted({0, 1 if j >= 1 else 0, j // 2, j, -j, -(j // 2)})
        for m in ms:
            for tau in taus:
                for eps in epss:
                    lm, ph = log_phase(diagonal(j, m, tau, eps))
                    t = complex(tau)
                    rows.append({"j": j, "m": m, "tau_re": t.real, "tau_im": t.imag,
                                 "epsilon": eps, "log_mag": lm, "phase": ph})
    out["diagonal"] = rows


def grid_watson(out):
    rows = []
    for j in [8, 16, 32, 64, 128]:
        for m in [0, 1, 3]:
            for tau in [0, 0.5]:
                for eps in [0.5, 2]:
                    lm, ph = log_phase(watson(j, m, tau, eps))
                    rows.append({"j": j, "m": m, "tau": tau, "epsilon": eps,
                                 "log_mag": lm, "phase": ph})
    out["watson"] = rows


def grid_ratios(out):
    # |D_{j+1}/D_j| near j = 200 and boundary-track ratios.
    rows = []
    for eps in [0.5, 2]:
        for tau in [0, 0.5]:
            for m in [0, 1, 3]:
                a = abs(diagonal(200, m, tau, eps))
                b = abs(diagonal(201, m, tau, eps))
                rows.append({"kind": "diagonal", "j": 200, "m": m, "tau": tau, "epsilon": eps,
                             "ratio": float(b / a)})
            for track in ["m_equals_j", "m_equals_zero"]:
                def term(j):
                    if track == "m_equals_j":
                        return (j + 1) * abs(diagonal(j, j, tau, eps))
                    return j * abs(diagonal(j, 0, tau, eps))
                rows.append({"kind": track, "j": 200, "tau": tau, "epsilon": eps,
                             "ratio": float(term(201) / term(200))})
    out["ratios"] = rows


def grid_wigner(out):
    rows = []
    for tj in [0, 1, 2, 3, 4, 7, 8, 15, 40]:
        for tm in range(-tj, tj + 1, 2):
            for tn in range(-tj, tj + 1, 2):
                if tj > 8 and (tm, tn) not in [(tj, tj), (1 if tj % 2 else 0, -tj), (tj - 2, 2 - tj if tj % 2 == 0 else 3 - tj)]:
                    continue
                for beta in [0.3, 1.1, 2.7]:
                    rows.append({"twice_j": tj, "twice_m": tm, "twice_n": tn, "beta": beta,
                                 "value": float(wigner_small_d(tj, tm, tn, beta))})
    out["wigner_d"] = rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--output", default=os.path.join(os.path.dirname(__file__), "..", "data",
                                                        "reference.json"))
    args = ap.parse_args()
    out = {"generator": "mpmath " + mp.__version__, "dps": mp.mp.dps}
    grid_wigner(out)
    grid_watson(out)
    grid_ratios(out)
    grid_hyp(out)
    with open(args.output, "w") as f:
        json.dump(out, f, indent=1)


if __name__ == "__main__":
    main()
