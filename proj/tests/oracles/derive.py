#!/usr/bin/env python3
"""Independent reference values for the unit tests.

Everything here is computed with the standard library only, without the C++
code. Run it to regenerate derived_values.hpp:

    python3 tests/oracles/derive.py > tests/oracles/derived_values.hpp
"""
import math
import random


def leak(v, tau_m):
    return v * math.exp(-1.0 / tau_m)


def pre_jump_fatigue_exact(x, tau_f):
    # Renewal argument: F resets to 1 at every spike, so the pre-jump level
    # at a step is d^k where k is the number of steps since the last spike.
    d = math.exp(-1.0 / tau_f)
    return x * d / (1.0 - (1.0 - x) * d)


def pre_jump_fatigue_brute(x, tau_f, steps, seed):
    rng = random.Random(seed)
    d = math.exp(-1.0 / tau_f)
    f = 0.0
    acc = 0.0
    for _ in range(200):
        f *= d
        if rng.random() < x:
            f = 1.0
    for _ in range(steps):
        f *= d
        acc += f
        if rng.random() < x:
            f = min(1.0, f + 1.0)
    return acc / steps


def mixing(p, c):
    s = math.sqrt(c)
    a = (1 - p) + p * c
    b = (1 - p) + 2 * p * s
    pm = (b - math.sqrt(b * b - 4 * a * p)) / (2 * a)
    pb = 1 - (1 - p) / (1 - pm * s)
    return pm, pb


def mixing_corr_from_params(pm, pb, c):
    s = math.sqrt(c)
    p = 1 - (1 - pb) * (1 - pm * s)
    # P(both fire) = 1 - P(i off) - P(j off) + P(both off)
    both_off = (1 - pb) ** 2 * ((1 - pm) + pm * (1 - s) ** 2)
    joint = 1 - 2 * (1 - p) + both_off
    return p, (joint - p * p) / (p * (1 - p))


def discrete_kernel_sum(ap, am, tp, tm):
    dp = math.exp(-1 / tp)
    dm = math.exp(-1 / tm)
    return ap / (1 - dp) - am * dm / (1 - dm)


def theory_ratios(v_th, w, c, n_corr, r_corr, r_unc, dt, tau_f):
    f_corr = pre_jump_fatigue_exact(r_corr * dt, tau_f)
    f_unc = pre_jump_fatigue_exact(r_unc * dt, tau_f)
    s = math.sqrt(c)
    n_stdp = (n_corr - 1) * s * w
    n_fstdp = (n_corr - 1) * s * w * (1 - f_corr)
    stdp = (r_unc * w) / (r_corr * (w + n_stdp))
    fstdp = (r_unc * w * (1 - f_unc)) / (r_corr * (w * (1 - f_corr) + n_fstdp))
    return stdp, fstdp


def main():
    vals = {}
    vals["kLeakOneStep"] = leak(1.0, 2.0)
    vals["kEfficacyAfterFiveSteps"] = 0.5 * (1 - math.exp(-1))
    vals["kFatigueAfterFiveSteps"] = math.exp(-1)
    vals["kKernelAtPlusTwo"] = -0.012 * math.exp(-1)
    vals["kAsymmetryLegacy"] = 0.01 * 2 - 0.012 * 2
    vals["kAsymmetryDefault"] = 0.01 * 2 - 0.0165 * 2
    vals["kDiscreteSumLegacy"] = discrete_kernel_sum(0.01, 0.012, 2, 2)
    vals["kDiscreteSumDefault"] = discrete_kernel_sum(0.01, 0.0165, 2, 2)
    vals["kNormcovCorrelatedPair"] = 1 + 0.1 * (1 - 0.1) / 0.1
    vals["kQSlowChannel"] = 1.0 / (10 * 1 + 90 * 5)
    vals["kFatigueSaturated"] = math.exp(-1 / 5)
    vals["kFatigue5HzExact"] = pre_jump_fatigue_exact(0.5, 5)
    vals["kFatigue1HzExact"] = pre_jump_fatigue_exact(0.1, 5)
    vals["kFatigue5HzBrute"] = pre_jump_fatigue_brute(0.5, 5, 1_000_000, 7)
    pm, pb = mixing(0.1, 0.1)
    vals["kMixMother"] = pm
    vals["kMixBackground"] = pb
    p, corr = mixing_corr_from_params(pm, pb, 0.1)
    vals["kMixMarginalCheck"] = p
    vals["kMixCorrelationCheck"] = corr
    stdp, fstdp = theory_ratios(18.0105, 0.5, 0.1, 10, 1.0, 5.0, 0.1, 5)
    vals["kRatioStdp"] = stdp
    vals["kRatioFstdp"] = fstdp

    print("#pragma once")
    print()
    print("// Generated by derive.py; do not edit by hand.")
    print("namespace oracle {")
    for k, v in vals.items():
        print(f"inline constexpr double {k} = {v!r};")
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
