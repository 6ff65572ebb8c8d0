#pragma once

// Generated by derive.py; do not edit by hand.
namespace oracle {
inline constexpr double kLeakOneStep = 0.6065306597126334;
inline constexpr double kEfficacyAfterFiveSteps = 0.31606027941427883;
inline constexpr double kFatigueAfterFiveSteps = 0.36787944117144233;
inline constexpr double kKernelAtPlusTwo = -0.004414553294057308;
inline constexpr double kAsymmetryLegacy = -0.004;
inline constexpr double kAsymmetryDefault = -0.013000000000000001;
inline constexpr double kDiscreteSumLegacy = 0.006917011834926403;
inline constexpr double kDiscreteSumDefault = -1.9711536489188525e-05;
inline constexpr double kNormcovCorrelatedPair = 1.9;
inline constexpr double kQSlowChannel = 0.002173913043478261;
inline constexpr double kFatigueSaturated = 0.8187307530779818;
inline constexpr double kFatigue5HzExact = 0.6930941063701715;
inline constexpr double kFatigue1HzExact = 0.31113609781209584;
inline constexpr double kFatigue5HzBrute = 0.693406823554836;
inline constexpr double kMixMother = 0.11667660568094934;
inline constexpr double kMixBackground = 0.06552110954974466;
inline constexpr double kMixMarginalCheck = 0.09999999999999998;
inline constexpr double kMixCorrelationCheck = 0.0999999999999978;
inline constexpr double kRatioStdp = 1.3000351367264376;
inline constexpr double kRatioFstdp = 0.5791977836550504;
}  // namespace oracle
