#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "derived_values.hpp"
#include "fstdp/analytics.hpp"
#include "fstdp/datagen.hpp"
#include "fstdp/error.hpp"

using namespace fstdp;

namespace {

SpikeRaster bernoulli(const std::vector<double>& probs, std::size_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SpikeRaster r(probs.size(), steps);
    for (std::size_t i = 0; i < probs.size(); ++i)
        for (std::size_t t = 0; t < steps; ++t) r.set(i, t, u(rng) < probs[i]);
    return r;
}

const SpikeRaster& two_group_raster() {
    static const SpikeRaster r = [] {
        ProcessSpec ps;
        ps.n_channels = 100;
        ps.n_steps = 100000;
        ps.rates.assign(100, 5.0);
        for (std::size_t i = 0; i < 10; ++i) {
            ps.rates[i] = 1.0;
            ps.correlated_set.push_back(i);
        }
        ps.c = 0.1;
        ps.seed = 2;
        return generate_correlated_binary(ps);
    }();
    return r;
}

std::vector<bool> two_group_labels() {
    std::vector<bool> l(100, false);
    std::fill(l.begin(), l.begin() + 10, true);
    return l;
}

std::vector<std::size_t> ranking(const std::vector<double>& scores) {
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return scores[a] > scores[b]; });
    return idx;
}

}  // namespace

TEST_CASE("uncentered covariance") {
    const auto r = bernoulli({0.1, 0.5}, 100000, 1);
    const auto m = uncentered_cov(r);
    CHECK(m.kind == CovKind::uncentered);
    CHECK(m.at(0, 1) == doctest::Approx(0.05).epsilon(0.05));
    CHECK(m.at(0, 0) == doctest::Approx(r.mean(0)).epsilon(1e-14));
    CHECK(m.at(1, 1) == doctest::Approx(r.mean(1)).epsilon(1e-14));
    CHECK(m.at(0, 1) == m.at(1, 0));
}

TEST_CASE("normalized covariance") {
    const auto r = bernoulli({0.1, 0.3, 0.02}, 1000000, 2);
    const auto m = normalized_cov(r);
    CHECK(m.kind == CovKind::normalized);
    // relative sd of the estimate is about 1/sqrt(joint count)
    CHECK(m.at(0, 1) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(m.at(0, 2) == doctest::Approx(1.0).epsilon(0.1));
    CHECK(m.at(0, 0) == doctest::Approx(1.0 / r.mean(0)).epsilon(1e-12));
    CHECK(m.at(0, 0) == doctest::Approx(10.0).epsilon(0.02));
}

TEST_CASE("normalized covariance of a correlated pair matches the closed form") {
    ProcessSpec ps;
    ps.n_channels = 2;
    ps.n_steps = 100000;
    ps.rates = {1.0, 1.0};
    ps.correlated_set = {0, 1};
    ps.c = 0.1;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ps.seed = seed;
        const auto m = normalized_cov(generate_correlated_binary(ps));
        CHECK(std::abs(m.at(0, 1) - oracle::kNormcovCorrelatedPair) <= 0.1);
    }
}

TEST_CASE("zero-rate channels give zero rows and a flag") {
    auto r = bernoulli({0.2, 0.0, 0.3}, 1000, 3);
    const auto m = normalized_cov(r);
    REQUIRE(m.has_zero_rate_channels());
    CHECK(m.zero_rate_channels == std::vector<std::size_t>{1});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(m.at(1, j) == 0.0);
        CHECK(m.at(j, 1) == 0.0);
    }
    CHECK_FALSE(normalized_cov(bernoulli({0.2, 0.3}, 1000, 3)).has_zero_rate_channels());
}

TEST_CASE("matrices are symmetric, non-negative and permutation-equivariant") {
    const auto r = bernoulli({0.05, 0.1, 0.2, 0.4}, 5000, 4);
    const std::vector<std::size_t> perm{2, 0, 3, 1};
    SpikeRaster p(4, 5000);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t t = 0; t < 5000; ++t) p.set(i, t, r.at(perm[i], t));
    for (auto f : {+[](const SpikeRaster& x) { return uncentered_cov(x); },
                   +[](const SpikeRaster& x) { return normalized_cov(x); }}) {
        const auto m = f(r);
        const auto mp = f(p);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(m.at(i, j) == m.at(j, i));
                CHECK(m.at(i, j) >= 0.0);
                CHECK(mp.at(i, j) == doctest::Approx(m.at(perm[i], perm[j])).epsilon(1e-12));
            }
    }
}

TEST_CASE("normalized covariance is rate invariant, uncentered scales with k^2") {
    const auto base = bernoulli({0.2, 0.2}, 200000, 5);
    const auto thin = bernoulli({0.05, 0.05}, 200000, 6);
    CHECK(normalized_cov(base).at(0, 1) == doctest::Approx(1.0).epsilon(0.03));
    CHECK(normalized_cov(thin).at(0, 1) == doctest::Approx(1.0).epsilon(0.03));
    const double ratio = uncentered_cov(base).at(0, 1) / uncentered_cov(thin).at(0, 1);
    CHECK(ratio == doctest::Approx(16.0).epsilon(0.10));
}

TEST_CASE("two-group raster: covariance structure") {
    const auto& r = two_group_raster();
    const auto labels = two_group_labels();
    const auto nc = normalized_cov(r);
    double lo = 1e9, hi = -1e9;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            lo = std::min(lo, nc.at(i, j));
            hi = std::max(hi, nc.at(i, j));
        }
    CHECK(lo >= 1.8);
    CHECK(hi <= 2.0);
    CHECK(block_mean(nc, labels, false, false) == doctest::Approx(1.0).epsilon(0.05));

    // Uncentered: rate products of the fast channels dominate.
    const auto uc = uncentered_cov(r);
    double max_corr = 0.0, max_fast = 0.0;
    for (std::size_t i = 0; i < 100; ++i)
        for (std::size_t j = i + 1; j < 100; ++j) {
            if (labels[i] && labels[j]) max_corr = std::max(max_corr, uc.at(i, j));
            else if (!labels[i] && !labels[j]) max_fast = std::max(max_fast, uc.at(i, j));
        }
    CHECK(max_fast > max_corr);
}

TEST_CASE("covariance with the mean input") {
    SpikeRaster same(4, 1000);
    for (std::size_t t = 0; t < 1000; t += 3)
        for (std::size_t i = 0; i < 4; ++i) same.set(i, t, true);
    for (bool norm : {false, true}) {
        const auto s = cov_with_mean_input(same, norm);
        for (double v : s) CHECK(v == doctest::Approx(s[0]));
    }

    const auto& r = two_group_raster();
    const auto raw = ranking(cov_with_mean_input(r, false));
    const auto norm = ranking(cov_with_mean_input(r, true));
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(raw[k] >= 10);  // fast uncorrelated channels on top
        CHECK(norm[k] < 10);  // the correlated group on top
    }
}

TEST_CASE("separation metrics") {
    std::vector<double> w(10, 0.1);
    std::vector<bool> labels(10, false);
    for (std::size_t i = 0; i < 3; ++i) {
        w[i] = 0.9;
        labels[i] = true;
    }
    auto s = separation_metrics(w, labels);
    CHECK(s.gap == doctest::Approx(0.8));
    CHECK(s.auc == 1.0);
    CHECK(s.mean_correlated == doctest::Approx(0.9));
    CHECK(s.mean_uncorrelated == doctest::Approx(0.1));

    std::vector<double> flat(10, 0.5);
    CHECK(separation_metrics(flat, labels).auc == 0.5);

    CHECK_THROWS_AS(separation_metrics(w, std::vector<bool>(10, true)), InvalidInput);
    CHECK_THROWS_AS(separation_metrics(w, std::vector<bool>(9, false)), InvalidInput);
}

TEST_CASE("AUC is invariant under strictly increasing transforms") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> w(30);
        std::vector<bool> labels(30);
        for (std::size_t i = 0; i < 30; ++i) {
            w[i] = std::round(u(rng) * 10) / 10;  // include ties
            labels[i] = i % 3 == 0;
        }
        std::vector<double> tw(30);
        std::transform(w.begin(), w.end(), tw.begin(), [](double x) { return std::exp(3 * x) + x * x * x; });
        const double a = separation_metrics(w, labels).auc;
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
        CHECK(separation_metrics(tw, labels).auc == doctest::Approx(a).epsilon(1e-12));
    }
}
