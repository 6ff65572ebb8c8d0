#include <algorithm>
#include <limits>
#include <set>

#include "fstdp/error.hpp"
#include "fstdp/ingest.hpp"
#include "fstdp/random.hpp"

namespace fstdp {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return d;
}

std::size_t nearest(const std::vector<double>& x, const std::vector<std::vector<double>>& centroids) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double d = sq_dist(x, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

KMeansResult cluster_stations(const std::vector<std::vector<double>>& features, std::size_t k,
                              std::uint64_t seed) {
    if (k < 2) throw InvalidInput("k-means needs k >= 2");
    if (features.empty()) throw InvalidInput("k-means needs points");
    const std::size_t dim = features.front().size();
    for (const auto& f : features)
        if (f.size() != dim) throw DimensionError("feature vectors differ in dimension");
    const std::set<std::vector<double>> distinct(features.begin(), features.end());
    if (distinct.size() < k)
        throw InvalidInput("only " + std::to_string(distinct.size()) + " distinct points for k=" + std::to_string(k));

    const std::size_t n = features.size();
    auto rng = make_stream(seed, 0);

    // k-means++ seeding.
    std::vector<std::vector<double>> centroids;
    centroids.push_back(features[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n))]);
    std::vector<double> d2(n);
    while (centroids.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = sq_dist(features[i], centroids[nearest(features[i], centroids)]);
            total += d2[i];
        }
        double target = uniform01(rng) * total;
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (d2[i] <= 0.0) continue;
            pick = i;
            target -= d2[i];
            if (target < 0.0) break;
        }
        centroids.push_back(features[pick]);
    }

    KMeansResult res;
    res.labels.assign(n, -1);
    for (std::size_t iter = 0; iter < kKMeansMaxIterations; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const int c = static_cast<int>(nearest(features[i], centroids));
            if (c != res.labels[i]) {
                res.labels[i] = c;
                changed = true;
            }
        }
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(res.labels[i]);
            ++counts[c];
            for (std::size_t d = 0; d < dim; ++d) sums[c][d] += features[i][d];
        }
        for (std::size_t c = 0; c < k; ++c)
            if (counts[c] > 0)
                for (std::size_t d = 0; d < dim; ++d) centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);

        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            inertia += sq_dist(features[i], centroids[static_cast<std::size_t>(res.labels[i])]);
        res.inertia_history.push_back(inertia);
        res.iterations = iter + 1;
        if (!changed) {
            res.converged = true;
            break;
        }
    }
    res.centroids = std::move(centroids);
    return res;
}

}  // namespace fstdp
