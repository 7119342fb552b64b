#include "debunk/wmd.hpp"

#include <cmath>
#include <unordered_map>

#include "debunk/transport.hpp"

namespace debunk {

NBow nbow(const std::vector<std::string>& tokens, const EmbeddingTable& table, std::size_t* oov) {
  NBow out;
  std::unordered_map<std::string, std::size_t> slot;
  std::size_t counted = 0;
  for (const auto& tok : tokens) {
    auto key = table.resolve(tok);
    if (!key) {
      if (oov) ++*oov;
      continue;
    }
    auto [it, inserted] = slot.emplace(*key, out.words.size());
    if (inserted) {
      out.words.push_back(*key);
      out.weights.push_back(0.0);
    }
    out.weights[it->second] += 1.0;
    ++counted;
  }
  if (counted == 0) throw EmptyDistribution("no in-vocabulary tokens");
  for (auto& w : out.weights) w /= static_cast<double>(counted);
  return out;
}

double euclidean(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double wmd(const NBow& a, const NBow& b, const EmbeddingTable& table) {
  const std::size_t m = a.words.size(), n = b.words.size();
  std::vector<double> cost(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    auto x = table.vector(a.words[i]);
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = euclidean(x, table.vector(b.words[j]));
  }
  return std::max(0.0, solve_transport(a.weights, b.weights, cost).cost);
}

double wcd_lower_bound(const NBow& a, const NBow& b, const EmbeddingTable& table) {
  std::vector<double> diff(table.dim(), 0.0);
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    auto x = table.vector(a.words[i]);
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] += a.weights[i] * x[k];
  }
  for (std::size_t j = 0; j < b.words.size(); ++j) {
    auto y = table.vector(b.words[j]);
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= b.weights[j] * y[k];
  }
  double s = 0.0;
  for (double d : diff) s += d * d;
  return std::sqrt(s);
}

}  // namespace debunk
