#pragma once

#include <string>
#include <vector>

#include "debunk/embedding.hpp"

namespace debunk {

// Normalized bag of words over in-vocabulary words.
struct NBow {
  std::vector<std::string> words;  // vocabulary keys, first-occurrence order
  std::vector<double> weights;     // sum to 1

  friend bool operator==(const NBow&, const NBow&) = default;
};

class EmptyDistribution : public Error {
 public:
  using Error::Error;
};

// Counts in-vocabulary tokens and normalizes. Out-of-vocabulary tokens are
// dropped and counted into *oov when given. Throws EmptyDistribution when
// nothing is left.
NBow nbow(const std::vector<std::string>& tokens, const EmbeddingTable& table,
          std::size_t* oov = nullptr);

// Word Mover's Distance with Euclidean ground distance, solved exactly.
double wmd(const NBow& a, const NBow& b, const EmbeddingTable& table);

// Distance between the weighted centroids; never exceeds wmd(a, b).
double wcd_lower_bound(const NBow& a, const NBow& b, const EmbeddingTable& table);

double euclidean(std::span<const double> x, std::span<const double> y);

}  // namespace debunk
