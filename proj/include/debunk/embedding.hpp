#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "debunk/error.hpp"

namespace debunk {

// word -> dense vector, all of one dimension. Immutable once loaded.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim);

  // Throws Error on a dimension mismatch or duplicate word.
  void add(const std::string& word, std::vector<double> vector);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }

  // Vocabulary key for `word`: the word itself if present, else its
  // lowercase fold if that is present.
  std::optional<std::string> resolve(const std::string& word) const;
  std::span<const double> vector(const std::string& vocab_word) const;
  bool contains(const std::string& word) const { return resolve(word).has_value(); }
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;  // row-major, one row per word
  std::unordered_map<std::string, std::size_t> rows_;
};

// Textual word-vector format: "vocab_size dim" header, then "word v1 ... vdim"
// per line. Throws ParseError with the offending line number.
EmbeddingTable read_embeddings(std::istream& in);
EmbeddingTable load_embeddings(const std::filesystem::path& path);

}  // namespace debunk
