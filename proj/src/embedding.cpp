#include "debunk/embedding.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "debunk/utf8.hpp"

namespace debunk {

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error("embedding dimension must be positive");
}

void EmbeddingTable::add(const std::string& word, std::vector<double> vector) {
  if (dim_ == 0) throw Error("embedding table has no dimension");
  if (vector.size() != dim_)
    throw Error("vector for '" + word + "' has " + std::to_string(vector.size()) +
                " values, expected " + std::to_string(dim_));
  if (!rows_.emplace(word, words_.size()).second) throw Error("duplicate word '" + word + "'");
  words_.push_back(word);
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::optional<std::string> EmbeddingTable::resolve(const std::string& word) const {
  if (rows_.count(word)) return word;
  auto folded = utf8::fold_utf8(word);
  if (folded != word && rows_.count(folded)) return folded;
  return std::nullopt;
}

std::span<const double> EmbeddingTable::vector(const std::string& vocab_word) const {
  auto it = rows_.find(vocab_word);
  if (it == rows_.end()) throw NotFound("word not in embedding table: '" + vocab_word + "'");
  return std::span<const double>(data_).subspan(it->second * dim_, dim_);
}

namespace {

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) out.push_back(f);
  return out;
}

std::optional<double> to_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

EmbeddingTable read_embeddings(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++lineno;
    header = fields(line);
  }
  if (header.empty()) throw ParseError("missing 'vocab_size dim' header", lineno + 1);
  if (header.size() != 2) throw ParseError("header must be 'vocab_size dim'", lineno);
  std::size_t vocab = 0, dim = 0;
  auto parse_size = [&](const std::string& s, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("header field '" + s + "' is not a count", lineno);
  };
  parse_size(header[0], vocab);
  parse_size(header[1], dim);
  if (dim == 0) throw ParseError("dimension must be positive", lineno);

  EmbeddingTable table(dim);
  while (std::getline(in, line)) {
    ++lineno;
    auto f = fields(line);
    if (f.empty()) continue;
    if (table.size() == vocab)
      throw ParseError("more words than the header's " + std::to_string(vocab), lineno);
    if (f.size() != dim + 1)
      throw ParseError("expected word and " + std::to_string(dim) + " values, found " +
                           std::to_string(f.size() - 1) + " values",
                       lineno);
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      auto d = to_double(f[i + 1]);
      if (!d) throw ParseError("bad number '" + f[i + 1] + "'", lineno);
      v[i] = *d;
    }
    try {
      table.add(f[0], std::move(v));
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (table.size() != vocab)
    throw ParseError("header declares " + std::to_string(vocab) + " words, file has " +
                         std::to_string(table.size()),
                     lineno + 1);
  return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings '" + path.string() + "'");
  return read_embeddings(in);
}

}  // namespace debunk
