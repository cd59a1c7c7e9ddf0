#include "hookforest/degree_sequence.hpp"

#include <numeric>
#include <sstream>

namespace hookforest {

namespace {

void trim(std::vector<long long>& counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

long long trees_of(const std::vector<long long>& counts) {
  long long ell = 0;
  for (std::size_t d = 0; d < counts.size(); ++d)
    ell -= (static_cast<long long>(d) - 1) * counts[d];
  return ell;
}

}  // namespace

bool DegreeSequence::counts_valid(const std::vector<long long>& counts) {
  long long total = 0;
  for (long long c : counts) {
    if (c < 0) return false;
    total += c;
  }
  if (total == 0) return false;
  long long internal = total - (counts.empty() ? 0 : counts[0]);
  if (internal >= 1 && (counts.empty() || counts[0] == 0)) return false;
  return trees_of(counts) >= 1;
}

DegreeSequence DegreeSequence::from_counts(std::vector<long long> counts) {
  trim(counts);
  if (!counts_valid(counts)) {
    std::string text;
    for (std::size_t i = 0; i < counts.size(); ++i)
      text += (i ? "," : "") + std::to_string(counts[i]);
    throw error("unrealizable degree sequence: (" + text + ")");
  }
  DegreeSequence r;
  r.counts_ = std::move(counts);
  return r;
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::vector<long long> counts;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw error("malformed degree sequence entry: \"" + item + "\"");
    }
    if (pos != item.size()) throw error("malformed degree sequence entry: \"" + item + "\"");
    counts.push_back(value);
  }
  if (counts.empty()) throw error("empty degree sequence text");
  return from_counts(std::move(counts));
}

long long DegreeSequence::count(long long degree) const {
  if (degree < 0 || degree >= static_cast<long long>(counts_.size())) return 0;
  return counts_[static_cast<std::size_t>(degree)];
}

long long DegreeSequence::max_degree() const {
  return static_cast<long long>(counts_.size()) - 1;
}

long long DegreeSequence::internal_count() const {
  long long n = 0;
  for (std::size_t d = 1; d < counts_.size(); ++d) n += counts_[d];
  return n;
}

long long DegreeSequence::num_trees() const { return trees_of(counts_); }

long long DegreeSequence::total_vertices() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

std::string DegreeSequence::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out += (i ? "," : "") + std::to_string(counts_[i]);
  return out;
}

}  // namespace hookforest
