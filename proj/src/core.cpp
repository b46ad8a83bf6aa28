#include "lrw/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lrw {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty() || text == "[]" || text == "-") return out;
  if (text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw invalid_input("cannot parse integer list '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

void generate_partitions(int remaining, int max_part, std::vector<int>& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

void generate_contained(const Partition& outer, std::size_t row, int cap,
                        std::vector<int>& current, std::vector<Partition>& out) {
  out.emplace_back(current);
  if (row >= static_cast<std::size_t>(outer.length())) return;
  for (int part = std::min(cap, outer[row]); part >= 1; --part) {
    current.push_back(part);
    generate_contained(outer, row + 1, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw invalid_input("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw invalid_input("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int size(const Partition& p) { return p.size(); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
  for (int row : p.parts())
    for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  if (text == "0") return {};
  return Partition(parse_int_list(text));
}

bool size_then_lex_greater(const Partition& a, const Partition& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa > sb;
  return a > b;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  generate_partitions(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> partitions_contained_in(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> current;
  generate_contained(outer, 0, outer.empty() ? 0 : outer[0], current, out);
  return out;
}

DominantWeight::DominantWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw invalid_input("weight rank must be positive");
  for (int c : coeffs_)
    if (c < 0) throw invalid_input("dominant weight coefficients must be nonnegative");
}

std::string to_string(const DominantWeight& w) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[static_cast<std::size_t>(i)]);
  }
  return s + "@rank=" + std::to_string(w.rank());
}

DominantWeight parse_weight(std::string_view text) {
  auto at = text.find('@');
  auto coeffs = parse_int_list(text.substr(0, at));
  if (at != std::string_view::npos) {
    auto suffix = text.substr(at + 1);
    constexpr std::string_view key = "rank=";
    if (suffix.substr(0, key.size()) != key)
      throw invalid_input("weight suffix must be '@rank=N'");
    auto rank_list = parse_int_list(suffix.substr(key.size()));
    if (rank_list.size() != 1 || rank_list[0] < 1) throw invalid_input("bad weight rank");
    const auto rank = static_cast<std::size_t>(rank_list[0]);
    if (coeffs.size() > rank) throw invalid_input("more weight coefficients than rank");
    coeffs.resize(rank, 0);
  }
  return DominantWeight(std::move(coeffs));
}

bool RootLatticeElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootLatticeElement::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Partition partition_from_weight(const DominantWeight& w) {
  std::vector<int> parts(static_cast<std::size_t>(w.rank()), 0);
  int running = 0;
  for (int k = w.rank() - 1; k >= 0; --k) {
    running += w[static_cast<std::size_t>(k)];
    parts[static_cast<std::size_t>(k)] = running;
  }
  return Partition(std::move(parts));
}

DominantWeight weight_from_partition(const Partition& p, int rank) {
  if (rank < 1) throw invalid_input("rank must be positive");
  if (p.length() > rank)
    throw rank_too_small("partition " + to_string(p) + " has more than " + std::to_string(rank) +
                         " parts");
  std::vector<int> coeffs(static_cast<std::size_t>(rank), 0);
  for (int k = 0; k < rank; ++k) coeffs[static_cast<std::size_t>(k)] = p[k] - p[k + 1];
  return DominantWeight(std::move(coeffs));
}

}  // namespace lrw
