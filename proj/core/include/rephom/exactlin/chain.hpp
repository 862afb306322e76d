#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rephom/exactlin/sparse_matrix.hpp"

namespace rephom {

// Matrix of a differential leaving the (degree, weight) slice.
struct ChainSlice {
  int degree = 0;
  std::optional<int> weight;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  SparseMatrix matrix;

  ChainSlice() = default;
  ChainSlice(int degree, std::optional<int> weight, SparseMatrix m);
  static ChainSlice zero(int degree, std::optional<int> weight, std::size_t domain, std::size_t codomain);
};

// dim ker(outgoing) - rank(incoming).
std::size_t homology_dimension(const ChainSlice& incoming, const ChainSlice& outgoing);

struct SlotKey {
  int degree;
  std::optional<int> weight;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

struct TrustedRange {
  int degree = 0;
  std::optional<int> weight;
  friend bool operator==(const TrustedRange&, const TrustedRange&) = default;
};

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(TrustedRange trusted);

  void set(int degree, std::optional<int> weight, std::size_t dim);
  std::size_t get(int degree, std::optional<int> weight = std::nullopt) const;
  bool weighted() const { return trusted_.weight.has_value(); }
  bool in_range(int degree, std::optional<int> weight) const;

  const TrustedRange& trusted() const { return trusted_; }
  const std::map<SlotKey, std::size_t>& entries() const { return entries_; }

  // Drops entries outside the new (smaller) range.
  BettiTable restricted(TrustedRange range) const;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  static BettiTable from_json(const std::string& text);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  TrustedRange trusted_;
  std::map<SlotKey, std::size_t> entries_;
};

// Truncated power series in t (homological degree), optionally bigraded by
// weight through the s variable.
struct PoincareSeries {
  std::map<int, std::size_t> coefficients;
  std::map<std::pair<int, int>, std::size_t> bigraded;
  int trusted_degree = 0;

  std::string to_string() const;
  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

PoincareSeries poincare_series(const BettiTable& table);
PoincareSeries series_from_coefficients(std::map<int, std::size_t> coefficients, int trusted_degree);

}  // namespace rephom
