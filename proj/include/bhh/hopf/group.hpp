#pragma once

#include <string>
#include <vector>

#include "bhh/hopf/finhopf.hpp"

namespace bhh {

/// Finite group by multiplication table. Validated on construction.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
  static GroupTable product(const GroupTable& a, const GroupTable& b);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t conjugacy_classes() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// kG with g group-like and S(g) = g^{-1}.
FinHopf group_algebra(const GroupTable& g, const FieldSpec& f);

}  // namespace bhh
