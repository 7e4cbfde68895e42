#pragma once

// Hereditarily finite sets over named atoms, with extensional equality.

#include <memory>
#include <string>
#include <vector>

namespace illation {

class HFSet {
 public:
  static HFSet atom(std::string name);
  // Duplicates (up to extensional equality) are dropped; the first occurrence is kept.
  static HFSet set(std::vector<HFSet> elements);
  static HFSet empty() { return set({}); }

  bool is_atom() const { return atom_; }
  const std::string& name() const { return name_; }
  const std::vector<HFSet>& elements() const { return *elements_; }
  std::size_t cardinality() const { return atom_ ? 0 : elements_->size(); }
  bool contains(const HFSet& x) const;

  std::string to_string() const;

 private:
  bool atom_ = false;
  std::string name_;
  std::shared_ptr<const std::vector<HFSet>> elements_;
};

bool hf_equal(const HFSet& a, const HFSet& b);

// {{{x}, {}}, {y}}
HFSet wiener_pair(const HFSet& x, const HFSet& y);

}  // namespace illation
