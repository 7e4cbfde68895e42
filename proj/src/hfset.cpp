#include "illation/hfset.hpp"

#include <algorithm>

namespace illation {

HFSet HFSet::atom(std::string name) {
  HFSet s;
  s.atom_ = true;
  s.name_ = std::move(name);
  return s;
}

HFSet HFSet::set(std::vector<HFSet> elements) {
  std::vector<HFSet> unique;
  for (auto& e : elements)
    if (std::none_of(unique.begin(), unique.end(), [&](const HFSet& u) { return hf_equal(u, e); }))
      unique.push_back(std::move(e));
  HFSet s;
  s.elements_ = std::make_shared<const std::vector<HFSet>>(std::move(unique));
  return s;
}

bool HFSet::contains(const HFSet& x) const {
  if (atom_) return false;
  return std::any_of(elements_->begin(), elements_->end(), [&](const HFSet& e) { return hf_equal(e, x); });
}

std::string HFSet::to_string() const {
  if (atom_) return name_;
  std::string out = "{";
  for (std::size_t i = 0; i < elements_->size(); ++i) out += (i ? "," : "") + (*elements_)[i].to_string();
  return out + "}";
}

bool hf_equal(const HFSet& a, const HFSet& b) {
  if (a.is_atom() || b.is_atom()) return a.is_atom() && b.is_atom() && a.name() == b.name();
  // Both sides are duplicate-free, so equal cardinality plus one-way inclusion suffices.
  if (a.cardinality() != b.cardinality()) return false;
  return std::all_of(a.elements().begin(), a.elements().end(), [&](const HFSet& e) { return b.contains(e); });
}

HFSet wiener_pair(const HFSet& x, const HFSet& y) {
  return HFSet::set({HFSet::set({HFSet::set({x}), HFSet::empty()}), HFSet::set({y})});
}

}  // namespace illation
