#include "sukp/solution.hpp"

#include <sstream>
#include <stdexcept>

namespace sukp {

Solution::Solution(const Instance& inst)
    : inst_(&inst),
      in_set_(inst.num_items(), 0),
      coverage_(inst.num_elements(), 0) {}

void Solution::add(int item) {
  if (item < 0 || item >= inst_->num_items()) {
    throw std::out_of_range("Solution::add: item index out of range");
  }
  if (in_set_[item]) {
    throw std::logic_error("Solution::add: item " + std::to_string(item) +
                           " already selected");
  }
  in_set_[item] = 1;
  ++count_;
  profit_ += inst_->profit(item);
  for (const std::int32_t j : inst_->elements_of(item)) {
    if (coverage_[j]++ == 0) weight_ += inst_->element_weight(j);
  }
}

void Solution::remove(int item) {
  if (item < 0 || item >= inst_->num_items()) {
    throw std::out_of_range("Solution::remove: item index out of range");
  }
  if (!in_set_[item]) {
    throw std::logic_error("Solution::remove: item " + std::to_string(item) +
                           " not selected");
  }
  in_set_[item] = 0;
  --count_;
  profit_ -= inst_->profit(item);
  for (const std::int32_t j : inst_->elements_of(item)) {
    if (--coverage_[j] == 0) weight_ -= inst_->element_weight(j);
  }
}

std::vector<std::int32_t> Solution::selected() const {
  std::vector<std::int32_t> out;
  out.reserve(count_);
  for (int i = 0; i < inst_->num_items(); ++i) {
    if (in_set_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::int32_t> Solution::unselected() const {
  std::vector<std::int32_t> out;
  out.reserve(inst_->num_items() - count_);
  for (int i = 0; i < inst_->num_items(); ++i) {
    if (!in_set_[i]) out.push_back(i);
  }
  return out;
}

std::int64_t Solution::recompute_profit() const {
  std::int64_t total = 0;
  for (int i = 0; i < inst_->num_items(); ++i) {
    if (in_set_[i]) total += inst_->profit(i);
  }
  return total;
}

std::int64_t Solution::recompute_weight() const {
  std::vector<std::uint8_t> covered(inst_->num_elements(), 0);
  for (int i = 0; i < inst_->num_items(); ++i) {
    if (!in_set_[i]) continue;
    for (const std::int32_t j : inst_->elements_of(i)) covered[j] = 1;
  }
  std::int64_t total = 0;
  for (int j = 0; j < inst_->num_elements(); ++j) {
    if (covered[j]) total += inst_->element_weight(j);
  }
  return total;
}

std::string Solution::log_line() const {
  std::ostringstream out;
  out << "profit=" << profit_ << " weight=" << weight_ << " items=[";
  bool first = true;
  for (int i = 0; i < inst_->num_items(); ++i) {
    if (!in_set_[i]) continue;
    if (!first) out << ' ';
    out << i;
    first = false;
  }
  out << ']';
  return out.str();
}

bool Solution::operator==(const Solution& other) const {
  return in_set_ == other.in_set_ && coverage_ == other.coverage_ &&
         profit_ == other.profit_ && weight_ == other.weight_;
}

}  // namespace sukp
