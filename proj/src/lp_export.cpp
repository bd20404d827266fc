#include "sukp/lp_export.hpp"

#include <ostream>
#include <sstream>

namespace sukp {

namespace {

// Emits "name" terms joined by '+', wrapped well below the classic LP-format
// line limit.
class TermWriter {
 public:
  TermWriter(std::ostream& out, int terms_per_line)
      : out_(out), per_line_(terms_per_line) {}

  void term(std::int64_t coeff, char var, int index) {
    if (count_ > 0) {
      out_ << (count_ % per_line_ == 0 ? "\n   + " : " + ");
    }
    if (coeff != 1) out_ << coeff << ' ';
    out_ << var << index;
    ++count_;
  }

 private:
  std::ostream& out_;
  int per_line_;
  int count_ = 0;
};

}  // namespace

void export_lp(const Instance& inst, std::ostream& out) {
  const int m = inst.num_items();
  const int n = inst.num_elements();

  out << "\\ set-union knapsack 0/1 model: " << m << " items, " << n
      << " elements, capacity " << inst.capacity() << '\n';
  out << "Maximize\n obj: ";
  {
    TermWriter terms(out, 8);
    for (int i = 0; i < m; ++i) terms.term(inst.profit(i), 'y', i + 1);
  }
  out << "\nSubject To\n cap: ";
  {
    TermWriter terms(out, 8);
    for (int j = 0; j < n; ++j) terms.term(inst.element_weight(j), 'x', j + 1);
  }
  out << " <= " << inst.capacity() << '\n';
  for (int i = 0; i < m; ++i) {
    for (const std::int32_t j : inst.elements_of(i)) {
      out << " link_" << i + 1 << '_' << j + 1 << ": x" << j + 1 << " - y"
          << i + 1 << " >= 0\n";
    }
  }
  out << "Binary\n";
  int on_line = 0;
  for (int i = 0; i < m; ++i) {
    out << (on_line == 0 ? " y" : " y") << i + 1;
    if (++on_line == 12) {
      out << '\n';
      on_line = 0;
    }
  }
  for (int j = 0; j < n; ++j) {
    out << " x" << j + 1;
    if (++on_line == 12) {
      out << '\n';
      on_line = 0;
    }
  }
  if (on_line != 0) out << '\n';
  out << "End\n";
}

std::string export_lp(const Instance& inst) {
  std::ostringstream out;
  export_lp(inst, out);
  return out.str();
}

}  // namespace sukp
