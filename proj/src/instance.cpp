#include "sukp/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "sukp/rand.hpp"

namespace sukp {

namespace {

// Keeps every sum of profits or weights comfortably inside int64.
constexpr std::int64_t kMaxValue = 1'000'000'000'000'000LL;

// Integer reader over the raw stream: skips whitespace and '#' comments,
// tracks the 1-based line number for error reporting.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  int line() const { return line_; }

  // Next integer token, or nullopt at end of input. Non-integers throw.
  std::optional<std::int64_t> next(const char* what) {
    skip_blanks();
    std::string tok;
    int c;
    while ((c = in_.peek()) != EOF && !std::isspace(c) && c != '#') {
      tok.push_back(static_cast<char>(in_.get()));
    }
    if (tok.empty()) return std::nullopt;
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line_, std::string(what) + " value '" + tok +
                                  "' is out of range");
    }
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line_, std::string("expected an integer ") + what +
                                  ", got '" + tok + "'");
    }
    return value;
  }

 private:
  void skip_blanks() {
    int c;
    while ((c = in_.peek()) != EOF) {
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n') {
        }
        if (c == '\n') ++line_;
      } else if (std::isspace(c)) {
        if (c == '\n') ++line_;
        in_.get();
      } else {
        break;
      }
    }
  }

  std::istream& in_;
  int line_ = 1;
};

}  // namespace

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " +
                         message),
      line(line_number) {}

Instance Instance::parse(std::istream& in) {
  Tokenizer tok(in);
  const auto require = [&](const char* what) {
    auto v = tok.next(what);
    if (!v) {
      throw ParseError(tok.line(),
                       std::string("unexpected end of input, expected ") +
                           what);
    }
    return *v;
  };

  Instance inst;
  const std::int64_t m = require("item count");
  if (m < 1) throw ParseError(tok.line(), "item count must be positive");
  const std::int64_t n = require("element count");
  if (n < 1) throw ParseError(tok.line(), "element count must be positive");
  if (m > 1'000'000 || n > 1'000'000 || m * n > 250'000'000) {
    throw ParseError(tok.line(), "instance dimensions too large");
  }
  const std::int64_t cap = require("capacity");
  if (cap <= 0) throw ParseError(tok.line(), "capacity must be positive");
  if (cap > kMaxValue) {
    throw ParseError(tok.line(), "capacity is out of range");
  }
  inst.m_ = static_cast<int>(m);
  inst.n_ = static_cast<int>(n);
  inst.capacity_ = cap;

  inst.profits_.resize(inst.m_);
  for (int i = 0; i < inst.m_; ++i) {
    const std::int64_t p = require("item profit");
    if (p <= 0) {
      throw ParseError(tok.line(), "profit of item " + std::to_string(i) +
                                       " must be positive");
    }
    if (p > kMaxValue) {
      throw ParseError(tok.line(), "profit of item " + std::to_string(i) +
                                       " is out of range");
    }
    inst.profits_[i] = p;
  }

  inst.weights_.resize(inst.n_);
  for (int j = 0; j < inst.n_; ++j) {
    const std::int64_t w = require("element weight");
    if (w <= 0) {
      throw ParseError(tok.line(), "weight of element " + std::to_string(j) +
                                       " must be positive");
    }
    if (w > kMaxValue) {
      throw ParseError(tok.line(), "weight of element " + std::to_string(j) +
                                       " is out of range");
    }
    inst.weights_[j] = w;
  }

  inst.incidence_.assign(static_cast<std::size_t>(inst.m_) * inst.n_, 0);
  inst.item_elements_.resize(inst.m_);
  for (int i = 0; i < inst.m_; ++i) {
    for (int j = 0; j < inst.n_; ++j) {
      const std::int64_t v = require("incidence value");
      if (v != 0 && v != 1) {
        throw ParseError(tok.line(), "incidence values must be 0 or 1, got " +
                                         std::to_string(v));
      }
      if (v == 1) {
        inst.incidence_[static_cast<std::size_t>(i) * inst.n_ + j] = 1;
        inst.item_elements_[i].push_back(j);
      }
    }
    if (inst.item_elements_[i].empty()) {
      throw ParseError(tok.line(),
                       "item " + std::to_string(i) + " has no elements");
    }
  }

  if (tok.next("end of input")) {
    throw ParseError(tok.line(),
                     "unexpected extra value after the incidence rows");
  }

  inst.total_weight_ =
      std::accumulate(inst.weights_.begin(), inst.weights_.end(),
                      std::int64_t{0});
  return inst;
}

Instance Instance::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Instance Instance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse(in);
}

Instance Instance::generate(int items, int elements, double density,
                            double capacity_ratio, std::uint64_t seed) {
  if (items < 1 || elements < 1) {
    throw std::invalid_argument(
        "generate: item and element counts must be positive");
  }
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("generate: density must lie in (0, 1)");
  }
  if (!(capacity_ratio > 0.0 && capacity_ratio < 1.0)) {
    throw std::invalid_argument(
        "generate: capacity ratio must lie in (0, 1)");
  }
  const std::int64_t cells = static_cast<std::int64_t>(items) * elements;
  const std::int64_t ones =
      std::llround(density * static_cast<double>(cells));
  if (ones < items) {
    throw std::invalid_argument(
        "generate: density too low, fewer incidence entries than items");
  }

  Rng rng(seed);

  // Floyd's sampling: `ones` distinct cells, uniform over the grid.
  std::unordered_set<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(ones) * 2);
  for (std::int64_t t = cells - ones; t < cells; ++t) {
    const std::int64_t r = static_cast<std::int64_t>(
        random_below(rng, static_cast<std::uint64_t>(t) + 1));
    seen.insert(seen.count(r) ? t : r);
  }
  std::vector<std::int64_t> chosen(seen.begin(), seen.end());
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::vector<std::int32_t>> rows(items);
  for (const std::int64_t cell : chosen) {
    rows[cell / elements].push_back(static_cast<std::int32_t>(cell % elements));
  }

  // Give every empty item one entry taken from the fullest item; the total
  // count is preserved and (pigeonhole, ones >= items) the donor always has
  // at least two entries left.
  for (;;) {
    int empty = -1;
    for (int i = 0; i < items; ++i) {
      if (rows[i].empty()) {
        empty = i;
        break;
      }
    }
    if (empty < 0) break;
    int donor = 0;
    for (int i = 1; i < items; ++i) {
      if (rows[i].size() > rows[donor].size()) donor = i;
    }
    const std::size_t pick = random_below(rng, rows[donor].size());
    rows[empty].push_back(rows[donor][pick]);
    rows[donor].erase(rows[donor].begin() + static_cast<std::ptrdiff_t>(pick));
  }

  Instance inst;
  inst.m_ = items;
  inst.n_ = elements;
  inst.item_elements_ = std::move(rows);
  inst.incidence_.assign(static_cast<std::size_t>(items) * elements, 0);
  for (int i = 0; i < items; ++i) {
    for (const std::int32_t j : inst.item_elements_[i]) {
      inst.incidence_[static_cast<std::size_t>(i) * elements + j] = 1;
    }
  }

  inst.profits_.resize(items);
  for (int i = 0; i < items; ++i) {
    inst.profits_[i] = 1 + static_cast<std::int64_t>(random_below(rng, 500));
  }
  inst.weights_.resize(elements);
  for (int j = 0; j < elements; ++j) {
    inst.weights_[j] = 1 + static_cast<std::int64_t>(random_below(rng, 100));
  }
  inst.total_weight_ =
      std::accumulate(inst.weights_.begin(), inst.weights_.end(),
                      std::int64_t{0});
  inst.capacity_ = std::max<std::int64_t>(
      1, std::llround(capacity_ratio *
                      static_cast<double>(inst.total_weight_)));
  return inst;
}

std::int64_t Instance::item_weight(int item) const {
  if (item < 0 || item >= m_) {
    throw std::out_of_range("item_weight: item index out of range");
  }
  std::int64_t total = 0;
  for (const std::int32_t j : item_elements_[item]) total += weights_[j];
  return total;
}

double Instance::density() const {
  std::size_t ones = 0;
  for (const auto& row : item_elements_) ones += row.size();
  return static_cast<double>(ones) /
         (static_cast<double>(m_) * static_cast<double>(n_));
}

double Instance::capacity_ratio() const {
  return static_cast<double>(capacity_) / static_cast<double>(total_weight_);
}

void Instance::serialize(std::ostream& out) const {
  out << m_ << ' ' << n_ << ' ' << capacity_ << '\n';
  for (int i = 0; i < m_; ++i) out << profits_[i] << (i + 1 < m_ ? ' ' : '\n');
  for (int j = 0; j < n_; ++j) out << weights_[j] << (j + 1 < n_ ? ' ' : '\n');
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      out << (contains(i, j) ? 1 : 0) << (j + 1 < n_ ? ' ' : '\n');
    }
  }
}

std::string Instance::serialize() const {
  std::ostringstream out;
  serialize(out);
  return out.str();
}

}  // namespace sukp
