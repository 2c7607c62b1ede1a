#include "qse/wick/active_expectation.hpp"

#include <algorithm>
#include <map>

#include "qse/errors.hpp"

namespace qse::wick {
namespace {

// One char per operator: 2*index + dagger.
std::string encode(std::span<const fci::LadderOp> ops) {
  std::string s(ops.size(), '\0');
  for (std::size_t i = 0; i < ops.size(); ++i) s[i] = static_cast<char>(2 * ops[i].index + (ops[i].dagger ? 1 : 0));
  return s;
}

inline bool dag(char c) { return c & 1; }
inline int idx(char c) { return static_cast<unsigned char>(c) >> 1; }

// First a_p a+_q pair out of normal order, or npos.
std::size_t first_disorder(const std::string& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!dag(s[i]) && dag(s[i + 1])) return i;
  return std::string::npos;
}

bool balanced(const std::string& s) {
  int b = 0;
  for (char c : s) b += dag(c) ? 1 : -1;
  return b == 0;
}

void split_normal(const std::string& s, std::vector<int>& upper, std::vector<int>& lower) {
  upper.clear();
  lower.clear();
  for (char c : s) (dag(c) ? upper : lower).push_back(idx(c));
  std::reverse(upper.begin(), upper.end());
}

void expand(const std::string& s, double coeff, std::map<std::string, double>& acc) {
  const std::size_t i = first_disorder(s);
  if (i == std::string::npos) {
    acc[s] += coeff;
    return;
  }
  std::string swapped = s;
  std::swap(swapped[i], swapped[i + 1]);
  expand(swapped, -coeff, acc);
  if (idx(s[i]) == idx(s[i + 1])) {
    std::string reduced = s;
    reduced.erase(i, 2);
    expand(reduced, coeff, acc);
  }
}

}  // namespace

std::vector<NormalTerm> normal_order(std::span<const fci::LadderOp> ops) {
  const std::string s = encode(ops);
  std::vector<NormalTerm> out;
  if (!balanced(s)) return out;
  std::map<std::string, double> acc;
  expand(s, 1.0, acc);
  for (const auto& [key, c] : acc) {
    if (c == 0.0) continue;
    NormalTerm t;
    t.coefficient = c;
    split_normal(key, t.upper, t.lower);
    out.push_back(std::move(t));
  }
  return out;
}

Complex ActiveExpectation::rdm_element(std::span<const int> upper, std::span<const int> lower) const {
  const int k = static_cast<int>(upper.size());
  if (k == 0) return 1.0;
  if (rdms_->has(k)) return rdms_->get(k).get(upper, lower);
  if (k > rdms_->n_electrons || k > rdms_->n) return 0.0;
  throw MissingDataError(k);
}

Complex ActiveExpectation::operator()(std::span<const fci::LadderOp> local_ops) {
  for (const auto& op : local_ops) {
    if (op.index < 0 || op.index >= rdms_->n) throw DomainError("active index outside the RDM range");
  }
  std::string key = encode(local_ops);
  return value(key);
}

Complex ActiveExpectation::value(std::string& key) {
  if (!balanced(key)) return 0.0;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Complex v;
  const std::size_t i = first_disorder(key);
  if (i == std::string::npos) {
    std::vector<int> upper, lower;
    split_normal(key, upper, lower);
    v = rdm_element(upper, lower);
  } else {
    std::string swapped = key;
    std::swap(swapped[i], swapped[i + 1]);
    v = -value(swapped);
    if (idx(key[i]) == idx(key[i + 1])) {
      std::string reduced = key;
      reduced.erase(i, 2);
      v += value(reduced);
    }
  }
  memo_.emplace(key, v);
  return v;
}

}  // namespace qse::wick
