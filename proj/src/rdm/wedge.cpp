#include "qse/rdm/wedge.hpp"

#include <bit>

#include "qse/errors.hpp"

namespace qse::rdm {
namespace {

struct Split {
  double sign;
  std::size_t left;
  std::size_t right;
};

// Every way of splitting a sorted tuple into a sorted a-subset and its
// complement, with the sign of the permutation (subset, complement).
std::vector<Split> splits(const Tuple& t, int a, int b, const Rdm& ta, const Rdm& tb) {
  std::vector<Split> out;
  const int k = a + b;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != a) continue;
    int l[kMaxRank], r[kMaxRank], nl = 0, nr = 0, inversions = 0;
    for (int j = 0; j < k; ++j) {
      if ((mask >> j) & 1u) {
        l[nl++] = t[j];
        inversions += nr;  // complement elements this one jumps over
      } else {
        r[nr++] = t[j];
      }
    }
    out.push_back({inversions % 2 ? -1.0 : 1.0, ta.index_of(std::span<const int>(l, nl)),
                   tb.index_of(std::span<const int>(r, nr))});
  }
  return out;
}

}  // namespace

Rdm wedge(const Rdm& a, const Rdm& b) {
  if (a.n() != b.n()) throw ShapeError("wedge: operands over different orbital counts");
  const int ka = a.rank(), kb = b.rank();
  if (ka + kb > kMaxRank) throw ShapeError("wedge: combined rank exceeds 4");
  Rdm out(ka + kb, a.n());
  const double norm = 1.0 / static_cast<double>(binomial(ka + kb, ka) * binomial(ka + kb, ka));
  std::vector<std::vector<Split>> table(out.n_tuples());
  for (std::size_t t = 0; t < out.n_tuples(); ++t) table[t] = splits(out.tuples()[t], ka, kb, a, b);
  const auto& A = a.matrix();
  const auto& B = b.matrix();
  for (std::size_t u = 0; u < out.n_tuples(); ++u)
    for (std::size_t p = 0; p < out.n_tuples(); ++p) {
      Complex s{};
      for (const auto& su : table[u])
        for (const auto& sp : table[p]) {
          const Complex av = A(static_cast<Eigen::Index>(su.left), static_cast<Eigen::Index>(sp.left));
          if (av == Complex{}) continue;
          s += (su.sign * sp.sign) * av * B(static_cast<Eigen::Index>(su.right), static_cast<Eigen::Index>(sp.right));
        }
      out.matrix()(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(p)) = norm * s;
    }
  return out;
}

}  // namespace qse::rdm
