#include "qse/vqse/subspace.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <unordered_map>

#include "qse/errors.hpp"
#include "qse/wick/active_expectation.hpp"
#include "qse/wick/contraction.hpp"

namespace qse::vqse {
namespace {

using integrals::Space;
using wick::Complex;

enum Type { kIdentity = 0, kSingleActive = 1, kSingleVirtual = 2, kDouble = 3 };

struct Slot {
  bool dagger;
  bool virt;
};

// O_j as written.
std::vector<Slot> right_slots(int t) {
  switch (t) {
    case kSingleActive:
      return {{true, false}, {false, false}};
    case kSingleVirtual:
      return {{true, true}, {false, false}};
    case kDouble:
      return {{true, true}, {false, false}, {true, true}, {false, false}};
  }
  return {};
}

// O_i^+: reversed, daggers flipped.
std::vector<Slot> left_slots(int t) {
  auto r = right_slots(t);
  std::reverse(r.begin(), r.end());
  for (auto& s : r) s.dagger = !s.dagger;
  return r;
}

// Shape 0: nothing. 1..4: a+_x a_y with (x, y) virtual bits.
// 5..20: a+_a a+_b a_c a_d with four virtual bits.
constexpr int kShapes = 21;

std::vector<Slot> shape_slots(int s) {
  if (s == 0) return {};
  if (s <= 4) {
    const int b = s - 1;
    return {{true, (b & 1) != 0}, {false, (b & 2) != 0}};
  }
  const int b = s - 5;
  return {{true, (b & 1) != 0}, {true, (b & 2) != 0}, {false, (b & 4) != 0}, {false, (b & 8) != 0}};
}

struct Combo {
  wick::Pattern pattern;
  std::vector<char> dagger;
  int n_left = 0, n_h = 0;
  std::vector<int> h_virtual;  // positions in the full string
  std::vector<int> h_active;
  std::vector<int> o_active;
  bool dead = false;           // no complete virtual pairing
};

struct OpData {
  int type = kIdentity;
  std::array<int, 4> left{};   // O^+ indices
  std::array<int, 4> right{};  // O indices
};

}  // namespace

SubspacePair assemble_subspace(const std::vector<ExpansionOperator>& pool, const integrals::MolecularIntegrals& mo,
                               const rdm::RdmSet& active_rdms, const integrals::OrbitalPartition& partition) {
  const auto sp = integrals::SpinPartition::from(partition, mo.n_spatial);
  if (!sp.core.empty()) throw PartitionError("assemble_subspace expects core-dressed integrals (no core orbitals)");
  if (active_rdms.n != sp.n_active()) throw ShapeError("RDM size differs from the active spin-orbital count");
  const int n_act = sp.n_active();

  std::vector<OpData> data(pool.size());
  auto need = [&](int x, Space s) {
    if (x < 0 || x >= sp.n_spin_orbitals || sp.label[x] != s) {
      throw LabelError("pool operator index " + std::to_string(x) + " lies in the wrong space");
    }
  };
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const auto& op = pool[k];
    auto& d = data[k];
    switch (op.kind) {
      case OpKind::Identity:
        break;
      case OpKind::Single:
        need(op.p, Space::Active);
        if (op.i >= 0 && op.i < sp.n_spin_orbitals && sp.label[op.i] == Space::Virtual) {
          d.type = kSingleVirtual;
        } else {
          need(op.i, Space::Active);
          d.type = kSingleActive;
        }
        d.right = {op.i, op.p, 0, 0};
        d.left = {op.p, op.i, 0, 0};
        break;
      case OpKind::Double:
        need(op.mu, Space::Virtual);
        need(op.nu, Space::Virtual);
        need(op.q, Space::Active);
        need(op.r, Space::Active);
        d.type = kDouble;
        d.right = {op.mu, op.q, op.nu, op.r};
        d.left = {op.r, op.nu, op.q, op.mu};
        break;
    }
  }

  // Symbolic contraction per (left type, right type, H shape).
  std::vector<Combo> combos(4 * 4 * kShapes);
  for (int tl = 0; tl < 4; ++tl)
    for (int tr = 0; tr < 4; ++tr)
      for (int s = 0; s < kShapes; ++s) {
        auto slots = left_slots(tl);
        const auto hs = shape_slots(s);
        const auto rs = right_slots(tr);
        Combo& c = combos[(tl * 4 + tr) * kShapes + s];
        c.n_left = static_cast<int>(slots.size());
        c.n_h = static_cast<int>(hs.size());
        slots.insert(slots.end(), hs.begin(), hs.end());
        slots.insert(slots.end(), rs.begin(), rs.end());
        const std::size_t n = slots.size();
        std::unique_ptr<bool[]> dag(new bool[n]), virt(new bool[n]);
        c.dagger.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
          dag[x] = slots[x].dagger;
          virt[x] = slots[x].virt;
          c.dagger[x] = slots[x].dagger;
        }
        c.pattern = wick::make_pattern(std::span<const bool>(dag.get(), n), std::span<const bool>(virt.get(), n));
        c.dead = c.pattern.pairings.empty();
        for (int x = 0; x < static_cast<int>(n); ++x) {
          const bool in_h = x >= c.n_left && x < c.n_left + c.n_h;
          if (in_h) {
            (slots[x].virt ? c.h_virtual : c.h_active).push_back(x);
          } else if (!slots[x].virt) {
            c.o_active.push_back(x);
          }
        }
        // Strings with unequal creator/annihilator counts vanish on Psi_A.
        int balance = 0;
        for (const auto& sl : slots) balance += sl.dagger ? 1 : -1;
        if (balance != 0) c.dead = true;
      }

  wick::ActiveExpectation expect(active_rdms);
  std::unordered_map<std::uint64_t, Complex> memo;
  std::vector<fci::LadderOp> local;

  // sum over free active H slots of h * <active residual>, with every other
  // slot of idx fixed.
  auto active_sum = [&](int s, const Combo& c, std::array<int, 12>& idx) -> Complex {
    const int f = static_cast<int>(c.h_active.size());
    int total = 1;
    for (int x = 0; x < f; ++x) total *= n_act;
    Complex sum{};
    for (int combo = 0; combo < total; ++combo) {
      int rest = combo;
      for (int x = 0; x < f; ++x) {
        idx[c.h_active[x]] = sp.active[rest % n_act];
        rest /= n_act;
      }
      double h = 1.0;
      const int b = c.n_left;
      if (s >= 1 && s <= 4) {
        h = mo.one_body(idx[b], idx[b + 1]);
      } else if (s >= 5) {
        h = 0.5 * mo.two_body(idx[b], idx[b + 1], idx[b + 2], idx[b + 3]);
      }
      if (h == 0.0) continue;
      local.clear();
      for (int pos : c.pattern.active_positions) local.push_back({sp.active_local[idx[pos]], c.dagger[pos] != 0});
      sum += h * expect(local);
    }
    return sum;
  };

  const auto m = static_cast<Eigen::Index>(pool.size());
  SubspacePair out;
  out.pool = pool;
  out.H = Eigen::MatrixXcd::Zero(m, m);
  out.S = Eigen::MatrixXcd::Zero(m, m);
  std::array<int, 12> idx{};
  std::array<int, 12> pinned{};

  for (Eigen::Index a = 0; a < m; ++a) {
    const OpData& L = data[a];
    for (Eigen::Index bcol = 0; bcol < m; ++bcol) {
      const OpData& R = data[bcol];
      Complex h_total{}, s_total{};
      for (int s = 0; s < kShapes; ++s) {
        const Combo& c = combos[(L.type * 4 + R.type) * kShapes + s];
        if (c.dead) continue;
        const int n_right = static_cast<int>(c.dagger.size()) - c.n_left - c.n_h;
        for (int x = 0; x < c.n_left; ++x) idx[x] = L.left[x];
        for (int x = 0; x < n_right; ++x) idx[c.n_left + c.n_h + x] = R.right[x];

        Complex shape_total{};
        for (const auto& pr : c.pattern.pairings) {
          // Fix H virtual slots from their partners; check O-O deltas.
          bool ok = true;
          for (int pos : c.h_virtual) pinned[pos] = -1;
          for (const auto& [x, y] : pr.pairs) {
            const bool hx = x >= c.n_left && x < c.n_left + c.n_h;
            const bool hy = y >= c.n_left && y < c.n_left + c.n_h;
            if (!hx && !hy) {
              if (idx[x] != idx[y]) {
                ok = false;
                break;
              }
            } else if (hx && !hy) {
              pinned[x] = idx[y];
            } else if (hy && !hx) {
              pinned[y] = idx[x];
            } else {
              ok = false;  // cannot happen for normal-ordered H
              break;
            }
          }
          if (!ok) continue;
          for (int pos : c.h_virtual) idx[pos] = pinned[pos];

          std::uint64_t key = static_cast<std::uint64_t>(s) | (static_cast<std::uint64_t>(L.type) << 5) |
                              (static_cast<std::uint64_t>(R.type) << 7);
          int shift = 9;
          for (int pos : c.h_virtual) {
            key |= static_cast<std::uint64_t>(idx[pos]) << shift;
            shift += 6;
          }
          for (int pos : c.o_active) {
            key |= static_cast<std::uint64_t>(sp.active_local[idx[pos]]) << shift;
            shift += 6;
          }
          Complex v;
          if (auto it = memo.find(key); it != memo.end()) {
            v = it->second;
          } else {
            v = active_sum(s, c, idx);
            memo.emplace(key, v);
          }
          shape_total += static_cast<double>(pr.sign * c.pattern.separation_sign) * v;
        }
        if (s == 0) {
          s_total = shape_total;
        } else {
          h_total += shape_total;
        }
      }
      out.S(a, bcol) = s_total;
      out.H(a, bcol) = h_total + mo.constant_energy() * s_total;
    }
  }

  if (m > 0) {
    out.h_asymmetry = (out.H - out.H.adjoint()).cwiseAbs().maxCoeff();
    out.s_asymmetry = (out.S - out.S.adjoint()).cwiseAbs().maxCoeff();
  }
  const Eigen::MatrixXcd h = 0.5 * (out.H + out.H.adjoint());
  const Eigen::MatrixXcd s = 0.5 * (out.S + out.S.adjoint());
  out.H = h;
  out.S = s;
  return out;
}

}  // namespace qse::vqse
