#include "branchlaw/group.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "branchlaw/error.hpp"
#include "branchlaw/parallel.hpp"

namespace branchlaw {

std::vector<std::size_t> GroupData::class_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

std::size_t GroupData::power_class(std::size_t j, long n) const {
  const auto& row = power_table_.at(j);
  const long o = static_cast<long>(row.size());
  return row[static_cast<std::size_t>(((n % o) + o) % o)];
}

std::size_t GroupData::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? npos : it->second;
}

std::size_t GroupData::product_index(std::size_t a, std::size_t b) const {
  const std::size_t k = index_of(elements_.at(a) * elements_.at(b));
  if (k == npos) throw GroupError("internal: product left the enumerated group");
  return k;
}

GroupData closure(std::span<const GroupElement> generators, std::size_t cap) {
  long order = 1;
  for (const auto& g : generators) order = std::lcm(order, g.entry_order());

  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Cyclotomic det = generators[i].determinant();
    if (det.is_zero()) {
      throw GroupError("generator " + std::to_string(i + 1) + " is not invertible");
    }
    if (!det.is_one()) {
      throw GroupError("generator " + std::to_string(i + 1) + " has determinant " +
                       det.descended().to_string() + ", expected 1");
    }
    gens.push_back(generators[i].lifted(order));
  }

  GroupData g;
  g.entry_order_ = order;
  const GroupElement id = GroupElement::identity().lifted(order);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      GroupElement next = g.elements_[head] * s;
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= cap) {
        throw GroupError("closure exceeded the cap of " + std::to_string(cap) +
                         " elements (group infinite or too large)");
      }
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  const std::size_t n = g.elements_.size();

  g.inverse_.assign(n, GroupData::npos);
  parallel_for(n, [&](std::size_t i) {
    g.inverse_[i] = g.index_of(g.elements_[i].adjugate());
  });
  if (std::find(g.inverse_.begin(), g.inverse_.end(), GroupData::npos) != g.inverse_.end()) {
    throw GroupError("internal: inverse missing from the closure");
  }

  // Conjugacy orbits under the generators; the generated action covers the group.
  std::vector<GroupElement> gen_inv;
  for (const auto& s : gens) gen_inv.push_back(s.adjugate());
  std::vector<std::size_t> raw_class(n, GroupData::npos);
  std::vector<std::vector<std::size_t>> raw_members;
  for (std::size_t x = 0; x < n; ++x) {
    if (raw_class[x] != GroupData::npos) continue;
    const std::size_t cid = raw_members.size();
    std::vector<std::size_t> orbit{x};
    raw_class[x] = cid;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const std::size_t y = g.index_of(gens[s] * g.elements_[orbit[h]] * gen_inv[s]);
        if (y == GroupData::npos) throw GroupError("internal: conjugate left the group");
        if (raw_class[y] != GroupData::npos) continue;
        raw_class[y] = cid;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_members.push_back(std::move(orbit));
  }

  const std::size_t nc = raw_members.size();
  std::vector<long> raw_orders(nc);
  std::vector<Cyclotomic> raw_traces(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const GroupElement& rep = g.elements_[raw_members[c].front()];
    GroupElement p = rep;
    long o = 1;
    while (!(p == id)) {
      p = p * rep;
      ++o;
    }
    raw_orders[c] = o;
    raw_traces[c] = rep.trace();
  }

  std::vector<std::size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const bool ida = raw_members[a].front() == 0;
    const bool idb = raw_members[b].front() == 0;
    if (ida != idb) return ida;
    if (raw_orders[a] != raw_orders[b]) return raw_orders[a] < raw_orders[b];
    if (raw_members[a].size() != raw_members[b].size()) {
      return raw_members[a].size() < raw_members[b].size();
    }
    const int c = Cyclotomic::compare(raw_traces[a], raw_traces[b]);
    if (c != 0) return c < 0;
    return raw_members[a].front() < raw_members[b].front();
  });

  std::vector<std::size_t> new_id(nc);
  for (std::size_t k = 0; k < nc; ++k) new_id[perm[k]] = k;
  g.class_of_.resize(n);
  for (std::size_t x = 0; x < n; ++x) g.class_of_[x] = new_id[raw_class[x]];
  for (std::size_t k = 0; k < nc; ++k) {
    g.members_.push_back(raw_members[perm[k]]);
    g.class_reps_.push_back(raw_members[perm[k]].front());
    g.class_orders_.push_back(raw_orders[perm[k]]);
  }

  g.exponent_ = 1;
  for (long o : g.class_orders_) g.exponent_ = std::lcm(g.exponent_, o);

  g.power_table_.resize(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    const std::size_t rep = g.class_reps_[j];
    std::size_t cur = 0;
    for (long k = 0; k < g.class_orders_[j]; ++k) {
      g.power_table_[j].push_back(g.class_of_[cur]);
      cur = g.product_index(cur, rep);
    }
  }
  return g;
}

std::vector<std::vector<long>> class_mult_coeffs(const GroupData& g, std::size_t i) {
  const std::size_t nc = g.num_classes();
  if (i >= nc) throw GroupError("class index out of range");
  std::vector<std::vector<long>> coeff(nc, std::vector<long>(nc, 0));
  // #{(a, b) in C_i x C_j : ab = g_k} = #{a in C_i : a^{-1} g_k in C_j}
  for (std::size_t k = 0; k < nc; ++k) {
    const std::size_t gk = g.class_rep(k);
    for (std::size_t a : g.class_members(i)) {
      const std::size_t b = g.product_index(g.inverse_of(a), gk);
      ++coeff[g.class_of(b)][k];
    }
  }
  return coeff;
}

std::vector<std::vector<std::vector<long>>> all_class_mult_coeffs(const GroupData& g) {
  std::vector<std::vector<std::vector<long>>> out(g.num_classes());
  parallel_for(g.num_classes(), [&](std::size_t i) { out[i] = class_mult_coeffs(g, i); });
  return out;
}

std::vector<std::vector<std::vector<long>>> all_class_mult_coeffs_serial(const GroupData& g) {
  std::vector<std::vector<std::vector<long>>> out;
  out.reserve(g.num_classes());
  for (std::size_t i = 0; i < g.num_classes(); ++i) out.push_back(class_mult_coeffs(g, i));
  return out;
}

std::vector<Cyclotomic> natural_character(const GroupData& g) {
  std::vector<Cyclotomic> chi;
  chi.reserve(g.num_classes());
  for (std::size_t j = 0; j < g.num_classes(); ++j) {
    chi.push_back(g.element(g.class_rep(j)).trace().descended());
  }
  return chi;
}

std::vector<Cyclotomic> exterior_square_character(const GroupData& g,
                                                  std::span<const Cyclotomic> chi) {
  std::vector<Cyclotomic> out;
  out.reserve(chi.size());
  const Cyclotomic half(Rational(1, 2));
  for (std::size_t j = 0; j < chi.size(); ++j) {
    out.push_back(((chi[j] * chi[j] - chi[g.power_class(j, 2)]) * half).descended());
  }
  return out;
}

GroupData build_group(const GroupSource& source, std::size_t cap) {
  for (std::size_t i = 0; i < source.generators.size(); ++i) {
    const Cyclotomic det = source.generators[i].determinant();
    if (det.is_one()) continue;
    std::string where = source.name;
    if (i < source.generator_lines.size()) where += ":" + std::to_string(source.generator_lines[i]);
    throw GroupError(where + ": generator " + std::to_string(i + 1) +
                     (det.is_zero() ? " is not invertible"
                                    : " has determinant " + det.descended().to_string() + ", expected 1"));
  }
  GroupData g = closure(source.generators, cap);
  if (source.order_hint != 0 && source.order_hint != g.order()) {
    throw GroupError(source.name + ": order hint " + std::to_string(source.order_hint) +
                     " does not match the enumerated order " + std::to_string(g.order()));
  }
  return g;
}

}  // namespace branchlaw
