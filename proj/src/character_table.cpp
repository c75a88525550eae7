#include <algorithm>
#include <numeric>
#include <sstream>

#include "branchlaw/character_table.hpp"
#include "branchlaw/error.hpp"
#include "branchlaw/scalar_parser.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

std::vector<Cyclotomic> CharacterTable::column(std::size_t j) const {
  std::vector<Cyclotomic> out;
  out.reserve(values.size());
  for (const auto& row : values) out.push_back(row.at(j));
  return out;
}

void validate_table(const CharacterTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw TableError("empty character table");
  if (t.class_sizes.size() != n || t.class_orders.size() != n || t.degrees.size() != n) {
    throw TableError("character table metadata does not match its size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.values[i].size() != n) {
      throw TableError("row " + std::to_string(i) + " has " + std::to_string(t.values[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
  }
  const std::size_t total = std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), std::size_t{0});
  if (total != t.group_order) {
    throw TableError("class sizes sum to " + std::to_string(total) + ", group order is " +
                     std::to_string(t.group_order));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!t.values[0][j].is_one()) {
      throw TableError("row 0 is not the trivial character (column " + std::to_string(j) + ")");
    }
  }
  Integer sum_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t.values[i][0] == Cyclotomic(t.degrees[i])) || t.degrees[i] < 1) {
      throw TableError("row " + std::to_string(i) + ": value on the identity class is not the degree");
    }
    sum_sq += Integer(t.degrees[i]) * t.degrees[i];
  }
  if (sum_sq != Integer(static_cast<unsigned long>(t.group_order))) {
    throw TableError("sum of squared degrees is " + sum_sq.get_str() + ", group order is " +
                     std::to_string(t.group_order));
  }

  const Cyclotomic order(static_cast<long>(t.group_order));
  std::vector<std::vector<Cyclotomic>> conj(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) conj[i][j] = t.values[i][j].conjugate();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      Cyclotomic s(0);
      for (std::size_t j = 0; j < n; ++j) {
        s += Cyclotomic(static_cast<long>(t.class_sizes[j])) * t.values[i][j] * conj[k][j];
      }
      const Cyclotomic expected = i == k ? order : Cyclotomic(0);
      if (!(s == expected)) {
        throw TableError("row orthogonality fails for rows " + std::to_string(i) + ", " +
                         std::to_string(k) + ": sum |C_j| chi_i conj(chi_k) = " +
                         s.descended().to_string() + ", expected " + expected.to_string());
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      Cyclotomic s(0);
      for (std::size_t i = 0; i < n; ++i) s += conj[i][j] * t.values[i][k];
      const Cyclotomic expected =
          j == k ? Cyclotomic(make_rational(static_cast<long>(t.group_order), static_cast<long>(t.class_sizes[j])))
                 : Cyclotomic(0);
      if (!(s == expected)) {
        throw TableError("column orthogonality fails for classes " + std::to_string(j) + ", " +
                         std::to_string(k) + ": sum conj(chi_i(g_j)) chi_i(g_k) = " +
                         s.descended().to_string() + ", expected " + expected.to_string());
      }
    }
  }
}

CharacterTable canonicalized(CharacterTable t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(t.values[i].begin(), t.values[i].end(), [](const Cyclotomic& c) { return c.is_one(); });
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a);
    const bool tb = is_trivial(b);
    if (ta != tb) return ta;
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    for (std::size_t j = 0; j < n; ++j) {
      const int c = Cyclotomic::compare(t.values[a][j], t.values[b][j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  CharacterTable out = t;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = t.values[perm[i]];
    out.degrees[i] = t.degrees[perm[i]];
  }
  return out;
}

CyclotomicMatrix inverse_table(const CharacterTable& t) {
  const std::size_t n = t.size();
  CyclotomicMatrix inv(n, std::vector<Cyclotomic>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Cyclotomic scale(make_rational(static_cast<long>(t.class_sizes[j]), static_cast<long>(t.group_order)));
    for (std::size_t k = 0; k < n; ++k) inv[j][k] = (scale * t.values[k][j].conjugate()).descended();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Cyclotomic s(0);
      for (std::size_t j = 0; j < n; ++j) s += t.values[i][j] * inv[j][k];
      if (!(s == Cyclotomic(i == k ? 1 : 0))) {
        throw TableError("T * T^{-1} differs from the identity at (" + std::to_string(i) + ", " +
                         std::to_string(k) + "): orthogonality violated");
      }
    }
  }
  return inv;
}

std::string save_table(const CharacterTable& t) {
  std::ostringstream os;
  os << t.size() << "\n";
  for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " " : "") << t.class_sizes[j];
  os << "\n";
  for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " " : "") << t.class_orders[j];
  os << "\n";
  for (const auto& row : t.values) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].descended().to_string();
    os << "\n";
  }
  return os.str();
}

CharacterTable load_table(std::string_view text, const GroupData& g) {
  std::vector<std::string> lines;
  for (const auto& raw : split(text, '\n')) {
    std::string line = trim(strip_comment(raw));
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (lines.size() < 3) throw ParseError("character table: expected size, class sizes and orders lines");
  const std::size_t n = parse_size(lines[0]);
  if (lines.size() != n + 3) {
    throw ParseError("character table: expected " + std::to_string(n) + " rows, found " +
                     std::to_string(lines.size() - 3));
  }
  CharacterTable t;
  t.group_order = g.order();
  const auto sizes = tokenize(lines[1]);
  const auto orders = tokenize(lines[2]);
  if (sizes.size() != n || orders.size() != n) {
    throw ParseError("character table: class size/order lines need " + std::to_string(n) + " entries");
  }
  for (std::size_t j = 0; j < n; ++j) {
    t.class_sizes.push_back(parse_size(sizes[j]));
    t.class_orders.push_back(static_cast<long>(parse_size(orders[j])));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = tokenize(lines[3 + i]);
    if (cells.size() != n) {
      throw ParseError("character table row " + std::to_string(i) + ": expected " + std::to_string(n) +
                       " entries, found " + std::to_string(cells.size()));
    }
    std::vector<Cyclotomic> row;
    for (const auto& c : cells) row.push_back(parse_scalar(c));
    const auto deg = row[0].as_rational();
    if (!deg || deg->get_den() != 1 || *deg < 1 || !deg->get_num().fits_slong_p()) {
      throw TableError("character table row " + std::to_string(i) + ": degree is not a positive integer");
    }
    t.degrees.push_back(deg->get_num().get_si());
    t.values.push_back(std::move(row));
  }
  if (n != g.num_classes()) {
    throw TableError("character table has " + std::to_string(n) + " classes, the group has " +
                     std::to_string(g.num_classes()));
  }
  if (t.class_sizes != g.class_sizes() || t.class_orders != g.class_element_orders()) {
    throw TableError("character table class sizes/orders do not match the group's class order");
  }
  validate_table(t);
  return t;
}

std::vector<Cyclotomic> decompose(const CharacterTable& t, std::span<const Cyclotomic> psi) {
  const std::size_t n = t.size();
  std::vector<Cyclotomic> out(n);
  const Cyclotomic inv_order(make_rational(1, static_cast<long>(t.group_order)));
  for (std::size_t i = 0; i < n; ++i) {
    Cyclotomic s(0);
    for (std::size_t j = 0; j < n; ++j) {
      s += Cyclotomic(static_cast<long>(t.class_sizes[j])) * psi[j] * t.values[i][j].conjugate();
    }
    out[i] = (s * inv_order).descended();
  }
  return out;
}

}  // namespace branchlaw
