#include <algorithm>

#include "doctest.h"

#include "branchlaw/scalar_parser.hpp"
#include "branchlaw/tensor.hpp"
#include "reference_data.hpp"
#include "support.hpp"

using namespace branchlaw;

namespace {

std::vector<std::string> sorted_strings(const std::vector<Cyclotomic>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.descended().to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  for (auto& s : v) s = parse_scalar(s).descended().to_string();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("tensorrep") {

TEST_CASE("type II matrices match the published ones up to relabeling") {
  const auto& m = test::bundle("typeII").tensors;
  const auto s = find_relabeling({{&m.a1, &reference::kTypeIIA1}, {&m.a2, &reference::kTypeIIA2}});
  REQUIRE(s.has_value());
  // Canonical order already agrees with the published one.
  for (std::size_t i = 0; i < s->size(); ++i) CHECK((*s)[i] == i);
  CHECK(m.a1 == reference::kTypeIIA1);
  CHECK(m.a2 == reference::kTypeIIA2);
  CHECK(m.a3 == transpose(reference::kTypeIIA1));
}

TEST_CASE("ranks and eigenvalues") {
  const auto& m = test::bundle("typeII").tensors;
  CHECK(rank(m.a1) == 4);
  CHECK(rank(m.a2) == 4);
  CHECK(sorted_strings(m.l1) == sorted(reference::kTypeIITheta1));
  CHECK(sorted_strings(m.l2) == sorted(reference::kTypeIITheta2));
  CHECK(sorted_strings(m.l3) == sorted(reference::kTypeIITheta1));
}

TEST_CASE("structure checks pass on every built-in group") {
  for (const char* name : {"trivial", "cyclic4", "typeII"}) {
    CAPTURE(name);
    const auto& b = test::bundle(name);
    const CheckList checks = check_tensor_structure(b.tensors, b.table);
    for (const auto& c : checks.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("structure checks notice a corrupted matrix") {
  const auto& b = test::bundle("typeII");
  TensorMatrices m = b.tensors;
  m.a2[0][1] += 1;
  CHECK_FALSE(check_tensor_structure(m, b.table).passed());
}

TEST_CASE("trivial group") {
  const auto& m = test::bundle("trivial").tensors;
  CHECK(m.a1 == IntMatrix{{4}});
  CHECK(m.a2 == IntMatrix{{6}});
  CHECK(m.a3 == IntMatrix{{4}});
}

TEST_CASE("integer matrix helpers") {
  const IntMatrix a = {{1, 2}, {3, 4}};
  CHECK(transpose(a) == IntMatrix{{1, 3}, {2, 4}});
  CHECK(multiply(a, a) == IntMatrix{{7, 10}, {15, 22}});
  CHECK(rank(a) == 2);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK(format_matrix(a).find("3") != std::string::npos);
}

TEST_CASE("relabeling search") {
  const IntMatrix a = {{0, 1, 0}, {0, 0, 2}, {3, 0, 0}};
  // b[i][j] = a[s(i)][s(j)] for s = (2, 0, 1).
  const std::vector<std::size_t> s = {2, 0, 1};
  IntMatrix b(3, std::vector<long>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b[i][j] = a[s[i]][s[j]];
  const auto found = find_relabeling({{&a, &b}});
  REQUIRE(found.has_value());
  CHECK(*found == s);
  const IntMatrix c = {{1, 1, 0}, {0, 0, 2}, {3, 0, 0}};
  CHECK_FALSE(find_relabeling({{&a, &c}}).has_value());
}

TEST_CASE("McKay graph output") {
  const auto& m = test::bundle("typeII").tensors;
  const std::string dot = mckay_graph_dot(m);
  CHECK(dot.rfind("digraph", 0) == 0);
  long edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
  long total = 0;
  for (const auto& row : m.a1)
    for (long x : row) total += x;
  CHECK(edges == total);
}

}  // TEST_SUITE
