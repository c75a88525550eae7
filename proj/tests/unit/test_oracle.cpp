#include "doctest.h"

#include "branchlaw/branching.hpp"
#include "branchlaw/error.hpp"
#include "branchlaw/oracle.hpp"
#include "branchlaw/parallel.hpp"
#include "support.hpp"

using namespace branchlaw;

TEST_SUITE("oracle") {

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(0, 0, 0) == 1);
  CHECK(weyl_dim(1, 0, 0) == 4);
  CHECK(weyl_dim(0, 1, 0) == 6);
  CHECK(weyl_dim(0, 0, 1) == 4);
  CHECK(weyl_dim(1, 1, 1) == 64);
  CHECK(weyl_dim(2, 0, 0) == 10);
  CHECK(weyl_dim(1, 0, 1) == 15);
  // Symmetric powers of the natural representation.
  for (long p = 0; p < 10; ++p) CHECK(weyl_dim(p, 0, 0) == (p + 1) * (p + 2) * (p + 3) / 6);
  // Duality (p, q, r) <-> (r, q, p).
  CHECK(weyl_dim(3, 1, 0) == weyl_dim(0, 1, 3));
}

TEST_CASE("tensor-rule dimension identities") {
  const CheckList c = check_tensor_rule_dimensions(6);
  CHECK(c.checks.size() == 3);
  for (const auto& x : c.checks) {
    CAPTURE(x.name);
    CAPTURE(x.detail);
    CHECK(x.passed);
  }
}

TEST_CASE("complete symmetric functions and Schur characters") {
  const auto& b = test::bundle("typeII");
  const auto h = complete_symmetric(b.group, 6);
  const auto chi = natural_character(b.group);
  for (std::size_t j = 0; j < b.group.num_classes(); ++j) {
    CHECK(h[j][0] == Cyclotomic(1));
    CHECK(h[j][1] == chi[j]);
  }
  const auto c100 = schur_character(h, 1, 0, 0);
  const auto c001 = schur_character(h, 0, 0, 1);
  const auto c010 = schur_character(h, 0, 1, 0);
  const auto ext = exterior_square_character(b.group, chi);
  for (std::size_t j = 0; j < chi.size(); ++j) {
    CHECK(c100[j] == chi[j]);
    CHECK(c001[j] == chi[j].conjugate());
    CHECK(c010[j] == ext[j]);
  }
  // Identity class gives the dimension.
  const auto c = schur_character(h, 1, 1, 1);
  CHECK(c[0] == Cyclotomic(64));
}

TEST_CASE("trivial group Schur table is the Weyl dimension") {
  const auto& b = test::bundle("trivial");
  const MultiplicityTable t = schur_table(b.table, b.group, 7);
  CHECK(t.method == "schur_character");
  for (const auto& m : triples_up_to(7)) CHECK(t.at(m[0], m[1], m[2]) == std::vector<long>{weyl_dim(m[0], m[1], m[2])});
}

TEST_CASE("recurrence base cases") {
  const auto& b = test::bundle("typeII");
  const MultiplicityTable t = cg_table(b.tensors, 1);
  CHECK(t.method == "cg_recurrence");
  for (std::size_t i = 0; i < b.tensors.size(); ++i) {
    CHECK(t.at(0, 0, 0)[i] == (i == 0 ? 1 : 0));
    CHECK(t.at(1, 0, 0)[i] == b.tensors.a1[i][0]);
    CHECK(t.at(0, 1, 0)[i] == b.tensors.a2[i][0]);
    CHECK(t.at(0, 0, 1)[i] == b.tensors.a3[i][0]);
  }
}

TEST_CASE("the three computations agree") {
  for (const char* name : {"trivial", "cyclic4", "typeII"}) {
    CAPTURE(name);
    const auto& b = test::bundle(name);
    const int n = 6;
    const MultiplicityTable cg = cg_table(b.tensors, n);
    const MultiplicityTable schur = schur_table(b.table, b.group, n);
    const MultiplicityTable series = extract_multiplicities(compute_series(b.table, b.tensors, name), n);
    CHECK(table_mismatches(cg, schur, n).empty());
    CHECK(table_mismatches(series, schur, n).empty());
    CHECK(check_conservation(schur, b.table.degrees).passed);
  }
}

TEST_CASE("parallel Schur table equals the serial reference") {
  const auto& b = test::bundle("typeII");
  const int before = max_threads();
  set_num_threads(4);
  const MultiplicityTable par = schur_table(b.table, b.group, 5);
  set_num_threads(before);
  const MultiplicityTable ser = schur_table_serial(b.table, b.group, 5);
  CHECK(par.values == ser.values);
}

TEST_CASE("key relation holds and detects corruption") {
  const auto& b = test::bundle("typeII");
  const int n = 6;
  const MultiplicityTable schur = schur_table(b.table, b.group, n);
  const KeyRelationReport ok = key_relation_check(b.tensors, schur, n);
  CHECK(ok.passed());
  CHECK(ok.entries.size() == triples_up_to(n).size());

  MultiplicityTable bad = schur;
  bad.values.at(Monomial{2, 1, 0})[3] += 1;
  const KeyRelationReport broken = key_relation_check(b.tensors, bad, n);
  CHECK_FALSE(broken.passed());
  // The corrupted entry has degree 3, so lower degrees are unaffected.
  for (const auto& e : broken.entries) {
    if (total_degree(e.monomial) < 3) CHECK(e.passed);
  }
  CHECK(broken.entries.size() == ok.entries.size());
}

TEST_CASE("conservation detects a wrong table") {
  const auto& b = test::bundle("cyclic4");
  MultiplicityTable t = schur_table(b.table, b.group, 3);
  CHECK(check_conservation(t, b.table.degrees).passed);
  t.values.at(Monomial{1, 1, 0})[0] += 1;
  CHECK_FALSE(check_conservation(t, b.table.degrees).passed);
}

TEST_CASE("recurrence rejects inconsistent matrices") {
  TensorMatrices m = test::bundle("typeII").tensors;
  m.a1[0][3] = 0;
  m.a1[3][0] = 0;
  CHECK_THROWS_AS(cg_table(m, 4), PipelineError);
}

TEST_CASE("triple enumeration") {
  const auto t = triples_up_to(2);
  CHECK(t.size() == 10);
  CHECK(t.front() == Monomial{0, 0, 0});
  CHECK(triples_up_to(5).size() == 56);
}

}  // TEST_SUITE
