#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/real_forms.hpp"

using namespace hitchin;

TEST_CASE("row label parsing") {
  const RealFormDescriptor su21 = parse_real_form("SU(p,q)", {2, 1});
  CHECK(su21.kind == RealFormKind::SU_pq);
  CHECK(su21.display() == "SU(2,1)");
  CHECK(su21.parent().family == Family::sl);
  CHECK(su21.parent().n == 3);

  const RealFormDescriptor slr = parse_real_form("SL(n,R)", {2});
  CHECK(slr.display() == "SL(2,R)");

  CHECK(parse_real_form("SO*(2m)", {2}).parent().family == Family::so_even);
  CHECK(parse_real_form("Sp(2p,2q)", {1, 1}).parent().n == 2);
  CHECK_THROWS_AS(parse_real_form("SU(p,q)", {2}), domain_error);
  CHECK_THROWS_AS(parse_real_form("E7(-25)", {7}), domain_error);
}

TEST_CASE("enumeration covers every row with parent size within the bound") {
  const auto forms = all_real_forms(4);
  int su_pq = 0, sl_r = 0, so_star = 0;
  for (const auto& f : forms) {
    CHECK(matrix_size(f.parent()) <= 4);
    if (f.kind == RealFormKind::SU_pq) ++su_pq;
    if (f.kind == RealFormKind::SL_R) ++sl_r;
    if (f.kind == RealFormKind::SO_star) ++so_star;
  }
  CHECK(sl_r == 3);    // SL(2,R), SL(3,R), SL(4,R)
  CHECK(su_pq == 4);   // SU(1,1), SU(2,1), SU(3,1), SU(2,2)
  CHECK(so_star == 1); // SO*(4)
}

TEST_CASE("split real form of sl(2) decomposes as 1 + 2 + 2 + 1") {
  const RowReport rep = verify_row(parse_real_form("SL(n,R)", {2}));
  CHECK(rep.all_pass);
  CHECK(rep.eigendims == std::array<int, 4>{1, 2, 2, 1});
  CHECK(rep.compact_dim == 1);
  CHECK(rep.expected_compact_dim == 1);
}

TEST_CASE("su(1,1) splits as compact dimension 1 plus 2") {
  const RowReport rep = verify_row(parse_real_form("SU(p,q)", {1, 1}));
  CHECK(rep.all_pass);
  CHECK(rep.eigendims[0] == 1);  // h
  CHECK(rep.eigendims[1] == 2);  // m
  CHECK(rep.compact_dim == 1);
}

TEST_CASE("su*(2) is the compact form in disguise") {
  const RowReport rep = verify_row(parse_real_form("SU*(2m)", {1}));
  CHECK(rep.all_pass);
  CHECK(rep.eigendims[0] == 3);
  CHECK(rep.eigendims[1] == 0);
  CHECK(rep.compact_dim == 3);
}

TEST_CASE("sp(2,R) has maximal compact u(1)") {
  const RowReport rep = verify_row(parse_real_form("Sp(2n,R)", {1}));
  CHECK(rep.all_pass);
  CHECK(rep.compact_dim == 1);
  CHECK(rep.expected_compact_dim == 1);
}

TEST_CASE("every named check appears in a row report") {
  const RowReport rep = verify_row(parse_real_form("SO(p,q)_odd", {3, 2}));
  CHECK(rep.all_pass);
  const std::vector<std::string> expected{
      "sigma_equals_rho_tau", "compact_killing_negative", "b_theta_positive_on_real_form",
      "bracket_mm_in_h", "sigma_fixed_is_h_plus_ih", "maximal_compact_matches_closed_form"};
  for (const auto& name : expected) {
    bool found = false;
    for (const auto& c : rep.checks) found = found || c.name == name;
    CHECK_MESSAGE(found, name);
  }
}

TEST_CASE("split cartan subalgebras exist for the split rows") {
  CHECK(has_split_cartan_row(parse_real_form("SL(n,R)", {2})));
  CHECK(has_split_cartan_row(parse_real_form("Sp(2n,R)", {2})));
  CHECK_FALSE(has_split_cartan_row(parse_real_form("SU*(2m)", {1})));
  const RealFormDescriptor slr = parse_real_form("SL(n,R)", {3});
  CHECK(static_cast<int>(split_cartan(slr).size()) == 2);
  CHECK(split_cartan_positive(slr));
}
