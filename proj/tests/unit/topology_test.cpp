#include <algorithm>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "softtop/miner.hpp"
#include "softtop/topology.hpp"

using namespace softtop;
using testing_support::context;
using testing_support::space;
using testing_support::to_lib;

namespace {

std::vector<oracle::Family> library_topologies(std::size_t n, std::size_t m, Flavor flavor) {
  const auto ctx = context(n, m);
  std::vector<oracle::Family> out;
  for (const auto& t : enumerate_topologies(ctx, flavor, 64, testing_support::roomy())) {
    out.push_back(oracle::sorted(oracle::from_lib(t.opens())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("CS topologies match a brute-force search over all subfamilies") {
  for (auto [n, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    CAPTURE(n);
    CAPTURE(m);
    const auto s = space(n, m);
    CHECK(library_topologies(n, m, Flavor::kCS) == testing_support::cs_topologies(s));
  }
}

TEST_CASE("there are 90 CS topologies on two points with two parameters") {
  CHECK(library_topologies(2, 2, Flavor::kCS).size() == 90);
}

TEST_CASE("pointwise and per-parameter topologies match a brute-force search") {
  for (auto [n, m] : {std::pair{2, 1}, {2, 2}}) {
    CAPTURE(n);
    CAPTURE(m);
    const auto s = space(n, m);
    const auto all = oracle::all_sets(s, false);
    CHECK(library_topologies(n, m, Flavor::kShabirNaz) ==
          testing_support::brute_force_topologies(
              s, all, [&](const oracle::Family& f) { return oracle::sn_topology(s, f); }));
    CHECK(library_topologies(n, m, Flavor::kHazra) ==
          testing_support::brute_force_topologies(
              s, all, [&](const oracle::Family& f) { return oracle::hazra_topology(s, f); }));
  }
}

TEST_CASE("validation reports the first missing union and rejects mixed members") {
  const auto ctx = context(3, 2);
  const SoftSet a(ctx, {0b011, 0b001});
  const SoftSet b(ctx, {0b001, 0b111});
  const std::vector<SoftSet> fam{SoftSet::null(ctx), a, b, SoftSet::absolute(ctx)};
  const auto report = validate(ctx, fam, Flavor::kCS);
  CHECK_FALSE(report.valid);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().kind == Violation::Kind::kUnionNotClosed);
  CHECK(report.violations.front().missing == SoftSet(ctx, {0b011, 0b111}));
  CHECK_THROWS_AS(SoftTopology::make(ctx, fam), Error);

  const std::vector<SoftSet> mixed{SoftSet::null(ctx), SoftSet(ctx, {0b001, 0}),
                                   SoftSet::absolute(ctx)};
  const auto bad = validate(ctx, mixed, Flavor::kCS);
  CHECK_FALSE(bad.valid);
  CHECK(bad.violations.front().kind == Violation::Kind::kMixedMember);
}

TEST_CASE("closure, interior and limiting elements agree with the reference everywhere") {
  const auto ctx = context(2, 2);
  const auto s = space(2, 2);
  const auto sets = oracle::all_sets(s, true);
  for (const auto& tau : testing_support::cs_topologies(s)) {
    const auto t = SoftTopology::make(ctx, to_lib(ctx, tau));
    CHECK(oracle::sorted(oracle::from_lib(closed_family(t))) ==
          oracle::sorted(oracle::closed_sets(s, tau)));
    for (const auto& f : sets) {
      const SoftSet lf = to_lib(ctx, f);
      CHECK(is_soft_closed(t, lf) == oracle::is_closed(s, tau, f));
      CHECK(oracle::from_lib(closure(t, lf)) == oracle::closure(s, tau, f));
      CHECK(oracle::from_lib(interior_elements(t, lf)) == oracle::interior_elements(s, tau, f));
      CHECK(oracle::from_lib(interior(t, lf)) == oracle::interior(s, tau, f));
      CHECK(oracle::from_lib(limiting_elements(t, lf)) == oracle::limiting_elements(s, tau, f));
      for (const auto& x : oracle::all_elements(s)) {
        SoftElement lx(ctx, std::vector<std::size_t>(x.begin(), x.end()));
        CHECK(is_nbd(t, lf, lx) == oracle::is_nbd(s, tau, f, x));
      }
    }
  }
}

TEST_CASE("the neighbourhood operator of every topology satisfies all five axioms") {
  const auto ctx = context(2, 2);
  for (const auto& t : enumerate_topologies(ctx, Flavor::kCS, 16, testing_support::roomy())) {
    CHECK(check_nbd_operator(neighborhood_operator(t)).all_hold());
  }
}

TEST_CASE("per-parameter crisp topologies lift to a CS topology") {
  const auto ctx = context(2, 2);
  const std::vector<std::vector<Fiber>> per{{0b00, 0b01, 0b11}, {0b00, 0b11}};
  const auto t = from_crisp(ctx, per);
  CHECK(validate(ctx, t.opens(), Flavor::kCS).valid);
  CHECK(t.is_open(SoftSet(ctx, {0b01, 0b11})));
  CHECK_FALSE(t.is_open(SoftSet(ctx, {0b10, 0b11})));
  const std::vector<std::vector<Fiber>> broken{{0b00, 0b01}, {0b00, 0b11}};
  CHECK_THROWS_AS(from_crisp(ctx, broken), Error);
}
