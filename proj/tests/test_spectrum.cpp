#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abspec/builders.hpp"
#include "abspec/spectrum.hpp"
#include "support.hpp"

using namespace abspec;
using namespace abspec::testing;

namespace {

std::vector<ElemSet> labels(const BitopSpace& s) { return s.ideal_labels; }

}  // namespace

TEST_CASE("points agree with the subset scan") {
  for (const char* f : {"z6.alg", "z12.alg", "c1.alg", "c3.alg", "b4.alg", "d12.alg",
                        "sg3.alg", "sg4.alg", "nonsep0.alg"}) {
    Algebra alg = fixture(f);
    CAPTURE(f);
    CHECK(labels(build_spectrum(alg, false)) == brute_points(alg, false));
    if (alg.carrier.xi0 && alg.carrier.xi1)
      CHECK(labels(build_spectrum(alg, true)) == brute_points(alg, true));
  }
}

TEST_CASE("ring and lattice point sets") {
  BitopSpace z6 = build_spectrum(fixture("z6.alg"), true);
  REQUIRE(z6.point_count() == 2);
  CHECK(z6.ideal_labels[0] == es({0, 3}));
  CHECK(z6.ideal_labels[1] == es({0, 2, 4}));
  CHECK(z6.point_names[0] == "{0,3}");
  CHECK(z6.point_names[1] == "{0,2,4}");

  BitopSpace z6all = build_spectrum(fixture("z6.alg"), false);
  REQUIRE(z6all.point_count() == 4);
  CHECK(z6all.ideal_labels[0] == ElemSet{});
  CHECK(z6all.ideal_labels[1] == es({0, 3}));
  CHECK(z6all.ideal_labels[2] == es({0, 2, 4}));
  CHECK(z6all.ideal_labels[3] == ElemSet::full(6));

  BitopSpace z12 = build_spectrum(fixture("z12.alg"), true);
  REQUIRE(z12.point_count() == 2);
  CHECK(z12.ideal_labels[0] == es({0, 3, 6, 9}));
  CHECK(z12.ideal_labels[1] == es({0, 2, 4, 6, 8, 10}));

  BitopSpace c3 = build_spectrum(fixture("c3.alg"), true);
  REQUIRE(c3.point_count() == 2);
  CHECK(c3.ideal_labels[0] == es({0}));
  CHECK(c3.ideal_labels[1] == es({0, 1}));

  BitopSpace b4 = build_spectrum(fixture("b4.alg"), true);
  REQUIRE(b4.point_count() == 2);
  CHECK(b4.ideal_labels[0] == es({0, 1}));
  CHECK(b4.ideal_labels[1] == es({0, 2}));
}

TEST_CASE("bitopology axioms hold on every fixture spectrum") {
  for (const char* f : {"z6.alg", "z12.alg", "c1.alg", "c3.alg", "b4.alg", "d12.alg",
                        "sg3.alg", "sg4.alg"}) {
    Algebra alg = fixture(f);
    CAPTURE(f);
    for (bool proper : {false, true}) {
      if (proper && !(alg.carrier.xi0 && alg.carrier.xi1)) continue;
      BitopSpace s = build_spectrum(alg, proper);
      CheckReport rep = check_spectrum_axioms(s);
      const CheckItem* bad = rep.first_failure();
      CHECK_MESSAGE(rep.pass(), (bad ? bad->name : ""));
    }
  }
}

TEST_CASE("stone flags") {
  JoinStone z6 = join_and_stone(build_spectrum(fixture("z6.alg"), true));
  CHECK(z6.stone_space);
  CHECK(z6.stone_spectrum);

  // chain spectrum: join discrete but the two topologies differ
  BitopSpace c3 = build_spectrum(fixture("c3.alg"), true);
  CHECK(c3.tplus.opens == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(c3.tminus.opens == std::vector<std::uint64_t>{0, 2, 3});
  JoinStone js = join_and_stone(c3);
  CHECK(js.stone_space);
  CHECK_FALSE(js.stone_spectrum);
  CHECK(js.join.discrete());
}

TEST_CASE("specialization order and extremes") {
  Specialization z6 = specialization_and_extremes(build_spectrum(fixture("z6.alg"), true));
  CHECK(z6.order_rows[0] == ElemSet::single(0));
  CHECK(z6.order_rows[1] == ElemSet::single(1));
  CHECK(z6.max_points == es({0, 1}));
  CHECK(z6.min_points == es({0, 1}));

  Specialization c3 = specialization_and_extremes(build_spectrum(fixture("c3.alg"), true));
  CHECK(c3.order_rows[0] == es({0, 1}));
  CHECK(c3.order_rows[1] == es({1}));
  CHECK(c3.max_points == es({1}));
  CHECK(c3.min_points == es({0}));

  // order on labeled spectra is label inclusion
  for (const char* f : {"z6.alg", "b4.alg", "d12.alg", "sg3.alg"}) {
    Algebra alg = fixture(f);
    BitopSpace s = build_spectrum(alg, false);
    Specialization sp = specialization_and_extremes(s);
    CAPTURE(f);
    for (int a = 0; a < s.point_count(); ++a)
      for (int b = 0; b < s.point_count(); ++b)
        CHECK(sp.order_rows[a].contains(b) ==
              s.ideal_labels[a].subset_of(s.ideal_labels[b]));
  }
}

TEST_CASE("single-valued points coincide with the multivalued ones") {
  for (int k : {2, 3, 4}) {
    FiniteDistLattice l = chain_lattice(k);
    Algebra mv = lattice_algebra(l, false);
    Algebra sv = lattice_algebra(l, true);
    CAPTURE(k);
    for (bool proper : {false, true}) {
      BitopSpace a = build_spectrum(mv, proper);
      BitopSpace b = build_lspectrum(sv, proper);
      CHECK(labels(a) == labels(b));
      CHECK(a.tplus == b.tplus);
      CHECK(a.tminus == b.tminus);
    }
  }
  for (const char* f : {"sg3.alg", "sg4.alg"}) {
    Algebra alg = fixture(f);
    CAPTURE(f);
    CHECK(labels(build_lspectrum(alg, false)) == brute_lpoints(alg, false));
  }
}

TEST_CASE("spectrum argument and capacity errors") {
  CHECK_THROWS_AS(build_lspectrum(fixture("z6.alg"), false), input_error);
  CHECK_THROWS_AS(build_spectrum(fixture("sg3.alg"), true), input_error);

  Limits small;
  small.carrier_cap = 5;
  CHECK_THROWS_AS(build_spectrum(fixture("z6.alg"), false, small), capacity_error);
  Limits tight;
  tight.point_cap = 3;
  CHECK_THROWS_AS(build_spectrum(fixture("z6.alg"), false, tight), capacity_error);
}
