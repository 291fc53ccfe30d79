#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abspec/builders.hpp"
#include "abspec/duality.hpp"
#include "abspec/random_gen.hpp"
#include "abspec/spectrum.hpp"
#include "support.hpp"

using namespace abspec;
using namespace abspec::testing;

namespace {

std::vector<FiniteDistLattice> fixture_lattices() {
  return {chain_lattice(1), chain_lattice(2), chain_lattice(3), chain_lattice(4),
          chain_lattice(6), powerset_lattice(1), powerset_lattice(2),
          powerset_lattice(3), divisor_lattice(12), divisor_lattice(30)};
}

}  // namespace

TEST_CASE("lattice prime ideals") {
  for (const FiniteDistLattice& l : fixture_lattices()) {
    CAPTURE(l.size);
    CHECK(lattice_prime_ideals(l) == brute_lattice_prime_ideals(l));
    CHECK(lattice_prime_ideals(l).size() == join_irreducibles(l).size());
  }
  CHECK(lattice_prime_ideals(chain_lattice(1)).empty());
  CHECK(lattice_prime_ideals(chain_lattice(2)) == std::vector<ElemSet>{es({0})});
  for (int k : {3, 4, 5, 6})
    CHECK(lattice_prime_ideals(chain_lattice(k)).size() == static_cast<size_t>(k - 1));
  CHECK(lattice_prime_ideals(powerset_lattice(2)).size() == 2);
  CHECK(lattice_prime_ideals(powerset_lattice(3)).size() == 3);

  // divisors of 12 are 1,2,3,4,6,12 in index order
  auto d12 = lattice_prime_ideals(divisor_lattice(12));
  REQUIRE(d12.size() == 3);
  CHECK(d12[0] == es({0, 2}));        // {1,3}
  CHECK(d12[1] == es({0, 1, 3}));     // {1,2,4}
  CHECK(d12[2] == es({0, 1, 2, 4}));  // {1,2,3,6}
}

TEST_CASE("stone spectra of the fixture lattices") {
  for (const FiniteDistLattice& l : fixture_lattices()) {
    CAPTURE(l.size);
    StoneSpec s = stone_spec(l);
    CHECK(s.points == lattice_prime_ideals(l));
    CHECK(is_coherent(s.space.topology).pass());
    CHECK(roundtrip_coherent(s.space));
  }
  CHECK(stone_spec(chain_lattice(1)).points.empty());
  CHECK(stone_spec(chain_lattice(1)).space.point_count() == 0);
}

TEST_CASE("compact-open lattices") {
  // chain spectrum topology: opens nest, so KO is again a chain
  BitopSpace c3 = build_spectrum(fixture("c3.alg"), true);
  FiniteDistLattice ko = ko_lattice(functor_F(c3));
  REQUIRE(ko.size == 3);
  CHECK(ko.bottom == 0);
  CHECK(ko.top == 2);
  CHECK(ko.leq(0, 1));
  CHECK(ko.leq(1, 2));
  CHECK_FALSE(ko.leq(2, 1));
  CHECK(ko.check().pass());

  FiniteDistLattice disc = ko_lattice(functor_F(build_spectrum(fixture("z6.alg"), true)));
  CHECK(disc.size == 4);
  CHECK(disc.check().pass());
}

TEST_CASE("forgetting and rebuilding the second topology") {
  for (const char* f : {"z6.alg", "z12.alg", "c3.alg", "b4.alg", "d12.alg", "sg3.alg"}) {
    Algebra alg = fixture(f);
    CAPTURE(f);
    for (bool proper : {false, true}) {
      if (proper && !(alg.carrier.xi0 && alg.carrier.xi1)) continue;
      BitopSpace s = build_spectrum(alg, proper);
      CHECK(roundtrip_space(s));
      CoherentSpace coh = functor_F(s);
      CHECK(is_coherent(coh.topology).pass());
      CHECK(roundtrip_coherent(coh));
      BitopSpace back = functor_G(coh);
      CHECK(back.tplus == s.tplus);
      CHECK(back.tminus == s.tminus);
    }
  }

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteTopology t = random_t0_topology(6, rng);
    CAPTURE(trial);
    CHECK(is_coherent(t).pass());
    CoherentSpace coh{t};
    CHECK(roundtrip_coherent(coh));
    CHECK(roundtrip_space(functor_G(coh)));
  }

  CHECK_FALSE(is_coherent(indiscrete_topology(2)).pass());
}

TEST_CASE("hom enumeration") {
  FiniteDistLattice c2 = chain_lattice(2), c3 = chain_lattice(3), b4 = powerset_lattice(2);
  CHECK(enumerate_homs(c2, c3).size() == 1);
  CHECK(enumerate_homs(c3, c2).size() == 2);
  CHECK(enumerate_homs(b4, c2).size() == 2);
  CHECK(enumerate_homs(c2, b4).size() == 1);
  CHECK(enumerate_homs(b4, b4).size() == 4);

  // oracle: filter all maps preserving bounds, joins, and meets
  for (const FiniteDistLattice& src : {c3, b4})
    for (const FiniteDistLattice& dst : {c2, c3, b4}) {
      CAPTURE(src.size);
      CAPTURE(dst.size);
      std::vector<std::vector<int>> expect;
      std::vector<int> map(src.size, 0);
      for (;;) {
        bool ok = map[src.bottom] == dst.bottom && map[src.top] == dst.top;
        for (int a = 0; ok && a < src.size; ++a)
          for (int b = 0; ok && b < src.size; ++b) {
            if (map[src.join(a, b)] != dst.join(map[a], map[b])) ok = false;
            if (map[src.meet(a, b)] != dst.meet(map[a], map[b])) ok = false;
          }
        if (ok) expect.push_back(map);
        int k = src.size - 1;
        while (k >= 0 && map[k] == dst.size - 1) map[k--] = 0;
        if (k < 0) break;
        ++map[k];
      }
      CHECK(enumerate_homs(src, dst) == expect);
    }

  CHECK_THROWS_AS(make_hom(c3, c2, {0, 0, 0}), input_error);  // drops the top
  LatticeHom h = make_hom(c3, c2, {0, 1, 1});
  LatticeHom hh = compose(make_hom(c2, c3, {0, 2}), h);
  CHECK(hh.map == std::vector<int>{0, 1});
  CHECK_FALSE(h.bijective());
  CHECK(make_hom(b4, b4, {0, 2, 1, 3}).bijective());
}

TEST_CASE("contravariant action and naturality") {
  FiniteDistLattice c2 = chain_lattice(2), c3 = chain_lattice(3), b4 = powerset_lattice(2);
  for (const FiniteDistLattice& l1 : {c2, c3, b4})
    for (const FiniteDistLattice& l2 : {c2, c3, b4}) {
      StoneSpec s1 = stone_spec(l1), s2 = stone_spec(l2);
      LatticeHom phi1 = natural_phi(l1), phi2 = natural_phi(l2);
      CAPTURE(l1.size);
      CAPTURE(l2.size);
      for (const std::vector<int>& map : enumerate_homs(l1, l2)) {
        LatticeHom h = make_hom(l1, l2, map);
        std::vector<int> smap = hom_to_spec_map(h);
        REQUIRE(smap.size() == s2.points.size());
        // spec(h) sends a prime ideal to its preimage
        for (size_t p = 0; p < smap.size(); ++p) {
          ElemSet pre;
          for (int a = 0; a < l1.size; ++a)
            if (s2.points[p].contains(h(a))) pre.add(a);
          CHECK(s1.points[static_cast<size_t>(smap[p])] == pre);
        }
        LatticeHom ko = coherent_map_to_hom(s2.space, s1.space, smap);
        for (int a = 0; a < l1.size; ++a) CHECK(ko(phi1(a)) == phi2(h(a)));
      }
    }

  // composing homs composes the spectrum maps the other way round
  for (const std::vector<int>& m1 : enumerate_homs(c3, b4))
    for (const std::vector<int>& m2 : enumerate_homs(b4, c3)) {
      LatticeHom h1 = make_hom(c3, b4, m1), h2 = make_hom(b4, c3, m2);
      std::vector<int> s12 = hom_to_spec_map(h1), s23 = hom_to_spec_map(h2);
      std::vector<int> s13 = hom_to_spec_map(compose(h1, h2));
      REQUIRE(s13.size() == s23.size());
      for (size_t p = 0; p < s13.size(); ++p)
        CHECK(s13[p] == s12[static_cast<size_t>(s23[p])]);
    }
}

TEST_CASE("duality units") {
  BitopSpace z6 = build_spectrum(fixture("z6.alg"), true);
  CoherentSpace coh = functor_F(z6);
  FiniteDistLattice l = ko_lattice(coh);
  NaturalIsos iso = natural_isos(coh, l);
  CHECK(iso.psi == std::vector<int>{1, 0});
  CHECK(iso.phi.map == std::vector<int>{0, 2, 1, 3});
  CHECK(iso.phi.bijective());

  for (const FiniteDistLattice& lat : fixture_lattices()) {
    CAPTURE(lat.size);
    LatticeHom phi = natural_phi(lat);
    CHECK(phi.bijective());
    CHECK(phi.source == lat);
    std::vector<int> psi = natural_psi(stone_spec(lat).space);
    CHECK(psi.size() == lattice_prime_ideals(lat).size());
  }

  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    CoherentSpace coh2{random_t0_topology(5, rng)};
    std::vector<int> psi = natural_psi(coh2);
    CAPTURE(trial);
    // a homeomorphism on points: bijective by pigeonhole
    std::vector<bool> hit(psi.size(), false);
    for (int p : psi) {
      REQUIRE(p >= 0);
      REQUIRE(static_cast<size_t>(p) < hit.size());
      hit[static_cast<size_t>(p)] = true;
    }
    CHECK(std::count(hit.begin(), hit.end(), false) == 0);
  }
}
