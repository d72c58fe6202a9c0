#include <doctest.h>

#include <map>
#include <set>

#include "gosset/steiner.hpp"
#include "oracles.hpp"

using namespace gosset;

TEST_CASE("names and parameters") {
  for (auto n : kSteinerNames) CHECK(parse_steiner_name(steiner_name(n)) == n);
  CHECK_FALSE(parse_steiner_name("SX9").has_value());
  const auto p = steiner_params(SteinerName::SB3S8);
  CHECK(p.r == 8);
  CHECK(p.k == 3);
  CHECK(p.c == 2);
  CHECK(p.sum_multiple == 3);
}

TEST_CASE("all five systems are designs") {
  const std::map<SteinerName, std::size_t> blocks{{SteinerName::SA2S7, 28},
                                                  {SteinerName::SA2S8, 120},
                                                  {SteinerName::SB3S6, 45},
                                                  {SteinerName::SB3S8, 2240},
                                                  {SteinerName::SC4S7, 630}};
  for (auto name : kSteinerNames) {
    CAPTURE(steiner_name(name));
    const auto lines = enumerate_lines(steiner_params(name).r);
    const auto sys = build_steiner(lines, name);
    CHECK(sys.blocks.size() == blocks.at(name));
    const auto rep = verify_design(lines, sys, 2);
    CHECK_MESSAGE(rep.pass, rep.detail);
    CHECK(block_sums_constant(lines, sys));
    CHECK(blocks_maximal(lines, sys));
    CHECK(weyl_invariant(lines, sys));
  }
}

TEST_CASE("SB3S6 block count by brute force over all triples") {
  const auto vs = oracle::scan(6, -1, -1);
  REQUIRE(vs.size() == 27);
  std::size_t triples = 0;
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = i + 1; j < 27; ++j)
      for (std::size_t k = j + 1; k < 27; ++k)
        if (oracle::dot(vs[i], vs[j], 6) == 1 && oracle::dot(vs[i], vs[k], 6) == 1 &&
            oracle::dot(vs[j], vs[k], 6) == 1)
          ++triples;
  const auto sys = build_steiner(enumerate_lines(6), SteinerName::SB3S6);
  CHECK(sys.blocks.size() == triples);
  CHECK(triples < steiner_triple_block_count(27));
  CHECK(steiner_triple_block_count(27) == 117);
}

TEST_CASE("a broken system is caught with a witness") {
  const auto lines = enumerate_lines(7);
  auto sys = build_steiner(lines, SteinerName::SC4S7);
  sys.blocks.pop_back();
  const auto rep = verify_design(lines, sys, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.counterexample.size() == 3);
  CHECK(rep.counterexample_blocks == 0);
}

TEST_CASE("pair cover checker") {
  const std::array<std::array<int, 3>, 7> fano{
      {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
  CHECK(verify_fano_steiner(fano).pass);
  auto bad = fano;
  bad[6] = {2, 4, 6};
  const auto rep = verify_fano_steiner(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness.has_value());
  const std::vector<std::array<int, 3>> six(fano.begin(), fano.begin() + 6);
  CHECK_FALSE(verify_pair_cover(7, six).pass);
}

TEST_CASE("root triples in E8") {
  const auto rep = root_triples(enumerate_roots(8));
  CHECK(rep.triples == 2240);
  CHECK(rep.all_sum_zero);
}

TEST_CASE("json export") {
  const auto sys = build_steiner(enumerate_lines(7), SteinerName::SA2S7);
  const auto j = to_json(sys);
  CHECK(j["name"] == "SA2S7");
  CHECK(j["blocks"].size() == 28);
}
