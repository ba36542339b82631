#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "gadic/bfs_oracle.hpp"
#include "gadic/errors.hpp"
#include "gadic/expansion.hpp"
#include "gadic/generating_set.hpp"
#include "gadic/lambda.hpp"

using namespace gadic;

namespace {

std::vector<Integer> ints(std::initializer_list<std::int64_t> values) {
    return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("descriptor parsing round-trips") {
    CHECK(GeneratingSetDescriptor::parse("g:5").to_string() == "g:5");
    CHECK(GeneratingSetDescriptor::parse("primes:all").to_string() == "primes:all");
    CHECK(GeneratingSetDescriptor::parse("primes:7,3,2").to_string() == "primes:2,3,7");
    CHECK(GeneratingSetDescriptor::parse("list:9,1,2").to_string() == "list:1,2,9");
    CHECK_THROWS_AS(GeneratingSetDescriptor::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratingSetDescriptor::parse("moons:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratingSetDescriptor::parse("g:1"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratingSetDescriptor::parse("list:"), std::invalid_argument);
}

TEST_CASE("generator enumeration") {
    CHECK(enumerate_generators(GeneratingSetDescriptor::single(2), 10) == ints({1, 2, 4, 8}));
    CHECK(enumerate_generators(GeneratingSetDescriptor::prime_list({2, 3}), 10) ==
          ints({1, 2, 3, 4, 8, 9}));
    CHECK(enumerate_generators(GeneratingSetDescriptor::prime_list({2, 3, 5, 7}), 10) ==
          ints({1, 2, 3, 4, 5, 7, 8, 9}));
    CHECK(enumerate_generators(GeneratingSetDescriptor::every_prime(), 10) ==
          ints({1, 2, 3, 4, 5, 7, 8, 9}));
    CHECK(enumerate_generators(GeneratingSetDescriptor::single(2), 1) == ints({1}));
    CHECK_THROWS_AS(enumerate_generators(GeneratingSetDescriptor::single(2), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeneratingSetDescriptor::prime_list({}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratingSetDescriptor::list({}), std::invalid_argument);
}

TEST_CASE("binary word lengths around the origin") {
    const auto table = bfs_lengths(GeneratingSetDescriptor::single(2), -16, 16, 4);
    CHECK(table.at(0) == 0);
    CHECK(table.at(3) == 2);
    CHECK(table.at(11) == 3);
    for (std::int64_t p : {1, 2, 4, 8, 16})
        CHECK(table.at(p) == 1);
}

TEST_CASE("generators sit at distance one") {
    for (std::int64_t g : {2, 3, 5, 10}) {
        const auto table = bfs_lengths(GeneratingSetDescriptor::single(g), -100, 100, 4);
        for (Integer p = 1; p <= 100; p *= g)
            CHECK(table.at(to_int64(p)) == 1);
    }
}

TEST_CASE("oracle lengths equal expansion lengths in base 2") {
    const auto table = bfs_lengths(GeneratingSetDescriptor::single(2), -2000, 2000, 4);
    for (std::int64_t n = -2000; n <= 2000; ++n)
        CHECK(Integer(table.at(n)) == g_length(n, 2));
}

TEST_CASE("window errors") {
    const auto s2 = GeneratingSetDescriptor::single(2);
    CHECK_THROWS_AS(bfs_lengths(s2, 1, 10, 4), std::invalid_argument);
    CHECK_THROWS_AS(bfs_lengths(s2, -10, -1, 4), std::invalid_argument);
    CHECK_THROWS_AS(bfs_lengths(s2, -10, 10, 0), std::invalid_argument);
    // Without 1 in the set, odd integers are unreachable.
    CHECK_THROWS_AS(bfs_lengths(GeneratingSetDescriptor::list({Integer(2)}), -4, 4, 4),
                    computation_error);
}

TEST_CASE("margin doubling does not change reported lengths") {
    for (std::int64_t g : {2, 3}) {
        const auto narrow = bfs_lengths(GeneratingSetDescriptor::single(g), -500, 500, 4);
        const auto wide = bfs_lengths(GeneratingSetDescriptor::single(g), -500, 500, 8);
        CHECK(narrow.lengths == wide.lengths);
    }
}

TEST_CASE("lengths are symmetric") {
    const auto table = bfs_lengths(GeneratingSetDescriptor::prime_list({2, 3}), -600, 600, 4);
    for (std::int64_t n = 0; n <= 600; ++n)
        CHECK(table.at(n) == table.at(-n));
}

TEST_CASE("every distance class below the horizon is populated") {
    const auto table = bfs_lengths(GeneratingSetDescriptor::single(3), -729, 729, 4);
    std::map<std::int32_t, int> by_distance;
    std::int32_t max_distance = 0;
    for (std::int64_t n = -729; n <= 729; ++n) {
        ++by_distance[table.at(n)];
        max_distance = std::max(max_distance, table.at(n));
    }
    for (std::int32_t d = 0; d <= max_distance; ++d)
        CHECK(by_distance[d] > 0);
}

TEST_CASE("oracle lambda matches the reference values") {
    CHECK(oracle_lambda(GeneratingSetDescriptor::single(2), 4, 100, 4) == Integer(43));
    CHECK(oracle_lambda(GeneratingSetDescriptor::single(3), 3, 100, 4) == Integer(5));
    CHECK(!oracle_lambda(GeneratingSetDescriptor::single(2), 9, 100, 4).has_value());
}

TEST_CASE("smallest two-three-power integer of length 3 (frozen regression value)") {
    // No closed form is known for mixed prime sets; the BFS oracle itself is
    // the source of this constant.
    const auto result = oracle_lambda(GeneratingSetDescriptor::prime_list({2, 3}), 3, 5000, 4);
    REQUIRE(result.has_value());
    CHECK(*result == Integer(21));
}

TEST_CASE("shortest decompositions are witnesses of the BFS distance") {
    const auto s23 = GeneratingSetDescriptor::prime_list({2, 3});
    const auto table = bfs_lengths(s23, -64, 64, 4);
    for (std::int64_t n = -64; n <= 64; ++n) {
        const auto terms = shortest_decomposition(s23, n, 4);
        CHECK(terms.size() == static_cast<std::size_t>(table.at(n)));
        Integer sum = 0;
        for (const Integer& t : terms)
            sum += t;
        CHECK(sum == n);
    }
}
