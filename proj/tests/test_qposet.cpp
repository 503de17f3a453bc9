#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qgr/errors.hpp"
#include "qgr/qposet.hpp"

using namespace qgr;

namespace {

QuantumIndex qi(std::vector<int> alpha, int level) { return QuantumIndex{std::move(alpha), level}; }

// Independent oracle: standard Young tableaux of a p x m rectangle by direct
// enumeration of growth sequences.
long syt_brute(int p, int m) {
    std::vector<int> rows(static_cast<size_t>(p), 0);
    std::function<long()> rec = [&]() -> long {
        bool full = true;
        for (int r : rows)
            if (r < m) full = false;
        if (full) return 1;
        long total = 0;
        for (int r = 0; r < p; ++r) {
            if (rows[static_cast<size_t>(r)] >= m) continue;
            if (r > 0 && rows[static_cast<size_t>(r)] >= rows[static_cast<size_t>(r - 1)]) continue;
            ++rows[static_cast<size_t>(r)];
            total += rec();
            --rows[static_cast<size_t>(r)];
        }
        return total;
    };
    return rec();
}

}  // namespace

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(ProblemShape::create(1, 2, 0), input_error);
    CHECK_THROWS_AS(ProblemShape::create(2, 1, 0), input_error);
    CHECK_THROWS_AS(ProblemShape::create(2, 2, -1), input_error);
    auto shape = ProblemShape::create(2, 3, 1);
    CHECK(shape.n() == 5);
    CHECK(shape.N() == 11);
}

TEST_CASE("index validation and keys") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK_THROWS_AS(validate_index(shape, qi({1, 1}, 0)), input_error);
    CHECK_THROWS_AS(validate_index(shape, qi({1, 5}, 0)), input_error);
    CHECK_THROWS_AS(validate_index(shape, qi({1, 2}, 2)), input_error);
    CHECK_THROWS_AS(validate_index(shape, qi({1, 2, 3}, 0)), input_error);

    QuantumIndex x = qi({3, 4}, 1);
    CHECK(x.key() == "1:3,4");
    CHECK(QuantumIndex::from_key("1:3,4") == x);
    CHECK(x.label() == "34^(1)");
}

TEST_CASE("rank formula") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK(rank(shape, qi({1, 2}, 0)) == 0);
    CHECK(rank(shape, qi({3, 4}, 1)) == 8);
    CHECK(rank(shape, qi({3, 4}, 1)) == shape.N());
    CHECK(rank(shape, qi({1, 2}, 1)) == 4);
    CHECK_THROWS_AS(rank(shape, qi({1, 2}, 3)), input_error);
}

TEST_CASE("order relation examples") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK(leq(shape, qi({2, 4}, 0), qi({1, 2}, 1)));
    CHECK_FALSE(leq(shape, qi({3, 4}, 0), qi({1, 2}, 1)));
    for (const auto& x : enumerate_indices(shape)) CHECK(leq(shape, x, x));
}

TEST_CASE("order relation is a partial order at desk scale") {
    for (auto shape : {ProblemShape::create(2, 2, 1), ProblemShape::create(3, 2, 1)}) {
        auto elements = enumerate_indices(shape);
        for (const auto& x : elements) {
            for (const auto& y : elements) {
                if (leq(shape, x, y) && leq(shape, y, x)) CHECK(x == y);
                for (const auto& z : elements)
                    if (leq(shape, x, y) && leq(shape, y, z)) CHECK(leq(shape, x, z));
            }
        }
    }
}

TEST_CASE("covers against brute force") {
    auto shape = ProblemShape::create(2, 2, 1);
    auto [lower, upper] = covers(shape, qi({1, 2}, 1));
    REQUIRE(lower.size() == 1);
    CHECK(lower[0] == qi({2, 4}, 0));

    auto [lower_min, upper_min] = covers(shape, qi({1, 2}, 0));
    CHECK(lower_min.empty());
    REQUIRE(upper_min.size() == 1);
    CHECK(upper_min[0] == qi({1, 3}, 0));
}

TEST_CASE("transitive closure of covers equals the order") {
    for (auto shape : {ProblemShape::create(2, 2, 1), ProblemShape::create(3, 2, 1)}) {
        QuantumPoset poset(shape);
        const int n = poset.size();
        std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                             std::vector<bool>(static_cast<size_t>(n), false));
        for (int i = 0; i < n; ++i) {
            reach[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
            for (int u : poset.upper_covers(i)) reach[static_cast<size_t>(i)][static_cast<size_t>(u)] = true;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
                        reach[static_cast<size_t>(k)][static_cast<size_t>(j)])
                        reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(reach[static_cast<size_t>(i)][static_cast<size_t>(j)] == poset.leq_ids(i, j));
    }
}

TEST_CASE("greatest lower bounds") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK(glb(shape, qi({1, 4}, 0), qi({2, 3}, 0)) == qi({1, 3}, 0));

    QuantumPoset poset(shape);
    for (int x = 0; x < poset.size(); ++x) {
        CHECK(poset.glb_ids(x, x) == x);
        CHECK(poset.glb_ids(poset.bottom_id(), x) == poset.bottom_id());
    }
}

TEST_CASE("chain counts and degrees") {
    auto shape = ProblemShape::create(2, 2, 1);
    CHECK(chain_count(shape, qi({1, 2}, 0)) == 1);
    CHECK(delta_chains(shape) == 8);
    CHECK(delta_chains(ProblemShape::create(3, 2, 0)) == 5);
    CHECK(delta_chains(ProblemShape::create(3, 2, 0)) == syt_rectangle(2, 3));

    QuantumPoset poset(shape);
    const auto& counts = poset.chain_counts();
    for (int i = 0; i < poset.size(); ++i) {
        const auto& lows = poset.lower_covers(i);
        if (lows.empty()) {
            CHECK(counts[static_cast<size_t>(i)] == 1);
        } else {
            BigInt total(0);
            for (int l : lows) total += counts[static_cast<size_t>(l)];
            CHECK(counts[static_cast<size_t>(i)] == total);
        }
    }
}

TEST_CASE("closed degree formula") {
    CHECK(delta_formula(ProblemShape::create(2, 2, 1)) == 8);
    CHECK(delta_formula(ProblemShape::create(2, 2, 0)) == 2);
    CHECK(delta_formula(ProblemShape::create(3, 2, 0)) == 5);
    CHECK(delta_formula(ProblemShape::create(3, 2, 1)) == 55);
    CHECK(delta_formula(ProblemShape::create(2, 3, 1)) == 55);
    for (int m = 2; m <= 3; ++m)
        for (int p = 2; p <= 3; ++p)
            for (int q = 0; q <= 2; ++q) {
                auto shape = ProblemShape::create(m, p, q);
                CHECK(delta_formula(shape) == delta_chains(shape));
            }
}

TEST_CASE("tableau counts") {
    CHECK(syt_rectangle(1, 5) == 1);
    CHECK(syt_rectangle(2, 2) == 2);
    CHECK(syt_rectangle(2, 2) == syt_brute(2, 2));
    CHECK(syt_rectangle(3, 3) == 42);
    CHECK(syt_rectangle(3, 3) == syt_brute(3, 3));
    CHECK(syt_rectangle(2, 4) == syt_brute(2, 4));
    CHECK_THROWS_AS(syt_rectangle(0, 3), input_error);
}

TEST_CASE("unique extremes and gradedness") {
    for (auto shape : {ProblemShape::create(2, 2, 1), ProblemShape::create(2, 3, 1),
                       ProblemShape::create(3, 2, 2)}) {
        QuantumPoset poset(shape);
        int bottoms = 0, tops = 0;
        for (int i = 0; i < poset.size(); ++i) {
            if (poset.lower_covers(i).empty()) ++bottoms;
            if (poset.upper_covers(i).empty()) ++tops;
            for (int l : poset.lower_covers(i)) CHECK(poset.rank_of(l) + 1 == poset.rank_of(i));
        }
        CHECK(bottoms == 1);
        CHECK(tops == 1);
        CHECK(poset.rank_of(poset.bottom_id()) == 0);
        CHECK(poset.rank_of(poset.top_id()) == shape.N());
        CHECK(poset.validate_covers_exhaustively());
    }
}

TEST_CASE("exports") {
    QuantumPoset poset(ProblemShape::create(2, 2, 1));
    std::string dot = hasse_dot(poset);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("12^(0)|0") != std::string::npos);
    CHECK(dot.find("34^(1)|8") != std::string::npos);

    std::string json = chain_counts_json(poset);
    CHECK(json.find("\"0:1,2\": \"1\"") != std::string::npos);
    CHECK(json.find("\"1:3,4\": \"8\"") != std::string::npos);
}
