#include <algorithm>
#include <set>

#include "doctest.h"
#include "poset_shell/rook.hpp"

using namespace posets;

TEST_SUITE_BEGIN("rook_core");

TEST_CASE("from_matrix reads columns") {
    // 4x4 with 1s at rows 3 and 4 of columns 1 and 3.
    std::vector<std::vector<int>> m{
        {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}};
    CHECK(rook::from_matrix(m).word() == std::vector<int>{3, 0, 4, 0});

    CHECK(rook::from_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}) == rook::zero(3));
    CHECK(rook::from_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == rook::identity(3));
}

TEST_CASE("from_matrix rejects non-rooks") {
    CHECK_THROWS(rook::from_matrix({{1, 1}, {0, 0}}));
    CHECK_THROWS(rook::from_matrix({{1, 0}, {1, 0}}));
    CHECK_THROWS(rook::from_matrix({{2, 0}, {0, 0}}));
}

TEST_CASE("word validation") {
    CHECK_THROWS(rook({1, 1}));
    CHECK_THROWS(rook({3, 0}));
    CHECK_THROWS(rook({-1, 0}));
    CHECK_NOTHROW(rook({0, 0}));
}

TEST_CASE("matrix round trip") {
    for (int n = 0; n <= 4; ++n)
        for (const rook& r : enumerate_rooks(n)) CHECK(rook::from_matrix(r.to_matrix()) == r);
}

TEST_CASE("string format and parser") {
    CHECK(rook({3, 0, 4, 0}).str() == "(3,0,4,0)");
    CHECK(rook::zero(0).str() == "()");
    CHECK(parse_rook("(3,0,4,0)") == rook({3, 0, 4, 0}));
    CHECK(parse_rook(" ( 3 , 0 , 4 , 0 ) ") == rook({3, 0, 4, 0}));
    CHECK(parse_rook("()") == rook());
    CHECK_THROWS(parse_rook("3,0"));
    CHECK_THROWS(parse_rook("(3,0"));
    CHECK_THROWS(parse_rook("(3,,0)"));
}

TEST_CASE("enumerate_rooks counts and order") {
    CHECK(enumerate_rooks(3, 2).size() == 18); // 2! * C(3,2)^2
    CHECK(enumerate_rooks(3, 3).size() == 6);
    CHECK(enumerate_rooks(3, 0).size() == 1);
    CHECK(enumerate_rooks(3, 0).front() == rook::zero(3));
    CHECK(enumerate_rooks(0, 0).size() == 1);
    CHECK_THROWS(enumerate_rooks(3, 4));

    const auto all = enumerate_rooks(3);
    CHECK(all.size() == 34);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == rook::zero(3));

    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(static_cast<long long>(enumerate_rooks(n, k).size()) ==
                  rook_count_formula(n, k));
}

TEST_CASE("partial involutions are the symmetric rooks") {
    const auto p31 = enumerate_partial_involutions(3, 1);
    REQUIRE(p31.size() == 3);
    CHECK(p31[0].word() == std::vector<int>{0, 0, 3});
    CHECK(p31[1].word() == std::vector<int>{0, 2, 0});
    CHECK(p31[2].word() == std::vector<int>{1, 0, 0});

    CHECK(enumerate_partial_involutions(3, 3).size() == 4);
    CHECK(enumerate_partial_involutions(3).size() == 14);

    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::set<rook> filtered;
            for (const rook& r : enumerate_rooks(n, k))
                if (r.is_symmetric()) filtered.insert(r);
            std::set<rook> enumerated;
            for (const auto& x : enumerate_partial_involutions(n, k))
                enumerated.insert(x.as_rook());
            CHECK(filtered == enumerated);
        }
    }

    CHECK_THROWS(partial_involution(rook({2, 0})));
}

TEST_CASE("involution counts") {
    CHECK(involution_count(0) == 1);
    CHECK(involution_count(1) == 1);
    CHECK(involution_count(2) == 2);
    CHECK(involution_count(3) == 4);
    CHECK(involution_count(4) == 10);
    CHECK(involution_count(5) == 26);
}

TEST_CASE("corrected involution recurrence") {
    // tau_{n+1} = tau_n + n * tau_{n-1}.  The printed coefficient (n-1)
    // disagrees with enumeration already at n = 2.
    for (int n = 1; n <= 7; ++n)
        CHECK(involution_count(n + 1) ==
              involution_count(n) + n * involution_count(n - 1));
    CHECK(involution_count(3) != involution_count(2) + (2 - 1) * involution_count(1));
}

TEST_CASE("union cardinalities match the supporting lemma") {
    CHECK(union_cardinalities(1) == std::pair<long long, long long>{2, 2});
    CHECK(union_cardinalities(3) == std::pair<long long, long long>{24, 10});
    CHECK(union_cardinalities(4) == std::pair<long long, long long>{120, 26});
}

TEST_CASE("index partition") {
    auto p = compute_index_partition(rook({1, 3, 2}));
    CHECK(p.fixed == std::vector<int>{1});
    CHECK(p.exceedance == std::vector<int>{2});
    CHECK(p.defect == std::vector<int>{3});

    p = compute_index_partition(rook::identity(4));
    CHECK(p.fixed == std::vector<int>{1, 2, 3, 4});
    CHECK(p.exceedance.empty());
    CHECK(p.defect.empty());

    p = compute_index_partition(rook({3, 2, 1}));
    CHECK(p.fixed == std::vector<int>{2});
    CHECK(p.exceedance == std::vector<int>{1});
    CHECK(p.defect == std::vector<int>{3});

    CHECK_THROWS(compute_index_partition(rook({1, 0, 3})));
}

TEST_SUITE_END();
