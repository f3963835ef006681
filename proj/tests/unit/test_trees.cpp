#include <set>
#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "spectree/families.hpp"
#include "spectree/trees.hpp"

using namespace spectree;

namespace {

// Independent canonical form: for every root, encode the rooted tree as a
// nested list of sorted child encodings; keep the lexicographically largest.
std::vector<int> rooted_encoding(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::vector<int>> kids;
    for (Vertex w : t.neighbors(v))
        if (w != parent) kids.push_back(rooted_encoding(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::vector<int> out{1};
    for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
    out.push_back(0);
    return out;
}

std::vector<int> oracle_form(const Graph& t) {
    std::vector<int> best;
    for (Vertex r = 0; r < t.order(); ++r) best = std::max(best, rooted_encoding(t, r, t.order()));
    return best;
}

// Unlabelled trees on n vertices, via all Prufer sequences.
std::set<std::vector<int>> prufer_classes(std::size_t n) {
    std::set<std::vector<int>> out;
    if (n == 1) {
        out.insert(oracle_form(Graph(1)));
        return out;
    }
    std::vector<std::size_t> seq(n - 2, 0);
    while (true) {
        out.insert(oracle_form(prufer_decode(seq)));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("free tree counts") {
    const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (std::size_t n = 1; n <= kMaxEnumeratedTreeOrder; ++n) {
        CAPTURE(n);
        const auto trees = enumerate_free_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        for (const auto& t : trees) {
            CHECK(t.order() == n);
            CHECK(is_tree(t));
        }
    }
    CHECK_THROWS_AS(enumerate_free_trees(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_free_trees(11), std::out_of_range);
}

TEST_CASE("enumeration matches Prufer classes") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto oracle = prufer_classes(n);
        std::set<std::vector<int>> ours;
        for (const auto& t : enumerate_free_trees(n)) ours.insert(oracle_form(t));
        CHECK(ours == oracle);
    }
}

TEST_CASE("enumeration is ordered by canonical form and stable") {
    const auto a = enumerate_free_trees(8);
    const auto b = enumerate_free_trees(8);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(tree_canonical_form(a[i - 1]) < tree_canonical_form(a[i]));
}

TEST_CASE("canonical form is invariant under relabelling") {
    auto g = testing::rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = testing::uniform(g, 1, 12);
        const Graph t = random_labelled_tree(n, g);
        const auto perm = testing::random_permutation(n, g);
        CHECK(tree_canonical_form(relabel(t, perm)) == tree_canonical_form(t));
        CHECK((oracle_form(relabel(t, perm)) == oracle_form(t)));
    }
}

TEST_CASE("canonical forms separate and rebuild trees") {
    CHECK(tree_canonical_form(path_graph(4)) != tree_canonical_form(star_graph(4)));
    CHECK_THROWS_AS(tree_canonical_form(complete_graph(3)), std::invalid_argument);
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            const auto code = tree_canonical_form(t);
            const Graph back = tree_from_canonical_form(code);
            CHECK(is_tree(back));
            CHECK(tree_canonical_form(back) == code);
        }
    }
}

TEST_CASE("Prufer decoding") {
    const std::size_t star_seq[] = {0, 0, 0};
    CHECK(prufer_decode(star_seq) == star_graph(5));
    const std::size_t path_seq[] = {1, 2};
    CHECK(prufer_decode(path_seq) == path_graph(4));
    CHECK(prufer_decode({}).order() == 2);
}

TEST_CASE("random labelled trees are trees and reproducible") {
    auto g1 = testing::rng(99);
    auto g2 = testing::rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
        const Graph a = random_labelled_tree(n, g1);
        CHECK(is_tree(a));
        CHECK(a == random_labelled_tree(n, g2));
    }
}
