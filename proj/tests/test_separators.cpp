#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sepstat/enumerate.hpp"
#include "sepstat/separators.hpp"

using namespace sepstat;

namespace {

std::vector<int> as_vector(const std::set<int>& s)
{
    return {s.begin(), s.end()};
}

// Deleting position `pos` leaves a bond between entries that were not already
// a bonded adjacent pair in p.
bool deletion_creates_new_bond(const Permutation& p, int pos)
{
    const Permutation child = delete_and_standardize(p, pos);
    auto origin = [&](int j) { return j < pos ? j : j + 1; };
    for (int j = 1; j < child.size(); ++j) {
        if (std::abs(child.at(j) - child.at(j + 1)) != 1)
            continue;
        const int a = origin(j);
        const int b = origin(j + 1);
        const bool old_bond = b == a + 1 && std::abs(p.at(a) - p.at(b)) == 1;
        if (!old_bond)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("vertical separators")
{
    CHECK(vertical_separators(Permutation{1, 3, 2, 4, 6, 5, 8, 7, 9}) == std::set<int>{2, 3, 6, 7});
    CHECK(vertical_separators(Permutation::identity(5)).empty());
    CHECK(vertical_separators(Permutation{5, 6, 7, 1, 3, 9, 4, 8, 2}).count(4) == 1);
    CHECK(vertical_separator_positions(Permutation{1, 3, 2, 4, 6, 5, 8, 7, 9}) == std::set<int>{2, 3, 5, 8});
}

TEST_CASE("horizontal separators")
{
    CHECK(horizontal_separators(Permutation{1, 3, 2, 4, 6, 5, 8, 7, 9}) == std::set<int>{2, 3, 5, 8});
    const auto h = horizontal_separators(Permutation{3, 1, 5, 2, 4});
    CHECK(h.count(3) == 1);
    CHECK(h.count(2) == 1);
    CHECK(horizontal_separators(Permutation{1, 2, 3}).empty());
}

TEST_CASE("separator report")
{
    // 3 horizontal, 5 vertical, 2 both: three separators in all.
    const SeparatorReport r = separator_report(Permutation{3, 1, 5, 2, 4});
    CHECK(r.vertical == std::set<int>{2, 5});
    CHECK(r.horizontal == std::set<int>{2, 3});
    CHECK(r.both == std::set<int>{2});
    CHECK(r.sep_count == 3);

    CHECK(separator_report(Permutation{2, 4, 1, 3}).sep_count == 4);
    CHECK(separator_report(Permutation{3, 1, 4, 2}).sep_count == 4);

    const SeparatorReport none = separator_report(Permutation{3, 2, 1});
    CHECK(none.vertical.empty());
    CHECK(none.horizontal.empty());
    CHECK(none.sep_count == 0);
}

TEST_CASE("separator-free and the knight test")
{
    CHECK(is_separator_free(Permutation{1, 2, 3}));
    CHECK_FALSE(has_knight_pair(Permutation{1, 2, 3}));
    CHECK_FALSE(is_separator_free(Permutation{1, 3, 2}));
    CHECK(has_knight_pair(Permutation{1, 3, 2}));

    int by_report = 0;
    int by_knight = 0;
    for (const auto& v : oracle::all_perms(4)) {
        by_report += is_separator_free(Permutation{v});
        by_knight += !oracle::knight_attack(v);
    }
    CHECK(by_report == by_knight);
    CHECK(by_report == 8);
}

TEST_CASE("exhaustive separator laws for n <= 7")
{
    for (int n = 0; n <= 7; ++n) {
        CAPTURE(n);
        for (const Permutation& p : SymmetricGroup(n)) {
            const SeparatorReport r = separator_report(p);
            REQUIRE(as_vector(r.vertical) == oracle::vertical_digits(p.values()));
            REQUIRE(as_vector(r.horizontal) == oracle::horizontal_digits(p.values()));

            // Sep_V(p) read through positions is Sep_H(p^-1).
            REQUIRE(horizontal_separators(inverse(p)) == vertical_separator_positions(p));
            REQUIRE(vertical_separators(inverse(p)) == [&] {
                std::set<int> pos;
                for (int a : r.horizontal)
                    pos.insert(p.position_of(a));
                return pos;
            }());

            const Permutation rev = reverse(p);
            REQUIRE(vertical_separators(rev) == r.vertical);
            REQUIRE(horizontal_separators(rev) == r.horizontal);

            if (n >= 1) {
                REQUIRE(r.horizontal.count(1) == 0);
                REQUIRE(r.horizontal.count(n) == 0);
                const auto vpos = vertical_separator_positions(p);
                REQUIRE(vpos.count(1) == 0);
                REQUIRE(vpos.count(n) == 0);
            }

            REQUIRE(is_separator_free(p) == !oracle::knight_attack(p.values()));
            REQUIRE(is_separator_free(p) == !has_knight_pair(p));

            for (int v : r.vertical)
                REQUIRE(deletion_creates_new_bond(p, p.position_of(v)));
            for (int v : r.horizontal)
                REQUIRE(deletion_creates_new_bond(p, p.position_of(v)));

            if (n >= 1 && is_king(p)) {
                int king_children = 0;
                for (const auto& c : children(p))
                    king_children += is_king(c);
                REQUIRE(king_children == n - r.sep_count);
            }
        }
    }
}

TEST_CASE("monotone middle deletions create bonds without being separators")
{
    // The 2 in [123]: deleting it joins 1 and 3, yet neither separator case applies.
    const Permutation p{1, 2, 3};
    CHECK(deletion_creates_new_bond(p, 2));
    CHECK(separator_report(p).sep_count == 0);
}

TEST_CASE("marked words")
{
    CHECK_NOTHROW(MarkedWord(Word{3, 6, 5, 4}, {2, 3}));
    CHECK_THROWS_AS(MarkedWord(Word{3, 6, 5, 4}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedWord(Word{3, 6}, {2}), std::invalid_argument);
}

TEST_CASE("arrowed composition text form")
{
    const auto lambda = ArrowedComposition::parse("1,2↑,1,1,3↓,1");
    CHECK(lambda.part_count() == 6);
    CHECK(lambda.total() == 9);
    CHECK(lambda.to_string() == "1,2↑,1,1,3↓,1");
    CHECK(ArrowedComposition::parse("1, 3v, 2^") ==
          ArrowedComposition({{1, Arrow::none}, {3, Arrow::down}, {2, Arrow::up}}));
    CHECK_THROWS_AS(ArrowedComposition::parse("2"), std::invalid_argument);
    CHECK_THROWS_AS(ArrowedComposition::parse("1↑"), std::invalid_argument);
    CHECK_THROWS_AS(ArrowedComposition::parse("1,,2↑"), std::invalid_argument);
}

TEST_CASE("encode and decode marked permutations")
{
    // [2 45 6 1 987 3] with 45 and 987 marked.
    const MarkedWord mp(Word{2, 4, 5, 6, 1, 9, 8, 7, 3}, {2, 6, 7});
    const auto [lambda, sigma] = encode_marked(mp);
    CHECK(lambda.to_string() == "1,2↑,1,1,3↓,1");
    CHECK(sigma == Permutation{2, 4, 5, 1, 6, 3});
    CHECK(decode_marked(lambda, sigma) == mp);

    const Permutation plain{3, 1, 4, 2};
    const auto [l2, s2] = encode_marked(MarkedWord(plain.word()));
    CHECK(l2.to_string() == "1,1,1,1");
    CHECK(s2 == plain);

    const MarkedWord alpha = decode_marked(ArrowedComposition::parse("1,3↓,1,1,2↑"), Permutation{3, 4, 2, 1, 5});
    CHECK(alpha.word() == Word{3, 6, 5, 4, 2, 1, 7, 8});
    CHECK(alpha.marked() == std::set<int>{2, 3, 7});

    const MarkedWord full = decode_marked(ArrowedComposition::parse("5↑"), Permutation{1});
    CHECK(full.word() == Word{1, 2, 3, 4, 5});
    CHECK(full.marked_count() == 4);
    CHECK(decode_marked(ArrowedComposition::parse("1"), Permutation{1}) == MarkedWord(Word{1}));
    CHECK_THROWS_AS(decode_marked(ArrowedComposition::parse("1,1"), Permutation{1}), std::invalid_argument);
}

TEST_CASE("comb_marked and split_marked")
{
    const MarkedSepPermutation a = comb_marked(MarkedWord(Word{3, 6, 5, 4}, {2, 3}), MarkedWord(Word{2, 1, 7, 8}, {3}));
    CHECK(a.perm() == Permutation{3, 2, 6, 1, 5, 7, 4, 8});
    CHECK(a.marked_sep_positions() == std::set<int>{4, 6, 7});  // 1, 7, 4

    const MarkedSepPermutation b = comb_marked(MarkedWord(Word{2, 3, 1, 6}, {1}), MarkedWord(Word{5, 4, 7}, {1}));
    CHECK(b.perm() == Permutation{2, 5, 3, 4, 1, 7, 6});
    CHECK(b.marked_sep_positions() == std::set<int>{2, 3});  // 5, 3

    const auto [odd, even] = split_marked(MarkedSepPermutation(Permutation{2, 7, 1, 8, 6, 3, 5, 4, 9}, {3, 6}));
    CHECK(odd == MarkedWord(Word{2, 1, 6, 5, 9}, {3}));
    CHECK(even == MarkedWord(Word{7, 8, 3, 4}, {1}));

    const auto [o2, e2] = split_marked(MarkedSepPermutation(Permutation{3, 1, 4, 2}, {}));
    CHECK(o2.marked().empty());
    CHECK(e2.marked().empty());
    CHECK(comb_marked(o2, e2).marked_count() == 0);

    CHECK_THROWS_AS(MarkedSepPermutation(Permutation{1, 2, 3}, {2}), std::invalid_argument);
}

TEST_CASE("marked round trips and mark conservation for n <= 6")
{
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        for (const Permutation& p : SymmetricGroup(n)) {
            for (const MarkedWord& mp : all_markings(p)) {
                const auto [lambda, sigma] = encode_marked(mp);
                REQUIRE(lambda.total() == n);
                REQUIRE(decode_marked(lambda, sigma) == mp);
            }

            // All markings of the comb halves of p.
            const auto [odd, even] = comb_split(p);
            auto markings = [](const Word& w) {
                std::vector<int> b;
                for (int i = 1; i < w.size(); ++i)
                    if (std::abs(w.at(i) - w.at(i + 1)) == 1)
                        b.push_back(i);
                std::vector<MarkedWord> out;
                for (unsigned mask = 0; mask < (1u << b.size()); ++mask) {
                    std::set<int> m;
                    for (std::size_t j = 0; j < b.size(); ++j)
                        if (mask >> j & 1)
                            m.insert(b[j]);
                    out.emplace_back(w, m);
                }
                return out;
            };
            for (const auto& mo : markings(odd)) {
                for (const auto& me : markings(even)) {
                    const MarkedSepPermutation msp = comb_marked(mo, me);
                    REQUIRE(msp.perm() == p);
                    REQUIRE(msp.marked_count() == mo.marked_count() + me.marked_count());
                    const auto [so, se] = split_marked(msp);
                    REQUIRE(so == mo);
                    REQUIRE(se == me);
                }
            }

            // The other direction: every subset of vertical separator positions.
            const std::vector<int> vpos = [&] {
                auto s = vertical_separator_positions(p);
                return std::vector<int>(s.begin(), s.end());
            }();
            REQUIRE(static_cast<int>(vpos.size()) == oracle::bonds(odd.values()) + oracle::bonds(even.values()));
            for (unsigned mask = 0; mask < (1u << vpos.size()); ++mask) {
                std::set<int> marked;
                for (std::size_t j = 0; j < vpos.size(); ++j)
                    if (mask >> j & 1)
                        marked.insert(vpos[j]);
                const MarkedSepPermutation msp(p, marked);
                const auto [so, se] = split_marked(msp);
                REQUIRE(comb_marked(so, se) == msp);
            }
        }
    }
}
