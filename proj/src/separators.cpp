#include "sepstat/separators.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iterator>
#include <stdexcept>
#include <string>

namespace sepstat {

std::set<int> vertical_separator_positions(const Permutation& p)
{
    std::set<int> out;
    for (int i = 2; i < p.size(); ++i)
        if (std::abs(p.at(i - 1) - p.at(i + 1)) == 1)
            out.insert(i);
    return out;
}

std::set<int> vertical_separators(const Permutation& p)
{
    std::set<int> out;
    for (int i : vertical_separator_positions(p))
        out.insert(p.at(i));
    return out;
}

std::set<int> horizontal_separators(const Permutation& p)
{
    const Permutation pos = inverse(p);
    std::set<int> out;
    for (int a = 2; a < p.size(); ++a)
        if (std::abs(pos.at(a - 1) - pos.at(a + 1)) == 1)
            out.insert(a);
    return out;
}

SeparatorReport separator_report(const Permutation& p)
{
    SeparatorReport r;
    r.vertical = vertical_separators(p);
    r.horizontal = horizontal_separators(p);
    std::set_intersection(r.vertical.begin(), r.vertical.end(), r.horizontal.begin(), r.horizontal.end(),
                          std::inserter(r.both, r.both.end()));
    r.sep_count = static_cast<int>(r.vertical.size() + r.horizontal.size() - r.both.size());
    return r;
}

bool is_separator_free(const Permutation& p)
{
    return separator_report(p).sep_count == 0;
}

bool has_knight_pair(const Permutation& p)
{
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= std::min(n, i + 2); ++j) {
            const int dx = j - i;
            const int dy = std::abs(p.at(i) - p.at(j));
            if ((dx == 1 && dy == 2) || (dx == 2 && dy == 1))
                return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

MarkedWord::MarkedWord(Word word, std::set<int> marked) : word_(std::move(word)), marked_(std::move(marked))
{
    for (int i : marked_) {
        if (i < 1 || i >= word_.size())
            throw std::invalid_argument("marked index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(word_.size() - 1));
        if (std::abs(word_.at(i) - word_.at(i + 1)) != 1)
            throw std::invalid_argument("marked index " + std::to_string(i) + " is not a bond (" +
                                        std::to_string(word_.at(i)) + "," + std::to_string(word_.at(i + 1)) +
                                        ")");
    }
}

ArrowedComposition::ArrowedComposition(std::vector<ArrowedPart> parts) : parts_(std::move(parts))
{
    for (const auto& part : parts_) {
        if (part.size < 1)
            throw std::invalid_argument("arrowed composition part " + std::to_string(part.size) + " < 1");
        if ((part.size == 1) != (part.arrow == Arrow::none))
            throw std::invalid_argument("part " + std::to_string(part.size) +
                                        (part.size == 1 ? " must not carry an arrow" : " needs an arrow"));
    }
}

int ArrowedComposition::total() const
{
    int t = 0;
    for (const auto& part : parts_)
        t += part.size;
    return t;
}

ArrowedComposition ArrowedComposition::parse(const std::string& text)
{
    static const std::string up_arrow = "↑";
    static const std::string down_arrow = "↓";

    std::vector<ArrowedPart> parts;
    if (text.empty())
        return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        std::string token = text.substr(start, comma - start);
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty())
            throw std::invalid_argument("empty part in arrowed composition '" + text + "'");

        std::size_t digits = 0;
        while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits])))
            ++digits;
        if (digits == 0)
            throw std::invalid_argument("part '" + token + "' does not start with a size");
        ArrowedPart part{std::stoi(token.substr(0, digits)), Arrow::none};
        const std::string suffix = token.substr(digits);
        if (suffix == up_arrow || suffix == "^" || suffix == "u")
            part.arrow = Arrow::up;
        else if (suffix == down_arrow || suffix == "v" || suffix == "d")
            part.arrow = Arrow::down;
        else if (!suffix.empty())
            throw std::invalid_argument("unknown arrow '" + suffix + "'");
        parts.push_back(part);
        start = comma + 1;
    }
    return ArrowedComposition(std::move(parts));
}

std::string ArrowedComposition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(parts_[i].size);
        if (parts_[i].arrow == Arrow::up)
            s += "↑";
        else if (parts_[i].arrow == Arrow::down)
            s += "↓";
    }
    return s;
}

std::pair<ArrowedComposition, Permutation> encode_marked(const MarkedWord& mp)
{
    const Word& w = mp.word();
    [[maybe_unused]] const Permutation as_perm(w.values());  // throws unless w is a permutation

    std::vector<ArrowedPart> parts;
    std::vector<int> representatives;
    int i = 1;
    while (i <= w.size()) {
        int len = 1;
        while (mp.marked().count(i + len - 1))
            ++len;
        ArrowedPart part{len, Arrow::none};
        if (len > 1)
            part.arrow = w.at(i + 1) > w.at(i) ? Arrow::up : Arrow::down;
        parts.push_back(part);
        representatives.push_back(std::min(w.at(i), w.at(i + len - 1)));
        i += len;
    }
    return {ArrowedComposition(std::move(parts)), standardize(Word(std::move(representatives)))};
}

MarkedWord decode_marked(const ArrowedComposition& lambda, const Permutation& sigma)
{
    if (lambda.part_count() != sigma.size())
        throw std::invalid_argument("decode_marked: composition has " + std::to_string(lambda.part_count()) +
                                    " parts but sigma has size " + std::to_string(sigma.size()));
    if (sigma.empty())
        return MarkedWord{};

    std::vector<Permutation> blocks;
    std::set<int> marked;
    int pos = 1;
    for (const auto& part : lambda.parts()) {
        Permutation block = Permutation::identity(part.size);
        if (part.arrow == Arrow::down)
            block = reverse(block);
        blocks.push_back(std::move(block));
        for (int j = 0; j + 1 < part.size; ++j)
            marked.insert(pos + j);
        pos += part.size;
    }
    return MarkedWord(inflate(sigma, blocks).word(), std::move(marked));
}

std::vector<MarkedWord> all_markings(const Permutation& p)
{
    const std::set<int> bond_set = bonds(p);
    const std::vector<int> bond_list(bond_set.begin(), bond_set.end());
    const std::size_t subsets = std::size_t{1} << bond_list.size();
    std::vector<MarkedWord> out;
    out.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::set<int> marked;
        for (std::size_t b = 0; b < bond_list.size(); ++b)
            if (mask >> b & 1)
                marked.insert(bond_list[b]);
        out.emplace_back(p.word(), std::move(marked));
    }
    return out;
}

MarkedSepPermutation::MarkedSepPermutation(Permutation perm, std::set<int> marked)
    : perm_(std::move(perm)), marked_(std::move(marked))
{
    for (int i : marked_) {
        if (i < 2 || i >= perm_.size() || std::abs(perm_.at(i - 1) - perm_.at(i + 1)) != 1)
            throw std::invalid_argument("marked position " + std::to_string(i) +
                                        " is not a vertical separator position");
    }
}

MarkedSepPermutation comb_marked(const MarkedWord& odd, const MarkedWord& even)
{
    Permutation p = comb(odd.word(), even.word());
    std::set<int> marked;
    // Half index k sits at position 2k-1 (odd) or 2k (even); the bond (k, k+1)
    // straddles the position right after half entry k.
    for (int k : odd.marked())
        marked.insert(2 * k);
    for (int k : even.marked())
        marked.insert(2 * k + 1);
    return MarkedSepPermutation(std::move(p), std::move(marked));
}

std::pair<MarkedWord, MarkedWord> split_marked(const MarkedSepPermutation& msp)
{
    auto [odd, even] = comb_split(msp.perm());
    std::set<int> odd_marked, even_marked;
    for (int i : msp.marked_sep_positions()) {
        if (i % 2 == 0)
            odd_marked.insert(i / 2);
        else
            even_marked.insert((i - 1) / 2);
    }
    return {MarkedWord(std::move(odd), std::move(odd_marked)), MarkedWord(std::move(even), std::move(even_marked))};
}

}  // namespace sepstat
