#include "sepstat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sepstat {

using json = nlohmann::ordered_json;

Permutation parse_permutation(const std::string& text)
{
    std::string body = text;
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    body.erase(body.begin(), std::find_if(body.begin(), body.end(), not_space));
    body.erase(std::find_if(body.rbegin(), body.rend(), not_space).base(), body.end());
    if (!body.empty() && (body.front() == '[' || body.front() == '(')) {
        if (body.size() < 2 || (body.back() != ']' && body.back() != ')'))
            throw std::invalid_argument("unbalanced brackets in permutation '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }

    std::vector<int> values;
    const bool delimited = body.find_first_of(", \t") != std::string::npos;
    if (delimited) {
        auto push = [&](const std::string& token) {
            if (token.empty() || token.size() > 9 ||
                !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw std::invalid_argument("bad token '" + token + "' in permutation '" + text + "'");
            values.push_back(std::stoi(token));
        };
        const bool commas = body.find(',') != std::string::npos;
        std::istringstream fields(body);
        std::string field;
        if (commas) {
            while (std::getline(fields, field, ',')) {
                std::istringstream inner(field);
                std::string token, extra;
                inner >> token;
                if (inner >> extra)
                    throw std::invalid_argument("mixed delimiters in permutation '" + text + "'");
                push(token);
            }
            if (body.back() == ',')
                push("");
        } else {
            while (fields >> field)
                push(field);
        }
    } else {
        if (body.size() > 9)
            throw std::invalid_argument("compact permutation strings are limited to n <= 9; use delimiters");
        for (char c : body) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("bad digit '") + c + "' in permutation '" + text + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

json to_json(const Permutation& p)
{
    return json(p.values());
}

Permutation permutation_from_json(const json& j)
{
    return Permutation(j.get<std::vector<int>>());
}

json to_json(const MarkedWord& mw)
{
    return {{"perm", mw.word().values()}, {"marked_bonds", mw.marked()}};
}

MarkedWord marked_word_from_json(const json& j)
{
    return MarkedWord(Word(j.at("perm").get<std::vector<int>>()), j.at("marked_bonds").get<std::set<int>>());
}

json to_json(const MarkedSepPermutation& msp)
{
    return {{"perm", msp.perm().values()}, {"marked_seps", msp.marked_sep_positions()}};
}

MarkedSepPermutation marked_sep_from_json(const json& j)
{
    return MarkedSepPermutation(permutation_from_json(j.at("perm")), j.at("marked_seps").get<std::set<int>>());
}

json to_json(const ArrowedComposition& lambda)
{
    json out = json::array();
    for (const auto& part : lambda.parts()) {
        const char* arrow = part.arrow == Arrow::up ? "up" : part.arrow == Arrow::down ? "down" : "";
        out.push_back({std::to_string(part.size), arrow});
    }
    return out;
}

ArrowedComposition arrowed_composition_from_json(const json& j)
{
    std::vector<ArrowedPart> parts;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("arrowed part must be a [size, arrow] pair");
        ArrowedPart part;
        part.size = entry[0].is_string() ? std::stoi(entry[0].get<std::string>()) : entry[0].get<int>();
        const auto arrow = entry[1].get<std::string>();
        if (arrow == "up")
            part.arrow = Arrow::up;
        else if (arrow == "down")
            part.arrow = Arrow::down;
        else if (!arrow.empty())
            throw std::invalid_argument("unknown arrow '" + arrow + "'");
        parts.push_back(part);
    }
    return ArrowedComposition(std::move(parts));
}

json to_json(const SeparatorReport& r)
{
    return {{"vertical", r.vertical}, {"horizontal", r.horizontal}, {"both", r.both}, {"sep_count", r.sep_count}};
}

json to_json(const BiSeries& s)
{
    json coeffs = json::object();
    for (int n = 0; n <= s.order(); ++n) {
        json row = json::array();
        for (const auto& c : s.coeff(n).coefficients())
            row.push_back(c.str());
        coeffs[std::to_string(n)] = std::move(row);
    }
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

BiSeries series_from_json(const json& j)
{
    BiSeries s(j.at("order").get<int>());
    for (const auto& [key, row] : j.at("coeffs").items()) {
        std::vector<BigInt> c;
        for (const auto& v : row)
            c.emplace_back(v.get<std::string>());
        s.set_coeff(std::stoi(key), MarkerPoly(std::move(c)));
    }
    return s;
}

std::string to_csv(const BiSeries& s)
{
    std::ostringstream out;
    out << "n,m,count\n";
    for (int n = 0; n <= s.order(); ++n) {
        const auto& row = s.coeff(n).coefficients();
        for (std::size_t m = 0; m < row.size(); ++m)
            out << n << ',' << m << ',' << row[m] << '\n';
    }
    return out.str();
}

json to_json(const DistTable& t)
{
    json counts = json::object();
    const auto dense = t.dense();
    for (std::size_t m = 0; m < dense.size(); ++m)
        counts[std::to_string(m)] = dense[m].str();
    return {{"n", t.n}, {"kind", to_string(t.kind)}, {"counts", std::move(counts)}};
}

std::string to_csv(const DistTable& t)
{
    std::ostringstream out;
    out << "n,m,count\n";
    const auto dense = t.dense();
    for (std::size_t m = 0; m < dense.size(); ++m)
        out << t.n << ',' << m << ',' << dense[m] << '\n';
    return out.str();
}

}  // namespace sepstat
