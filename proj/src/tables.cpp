#include "jnorm/tables.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "jnorm/names.hpp"

#ifndef JNORM_DATA_DIR
#define JNORM_DATA_DIR "data"
#endif

namespace jnorm {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    json j;
    in >> j;
    return j;
}

RationalPoly poly_from_coeff_list(const json& coeffs) {
    std::vector<Rational> c;
    for (const auto& item : coeffs) {
        if (item.is_number_integer()) {
            c.emplace_back(item.get<long>());
        } else {
            c.push_back(rational_from_string(item.get<std::string>()));
        }
    }
    return RationalPoly(std::move(c));
}

// A coefficient expression is { "ff": [offset, m], "factors": [poly, ...] }
// meaning (n-offset)(n-offset-1)...(n-offset-m+1) times the product of the
// factor polynomials (each a coefficient list, constant term first). Both
// keys are optional; the empty object is 1.
RationalPoly poly_from_expr(const json& expr) {
    RationalPoly p = RationalPoly::constant(1);
    if (expr.contains("ff")) {
        long offset = expr["ff"][0].get<long>();
        int m = expr["ff"][1].get<int>();
        for (int k = 0; k < m; ++k) p *= RationalPoly(std::vector<Rational>{Rational(-offset - k), Rational(1)});
    }
    if (expr.contains("factors"))
        for (const auto& f : expr["factors"]) p *= poly_from_coeff_list(f);
    return p;
}

void add_factor(TermSpec& term, const json& factor) {
    SmallGraph g = named(factor.at("graph").get<std::string>());
    std::string side = factor.at("side").get<std::string>();
    int count = factor.contains("power") ? factor["power"].get<int>() : 1;
    for (int i = 0; i < count; ++i) {
        if (side == "+") term.plus_factors.push_back(g);
        else if (side == "-") term.minus_factors.push_back(g);
        else throw std::runtime_error("factor side must be '+' or '-'");
    }
}

}  // namespace

std::vector<TableLine> load_table(const std::string& path) {
    json root = load_json(path);
    std::vector<TableLine> lines;
    for (const auto& entry : root.at("lines")) {
        TableLine line;
        line.id = entry.at("id").get<int>();
        line.scale = entry.at("scale").get<long>();
        for (const auto& f : entry.at("lhs")) add_factor(line.lhs, f);
        line.constant = poly_from_expr(entry.at("constant"));
        for (const auto& [key, expr] : entry.at("coeffs").items()) {
            int index = std::stoi(key);
            line.coeffs[index] = poly_from_expr(expr);
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

IdentitySpec load_identity(const std::string& path) {
    json root = load_json(path);
    IdentitySpec terms;
    for (const auto& entry : root.at("terms")) {
        TermSpec term;
        term.coefficient = poly_from_expr(entry.at("coefficient"));
        for (const auto& f : entry.at("factors")) add_factor(term, f);
        terms.push_back(std::move(term));
    }
    return terms;
}

std::string default_data_dir() { return JNORM_DATA_DIR; }

const std::map<int, std::string>& catalog_named_entries() {
    static const std::map<int, std::string> entries = {
        {2, "K_2"},
        {3, "P_3"},
        {4, "K_3"},
        {5, "K_{1,3}"},
        {6, "2K_2"},
        {7, "P_4"},
        {8, "T_{3,1}"},
        {9, "C_4"},
        {10, "K_4-K_2"},
        {11, "K_4"},
        {12, "K_{1,4}"},
        {13, "K_2 u P_3"},
        {16, "P_5"},
        {20, "K_3 u K_2"},
        {23, "T_{4,1}"},
        {24, "K_{2,3}"},
        {25, "K_5-K_3"},
        {27, "C_5"},
        {29, "K_5-P_4"},
        {30, "K_5-(P_3 u K_2)"},
        {31, "K_5-P_3"},
        {32, "K_5-2K_2"},
        {33, "K_5-K_2"},
        {34, "K_5"},
    };
    return entries;
}

const std::map<int, std::string>& catalog_candidate_entries() {
    static const std::map<int, std::string> entries = {
        {15, "K_{1,4}+K_2"},
        {28, "C_5+K_2"},
    };
    return entries;
}

}  // namespace jnorm
