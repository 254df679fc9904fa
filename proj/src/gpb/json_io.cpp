#include "gpb/json_io.hpp"

#include <sstream>

namespace gpb {

json to_json(const Partition& p) { return json(p.parts()); }
json to_json(const Composition& c) { return json(c.parts()); }
json to_json(const Tableau& t) { return json(t.rows()); }

json to_json(const PairFilling& f) {
    json rows = json::array();
    for (const auto& row : f.rows()) {
        json r = json::array();
        for (const PairEntry& e : row) r.push_back({e.pass, e.index});
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const QPolynomial& q) { return json(q.coeffs()); }

json to_json(const MonomialSet& s) {
    json monomials = json::array();
    for (const ExponentVector& e : s.members) monomials.push_back(e);
    return json{{"n", s.n},
                {"kind", s.kind},
                {"count", s.members.size()},
                {"monomials", std::move(monomials)}};
}

json to_json(const CertifyReport& r) {
    json j{{"mu", r.mu.parts()},
           {"dimension", r.dimension},
           {"cardinality", r.cardinality},
           {"rank", r.rank},
           {"graded_ranks", r.graded_ranks},
           {"quotient_graded", r.quotient_graded},
           {"pass", r.pass}};
    j["gamma"] = r.gamma ? json(r.gamma->parts()) : json(nullptr);
    if (!r.expected_graded.empty()) j["expected_graded"] = r.expected_graded;
    if (!r.basis_polynomials.empty()) j["basis_polynomials"] = r.basis_polynomials;
    return j;
}

json to_json(const SymmetricFunction& f) {
    const char* tags[] = {"m", "e", "h", "s"};
    json coeffs = json::object();
    for (const auto& [la, c] : f.coeffs()) coeffs[la.to_string()] = c.coeffs();
    return json{{"degree", f.degree()},
                {"basis", tags[static_cast<int>(f.basis())]},
                {"coefficients", std::move(coeffs)}};
}

json chains_to_json(const Word& z, const PairFilling& seed, const ChainsResult& res,
                    const std::vector<ChainsStep>& steps) {
    json jsteps = json::array();
    for (const ChainsStep& s : steps) {
        jsteps.push_back(json{{"read", {s.read.pass, s.read.index}},
                              {"position", s.position},
                              {"row", s.row},
                              {"relocated", s.relocated},
                              {"shape", s.shape.parts()},
                              {"filling", [&] {
                                  json rows = json::array();
                                  for (const auto& row : s.rows) {
                                      json jr = json::array();
                                      for (const PairEntry& e : row)
                                          jr.push_back({e.pass, e.index});
                                      rows.push_back(std::move(jr));
                                  }
                                  return rows;
                              }()}});
    }
    json trace = json::array();
    for (const Partition& p : res.shape_trace) trace.push_back(p.parts());
    return json{{"word", z},
                {"seed", to_json(seed)},
                {"steps", std::move(jsteps)},
                {"ctype", res.ctype.parts()},
                {"final", to_json(res.filling)},
                {"shape_trace", std::move(trace)}};
}

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

Composition composition_from_json(const json& j) {
    return Composition(j.get<std::vector<int>>());
}

std::vector<std::vector<int>> blocks_from_json(const json& j) {
    return j.get<std::vector<std::vector<int>>>();
}

std::vector<int> parse_int_sequence(const std::string& text) {
    std::vector<int> out;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw invalid_argument("expected digits or a comma-separated list: " + text);
            out.push_back(c - '0');
        }
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw invalid_argument("empty entry in list: " + text);
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::string monomial_string(const Word& exponents) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace gpb
