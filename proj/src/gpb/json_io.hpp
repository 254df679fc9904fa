#pragma once

#include <json.hpp>

#include "gpb/basis.hpp"
#include "gpb/chains.hpp"
#include "gpb/symfunc.hpp"
#include "gpb/verify.hpp"

namespace gpb {

using nlohmann::json;

// Encodings are documented in docs/formats.md.  Sequences are plain arrays;
// tableaux and fillings are arrays of rows, bottom row first.
json to_json(const Partition& p);
json to_json(const Composition& c);
json to_json(const Tableau& t);
json to_json(const PairFilling& f);
json to_json(const QPolynomial& q);
json to_json(const MonomialSet& s);
json to_json(const CertifyReport& r);
json to_json(const SymmetricFunction& f);
json chains_to_json(const Word& z, const PairFilling& seed, const ChainsResult& res,
                    const std::vector<ChainsStep>& steps);

Partition partition_from_json(const json& j);
Composition composition_from_json(const json& j);
std::vector<std::vector<int>> blocks_from_json(const json& j);

// "3,1" -> {3,1}; single-token digit strings like "3516247" split per digit.
std::vector<int> parse_int_sequence(const std::string& text);

std::string monomial_string(const Word& exponents);

}  // namespace gpb
