#include "gpbasis.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include "gpb/json_io.hpp"
#include "gpb/suites.hpp"

using nlohmann::json;

struct gpb_session {
    std::string last_error;
};

namespace {

constexpr const char* kVersion = "0.1.0";

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename Fn>
gpb_status guarded(gpb_session* s, char** out, Fn&& fn) {
    if (!s) return GPB_ERROR_INVALID_ARGUMENT;
    if (!out) {
        s->last_error = "null output pointer";
        return GPB_ERROR_INVALID_ARGUMENT;
    }
    try {
        s->last_error.clear();
        return fn();
    } catch (const gpb::invalid_argument& e) {
        s->last_error = e.what();
        return GPB_ERROR_INVALID_ARGUMENT;
    } catch (const gpb::check_failure& e) {
        s->last_error = e.what();
        return GPB_ERROR_CHECK_FAILED;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return GPB_ERROR_INTERNAL;
    }
}

std::vector<int> to_vec(const int32_t* data, size_t n) {
    if (!data && n > 0) throw gpb::invalid_argument("null array argument");
    return std::vector<int>(data, data + n);
}

gpb::Permutation to_perm(const int32_t* data, size_t n) {
    return gpb::Permutation(to_vec(data, n));
}

void emit(char** out, const json& j) { *out = dup_string(j.dump(2)); }

}  // namespace

extern "C" {

gpb_session* gpb_session_new(void) { return new gpb_session{}; }

void gpb_session_free(gpb_session* s) { delete s; }

const char* gpb_last_error(const gpb_session* s) {
    return s ? s->last_error.c_str() : "null session";
}

const char* gpb_version(void) { return kVersion; }

void gpb_string_free(char* s) { std::free(s); }

gpb_status gpb_rsk(gpb_session* s, const int32_t* perm, size_t n, char** out) {
    return guarded(s, out, [&] {
        auto [P, Q] = gpb::rsk(to_perm(perm, n));
        emit(out, json{{"P", gpb::to_json(P)},
                       {"Q", gpb::to_json(Q)},
                       {"shape", P.shape().parts()}});
        return GPB_OK;
    });
}

gpb_status gpb_cocharge(gpb_session* s, const int32_t* perm, size_t n, char** out) {
    return guarded(s, out, [&] {
        gpb::Word z = gpb::cocharge_word(to_perm(perm, n));
        emit(out, json{{"word", z},
                       {"cocharge", std::accumulate(z.begin(), z.end(), 0)}});
        return GPB_OK;
    });
}

gpb_status gpb_charge(gpb_session* s, const int32_t* perm, size_t n, char** out) {
    return guarded(s, out, [&] {
        gpb::Word z = gpb::charge_word(to_perm(perm, n));
        emit(out, json{{"word", z},
                       {"charge", std::accumulate(z.begin(), z.end(), 0)}});
        return GPB_OK;
    });
}

gpb_status gpb_charge_monomial(gpb_session* s, const int32_t* perm, size_t n,
                               char** out) {
    return guarded(s, out, [&] {
        gpb::Word z = gpb::charge_word(to_perm(perm, n));
        emit(out, json{{"exponents", z},
                       {"monomial", gpb::monomial_string(z)},
                       {"degree", std::accumulate(z.begin(), z.end(), 0)}});
        return GPB_OK;
    });
}

gpb_status gpb_ctype(gpb_session* s, const int32_t* perm, size_t n, char** out) {
    return guarded(s, out, [&] {
        emit(out, json{{"ctype", gpb::ctype_of(to_perm(perm, n)).parts()}});
        return GPB_OK;
    });
}

gpb_status gpb_blasiak(gpb_session* s, const int32_t* word, size_t n, char** out) {
    return guarded(s, out, [&] {
        gpb::Word z = to_vec(word, n);
        if (!gpb::is_cocharge_word(z))
            throw gpb::invalid_argument("input is not a cocharge word");
        gpb::BlasiakResult res = gpb::blasiak_ctype(z);
        emit(out, json{{"ctype", res.ctype.parts()},
                       {"recording", gpb::to_json(res.recording)},
                       {"passes", res.pass_counts}});
        return GPB_OK;
    });
}

gpb_status gpb_chains(gpb_session* s, const int32_t* word, size_t n,
                      const char* decomposition_json, char** out) {
    return guarded(s, out, [&] {
        if (!decomposition_json)
            throw gpb::invalid_argument("null decomposition");
        gpb::Word z = to_vec(word, n);
        std::vector<std::vector<int>> blocks;
        try {
            blocks = gpb::blocks_from_json(json::parse(decomposition_json));
        } catch (const json::exception& e) {
            throw gpb::invalid_argument(std::string("bad decomposition: ") + e.what());
        }
        gpb::PairFilling seed = gpb::build_seed_filling(z, blocks);
        std::vector<gpb::ChainsStep> steps;
        gpb::ChainsResult res = gpb::chains_run(z, seed, true, &steps);
        emit(out, gpb::chains_to_json(z, seed, res, steps));
        return GPB_OK;
    });
}

gpb_status gpb_basis(gpb_session* s, const int32_t* mu, size_t mu_len,
                     const char* kind, char** out) {
    return guarded(s, out, [&] {
        if (!kind) throw gpb::invalid_argument("null basis kind");
        gpb::Partition p(to_vec(mu, mu_len));
        std::string k = kind;
        gpb::MonomialSet set;
        if (k == "charge")
            set = gpb::charge_basis(p);
        else if (k == "shuffle")
            set = gpb::cc_shuffle_basis(p);
        else if (k == "descent")
            set = gpb::descent_basis(p.sum());
        else if (k == "artin")
            set = gpb::artin_basis(p.sum());
        else
            throw gpb::invalid_argument("unknown basis kind: " + k);
        json j = gpb::to_json(set);
        j["mu"] = p.parts();
        emit(out, j);
        return GPB_OK;
    });
}

gpb_status gpb_hilbert(gpb_session* s, const int32_t* mu, size_t mu_len, char** out) {
    return guarded(s, out, [&] {
        gpb::Partition p(to_vec(mu, mu_len));
        gpb::QPolynomial h = gpb::hilbert_series(gpb::charge_basis(p));
        emit(out, json{{"mu", p.parts()},
                       {"coefficients", h.coeffs()},
                       {"series", h.to_string()}});
        return GPB_OK;
    });
}

gpb_status gpb_hl(gpb_session* s, const int32_t* mu, size_t mu_len, const char* basis,
                  char** out) {
    return guarded(s, out, [&] {
        gpb::Partition p(to_vec(mu, mu_len));
        std::string b = basis ? basis : "s";
        gpb::SymmetricFunction f = gpb::modified_hl(p);
        if (b == "h")
            f = gpb::convert(f, gpb::SFBasis::h);
        else if (b == "m")
            f = gpb::convert(f, gpb::SFBasis::m);
        else if (b != "s")
            throw gpb::invalid_argument("unknown target basis: " + b);
        json j = gpb::to_json(f);
        j["mu"] = p.parts();
        emit(out, j);
        return GPB_OK;
    });
}

gpb_status gpb_antisym(gpb_session* s, const int32_t* mu, size_t mu_len,
                       const int32_t* gamma, size_t gamma_len, char** out) {
    return guarded(s, out, [&] {
        gpb::Partition p(to_vec(mu, mu_len));
        gpb::Composition g(to_vec(gamma, gamma_len));
        json words = json::array();
        for (const gpb::AntisymWitness& wit : gpb::antisym_index_set(p, g)) {
            gpb::Word cw = gpb::charge_word(wit.w);
            words.push_back(json{{"w", wit.w.values()},
                                 {"charge", wit.charge},
                                 {"monomial", gpb::monomial_string(cw)},
                                 {"P", gpb::to_json(wit.P)},
                                 {"Q", gpb::to_json(wit.Q)}});
        }
        emit(out, json{{"mu", p.parts()},
                       {"gamma", g.parts()},
                       {"count", words.size()},
                       {"words", std::move(words)}});
        return GPB_OK;
    });
}

gpb_status gpb_verify(gpb_session* s, const int32_t* mu, size_t mu_len,
                      const int32_t* gamma, size_t gamma_len, const char* order,
                      int32_t allow_n6, char** out) {
    return guarded(s, out, [&] {
        gpb::Partition p(to_vec(mu, mu_len));
        if (p.sum() > 6 || (p.sum() == 6 && !allow_n6))
            throw gpb::invalid_argument(
                "verify: the Groebner stage runs for |mu| <= 5; pass the n=6 "
                "opt-in to go one size further");
        std::string o = order ? order : "grevlex";
        gpb::TermOrder ord;
        if (o == "grevlex")
            ord = gpb::TermOrder::grevlex;
        else if (o == "lex")
            ord = gpb::TermOrder::lex;
        else
            throw gpb::invalid_argument("unknown term order: " + o);
        auto start = std::chrono::steady_clock::now();
        // The report certifies inside the quotient indexed by mu; the
        // monomials are the charge basis indexed by mu^t.
        gpb::Partition basis_index = p.transposed();
        gpb::CertifyReport rep;
        if (gamma && gamma_len > 0) {
            gpb::Composition g(to_vec(gamma, gamma_len));
            rep = gpb::certify_antisym_basis(basis_index, g, ord);
        } else {
            rep = gpb::certify_basis(gpb::charge_basis(basis_index), basis_index, ord);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        json j = gpb::to_json(rep);
        j["mu"] = p.parts();
        j["basis_mu"] = basis_index.parts();
        j["order"] = o;
        j["version"] = kVersion;
        j["config"] = json{{"mu", p.parts()},
                           {"gamma", gamma && gamma_len > 0
                                         ? json(to_vec(gamma, gamma_len))
                                         : json(nullptr)},
                           {"order", o},
                           {"seed", 0}};
        j["timings"] = json{{"total_ms", ms}};
        emit(out, j);
        return rep.pass ? GPB_OK : GPB_ERROR_CHECK_FAILED;
    });
}

gpb_status gpb_check_theorems(gpb_session* s, const char* suite, int32_t n,
                              char** out) {
    return guarded(s, out, [&] {
        if (!suite) throw gpb::invalid_argument("null suite name");
        std::string name = suite;
        std::vector<gpb::SuiteResult> results;
        auto start = std::chrono::steady_clock::now();
        if (name == "all") {
            for (const std::string& sn : gpb::suite_names())
                results.push_back(gpb::run_suite(sn, n));
        } else {
            results.push_back(gpb::run_suite(name, n));
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        bool pass = true;
        json suites = json::array();
        for (const gpb::SuiteResult& r : results) {
            pass = pass && r.pass;
            suites.push_back(json{{"suite", r.name},
                                  {"n", r.n},
                                  {"pass", r.pass},
                                  {"cases", r.cases},
                                  {"notes", r.notes}});
        }
        emit(out, json{{"pass", pass},
                       {"version", kVersion},
                       {"config", json{{"suite", name}, {"n", n}, {"seed", 0}}},
                       {"suites", std::move(suites)},
                       {"timings", json{{"total_ms", ms}}}});
        return pass ? GPB_OK : GPB_ERROR_CHECK_FAILED;
    });
}

}  // extern "C"
