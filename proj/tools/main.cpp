// Command-line front end over the gpbasis C API.
//
// Exit codes: 0 on success, 1 when a requested check fails, 2 on bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gpbasis.h"

namespace {

using nlohmann::json;

std::vector<int32_t> parse_sequence(const std::string& text) {
    std::vector<int32_t> out;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw CLI::ValidationError("expected digits or a comma-separated list: " + text);
            out.push_back(c - '0');
        }
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

struct Session {
    gpb_session* s = gpb_session_new();
    ~Session() { gpb_session_free(s); }
};

int emit(Session& session, gpb_status st, char* result, const std::string& out_path,
         const std::string& format = "json") {
    if (st == GPB_ERROR_INVALID_ARGUMENT) {
        std::cerr << "error: " << gpb_last_error(session.s) << "\n";
        return 2;
    }
    if (st == GPB_ERROR_INTERNAL) {
        std::cerr << "internal error: " << gpb_last_error(session.s) << "\n";
        return 2;
    }
    std::string text = result ? result : "";
    if (result) gpb_string_free(result);
    if (format == "csv") {
        json j = json::parse(text);
        std::ostringstream csv;
        csv << "monomial,exponents,degree\n";
        for (const auto& m : j.at("monomials")) {
            std::string expo;
            int deg = 0;
            std::string name;
            std::vector<int> e = m.get<std::vector<int>>();
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) expo += " ";
                expo += std::to_string(e[i]);
                deg += e[i];
                if (e[i] > 0) {
                    if (!name.empty()) name += "*";
                    name += "x" + std::to_string(i + 1);
                    if (e[i] > 1) name += "^" + std::to_string(e[i]);
                }
            }
            if (name.empty()) name = "1";
            csv << name << "," << expo << "," << deg << "\n";
        }
        text = csv.str();
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return st == GPB_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact charge/catabolism combinatorics and Garsia-Procesi basis certification"};
    app.require_subcommand(1);
    Session session;

    std::string perm_arg, word_arg, decomposition;
    std::string mu_arg, gamma_arg, kind = "charge", basis = "s", order = "grevlex";
    std::string format = "json", report_path, suite = "all";
    int bound = 0;
    bool groebner_n6 = false;

    auto add_perm = [&](CLI::App* cmd) {
        cmd->add_option("permutation", perm_arg, "one-line permutation, e.g. 3516247 or 3,5,1,6,2,4,7")
            ->required();
    };

    CLI::App* rsk = app.add_subcommand("rsk", "insertion and recording tableaux");
    add_perm(rsk);
    CLI::App* coch = app.add_subcommand("cocharge", "cocharge word and statistic");
    add_perm(coch);
    CLI::App* chrg = app.add_subcommand("charge", "charge word and statistic");
    add_perm(chrg);
    CLI::App* cm = app.add_subcommand("charge-monomial", "charge monomial x^{cw(w)}");
    add_perm(cm);
    CLI::App* ct = app.add_subcommand("ctype", "catabolizability type of P(w)");
    add_perm(ct);

    CLI::App* bl = app.add_subcommand("blasiak", "catabolism insertion on a cocharge word");
    bl->add_option("word", word_arg, "cocharge word, e.g. 211001")->required();

    CLI::App* ch = app.add_subcommand("chains", "chains run over a shuffle decomposition");
    ch->add_option("word", word_arg, "cocharge word")->required();
    ch->add_option("decomposition", decomposition,
                   "JSON blocks of 1-based positions, e.g. [[1,2,3,4,6,7],[5,8,9,10]]")
        ->required();

    CLI::App* ba = app.add_subcommand("basis", "monomial basis of R_{mu^t}");
    ba->add_option("--mu", mu_arg, "partition, largest part first")->required();
    ba->add_option("--kind", kind, "charge | shuffle | descent | artin");
    ba->add_option("--format", format, "json | csv");

    CLI::App* hi = app.add_subcommand("hilbert", "Hilbert series of the charge basis");
    hi->add_option("--mu", mu_arg)->required();

    CLI::App* hl = app.add_subcommand("hl", "modified Hall-Littlewood expansion");
    hl->add_option("--mu", mu_arg)->required();
    hl->add_option("--basis", basis, "s | h | m");

    CLI::App* as = app.add_subcommand("antisym", "antisymmetric basis index set");
    as->add_option("--mu", mu_arg)->required();
    as->add_option("--gamma", gamma_arg)->required();

    CLI::App* ve = app.add_subcommand("verify", "Groebner certification of the basis");
    ve->add_option("--mu", mu_arg)->required();
    ve->add_option("--gamma", gamma_arg);
    ve->add_option("--order", order, "grevlex | lex");
    ve->add_flag("--groebner-n6", groebner_n6, "allow the |mu| = 6 Groebner stage");
    ve->add_option("--report", report_path, "write the JSON report to a file");

    CLI::App* th = app.add_subcommand("check-theorems", "run a verification suite");
    th->add_option("--suite", suite,
                   "thm-a | golden | cardinality | hilbert | certify | ctype-sum | swaps | "
                   "cocharge-class | prop-b | frobenius | hl-two-route | ctype-oracles | all");
    th->add_option("--n", bound, "size bound (0 = suite default)");
    th->add_option("--report", report_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    char* result = nullptr;
    try {
        if (rsk->parsed() || coch->parsed() || chrg->parsed() || cm->parsed() ||
            ct->parsed()) {
            std::vector<int32_t> w = parse_sequence(perm_arg);
            gpb_status st;
            if (rsk->parsed())
                st = gpb_rsk(session.s, w.data(), w.size(), &result);
            else if (coch->parsed())
                st = gpb_cocharge(session.s, w.data(), w.size(), &result);
            else if (chrg->parsed())
                st = gpb_charge(session.s, w.data(), w.size(), &result);
            else if (cm->parsed())
                st = gpb_charge_monomial(session.s, w.data(), w.size(), &result);
            else
                st = gpb_ctype(session.s, w.data(), w.size(), &result);
            return emit(session, st, result, "");
        }
        if (bl->parsed()) {
            std::vector<int32_t> z = parse_sequence(word_arg);
            gpb_status st = gpb_blasiak(session.s, z.data(), z.size(), &result);
            return emit(session, st, result, "");
        }
        if (ch->parsed()) {
            std::vector<int32_t> z = parse_sequence(word_arg);
            gpb_status st =
                gpb_chains(session.s, z.data(), z.size(), decomposition.c_str(), &result);
            return emit(session, st, result, "");
        }
        if (ba->parsed()) {
            std::vector<int32_t> mu = parse_sequence(mu_arg);
            gpb_status st = gpb_basis(session.s, mu.data(), mu.size(), kind.c_str(), &result);
            return emit(session, st, result, "", format);
        }
        if (hi->parsed()) {
            std::vector<int32_t> mu = parse_sequence(mu_arg);
            gpb_status st = gpb_hilbert(session.s, mu.data(), mu.size(), &result);
            return emit(session, st, result, "");
        }
        if (hl->parsed()) {
            std::vector<int32_t> mu = parse_sequence(mu_arg);
            gpb_status st = gpb_hl(session.s, mu.data(), mu.size(), basis.c_str(), &result);
            return emit(session, st, result, "");
        }
        if (as->parsed()) {
            std::vector<int32_t> mu = parse_sequence(mu_arg);
            std::vector<int32_t> ga = parse_sequence(gamma_arg);
            gpb_status st =
                gpb_antisym(session.s, mu.data(), mu.size(), ga.data(), ga.size(), &result);
            return emit(session, st, result, "");
        }
        if (ve->parsed()) {
            std::vector<int32_t> mu = parse_sequence(mu_arg);
            std::vector<int32_t> ga;
            if (!gamma_arg.empty()) ga = parse_sequence(gamma_arg);
            gpb_status st = gpb_verify(session.s, mu.data(), mu.size(),
                                       ga.empty() ? nullptr : ga.data(), ga.size(),
                                       order.c_str(), groebner_n6 ? 1 : 0, &result);
            return emit(session, st, result, report_path);
        }
        if (th->parsed()) {
            gpb_status st = gpb_check_theorems(session.s, suite.c_str(), bound, &result);
            return emit(session, st, result, report_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
