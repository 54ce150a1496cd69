/*
   Copyright 2026 the zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zprconv/dual.hpp"
#include "zprconv/errors.hpp"
#include "zprconv/io.hpp"
#include "zprconv/oracle.hpp"
#include "zprconv/randomgen.hpp"

namespace {

using nlohmann::json;
using namespace zprconv;

json poly_coeffs(const Polynomial& f) {
    json cell = json::array();
    for (int d = 0; d <= f.degree(); ++d) cell.push_back(f.coeff(static_cast<size_t>(d)));
    if (cell.empty()) cell.push_back(0);
    return cell;
}

json pvector_json(const PVector& v) {
    json row = json::array();
    for (const auto& f : v) row.push_back(poly_coeffs(f));
    return row;
}

std::string pvector_text(const PVector& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + "]";
}

std::string const_row_text(const ConstMat& m, size_t i) {
    std::string s = "[";
    for (size_t j = 0; j < m.cols; ++j) {
        if (j) s += ", ";
        s += std::to_string(m.at(i, j));
    }
    return s + "]";
}

std::string size_list_text(const std::vector<size_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

// the codeword spaces a block code can be checked against exhaustively
bool within_enum_cap(const Ring& ring, size_t n) {
    uint64_t cap = uint64_t(1) << 16;
    uint64_t v = 1;
    for (size_t i = 0; i < n; ++i) {
        if (v > cap / ring->modulus()) return false;
        v *= ring->modulus();
    }
    return true;
}

uint64_t p_power(const Ring& ring, uint64_t e) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < e; ++i) v *= ring->p();
    return v;
}

void append_oracle_items(VerificationReport& rep, const ConvolutionalCode& c) {
    const std::string kCount = "block codeword count matches the p-dimension";
    const std::string kDual = "exhaustive dual equals the constant dual codewords";
    const std::string kWood = "codeword counts multiply to the full space size";
    auto skip_all = [&](const std::string& why) {
        for (const auto& name : {kCount, kDual, kWood}) {
            CheckItem it;
            it.name = name;
            it.pass = true;
            it.applicable = false;
            it.actual = why;
            rep.items.push_back(it);
        }
    };
    if (!c.generator().is_constant()) {
        skip_all("generator has polynomial entries");
        return;
    }
    if (!within_enum_cap(c.ring(), c.n())) {
        skip_all("ambient space exceeds the enumeration cap");
        return;
    }
    try {
        CodewordSet words = enumerate_block_code(c.generator());
        uint64_t expect = p_power(c.ring(), c.p_dim());
        rep.items.push_back({kCount, words.size() == expect, true, std::to_string(expect),
                             std::to_string(words.size())});

        DualResult d = dual(c);
        if (!d.dual_code.generator().is_constant()) {
            rep.items.push_back({kDual, false, true, "constant dual generator",
                                 "dual generator has polynomial entries"});
            rep.items.push_back({kWood, false, true, "product check", "dual not enumerable"});
            return;
        }
        CodewordSet dual_words = enumerate_block_code(d.dual_code.generator());
        CodewordSet brute = brute_dual_block(c.generator());
        rep.items.push_back({kDual, dual_words == brute, true,
                             std::to_string(brute.size()) + " words",
                             std::to_string(dual_words.size()) + " words"});

        uint64_t full = p_power(c.ring(), uint64_t(c.n()) * c.ring()->r());
        uint64_t prod = words.size() * brute.size();
        rep.items.push_back(
            {kWood, prod == full, true, std::to_string(full), std::to_string(prod)});
    } catch (const TooLarge& e) {
        skip_all(e.what());
    }
}

void print_report_human(const VerificationReport& rep) {
    std::cout << "seed: " << rep.seed << "\n";
    for (const auto& it : rep.items) {
        if (!it.applicable) {
            std::cout << "SKIP " << it.name << " (" << it.actual << ")\n";
        } else if (it.pass) {
            std::cout << "PASS " << it.name << "\n";
        } else {
            std::cout << "FAIL " << it.name << " (expected " << it.expected << ", actual "
                      << it.actual << ")\n";
        }
    }
    std::cout << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
}

struct Options {
    std::string input;
    std::string output;
    uint64_t trials = 100;
    uint64_t seed = 0;
    int lo = 0;
    int hi = 7;
    uint32_t p = 0;
    uint32_t r = 0;
    size_t n = 0;
    size_t k = 0;
    int max_deg = 2;
    bool machine = false;
};

int run_analyze(const Options& opt) {
    PolyMatrix g = read_code_file(opt.input);
    ConvolutionalCode c(g);
    bool constant = g.is_constant();

    if (opt.machine) {
        json out;
        out["p"] = c.ring()->p();
        out["r"] = c.ring()->r();
        out["n"] = c.n();
        out["generator_rows"] = g.rows();
        out["k_list"] = c.k_list();
        out["p_dim"] = c.p_dim();
        out["free"] = c.is_free();
        if (constant) {
            StandardFormResult sf = standard_form(g);
            json m = json::array();
            for (size_t i = 0; i < sf.matrix.rows; ++i) {
                json row = json::array();
                for (size_t j = 0; j < sf.matrix.cols; ++j) row.push_back(sf.matrix.at(i, j));
                m.push_back(row);
            }
            out["standard_form"] = {{"matrix", m},
                                    {"params", sf.params},
                                    {"column_permutation", sf.column_permutation}};
        } else {
            out["standard_form"] = nullptr;
        }
        json enc = json::array();
        for (const auto& v : c.p_encoder()) enc.push_back(pvector_json(v));
        out["p_encoder"] = enc;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "p: " << c.ring()->p() << "\n";
    std::cout << "r: " << c.ring()->r() << "\n";
    std::cout << "n: " << c.n() << "\n";
    std::cout << "generator_rows: " << g.rows() << "\n";
    std::cout << "k_list: " << size_list_text(c.k_list()) << "\n";
    std::cout << "p_dim: " << c.p_dim() << "\n";
    std::cout << "free: " << (c.is_free() ? "yes" : "no") << "\n";
    if (constant) {
        StandardFormResult sf = standard_form(g);
        std::cout << "standard_form:\n";
        for (size_t i = 0; i < sf.matrix.rows; ++i)
            std::cout << "  " << const_row_text(sf.matrix, i) << "\n";
        std::cout << "  params: " << size_list_text(sf.params) << "\n";
        std::cout << "  column_permutation: " << size_list_text(sf.column_permutation) << "\n";
    } else {
        std::cout << "standard_form: (generator has polynomial entries)\n";
    }
    std::cout << "p_encoder:\n";
    for (const auto& v : c.p_encoder()) std::cout << "  " << pvector_text(v) << "\n";
    return 0;
}

int run_dual(const Options& opt) {
    ConvolutionalCode c(read_code_file(opt.input));
    DualResult d = dual(c);
    std::vector<size_t> ranks;
    for (const auto& b : d.b_components) ranks.push_back(b.rows());
    std::string text = code_file_text(d.dual_code.generator());

    if (!opt.output.empty()) write_code_file(opt.output, d.dual_code.generator());
    if (opt.machine) {
        json out;
        out["b_ranks"] = ranks;
        out["p_dim"] = d.dual_code.p_dim();
        out["dual"] = json::parse(text);
        if (!opt.output.empty()) out["written"] = opt.output;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "b_ranks: " << size_list_text(ranks) << "\n";
    std::cout << "p_dim: " << d.dual_code.p_dim() << "\n";
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::cout << "written: " << opt.output << "\n";
    }
    return 0;
}

int run_standard_form(const Options& opt) {
    PolyMatrix g = read_code_file(opt.input);
    StandardFormResult sf = standard_form(g);  // NotConstant -> invalid input
    PolyMatrix out_mat = PolyMatrix::from_const(g.ring(), sf.matrix);
    if (!opt.output.empty()) write_code_file(opt.output, out_mat);

    if (opt.machine) {
        json out;
        json m = json::array();
        for (size_t i = 0; i < sf.matrix.rows; ++i) {
            json row = json::array();
            for (size_t j = 0; j < sf.matrix.cols; ++j) row.push_back(sf.matrix.at(i, j));
            m.push_back(row);
        }
        out["matrix"] = m;
        out["params"] = sf.params;
        out["column_permutation"] = sf.column_permutation;
        if (!opt.output.empty()) out["written"] = opt.output;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < sf.matrix.rows; ++i)
        std::cout << const_row_text(sf.matrix, i) << "\n";
    std::cout << "params: " << size_list_text(sf.params) << "\n";
    std::cout << "column_permutation: " << size_list_text(sf.column_permutation) << "\n";
    if (!opt.output.empty()) std::cout << "written: " << opt.output << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    ConvolutionalCode c(read_code_file(opt.input));
    VerificationReport rep = verify_duality_identities(c, opt.trials, opt.seed);
    append_oracle_items(rep, c);
    if (opt.machine) {
        std::cout << report_json_text(rep);
    } else {
        print_report_human(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

int run_expand(const Options& opt) {
    if (opt.lo > opt.hi) throw ParseError("lo must not exceed hi");
    PolyMatrix g = read_code_file(opt.input);
    if (opt.machine) {
        json out;
        out["lo"] = opt.lo;
        out["hi"] = opt.hi;
        json rows = json::array();
        for (size_t i = 0; i < g.rows(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < g.cols(); ++j) {
                LaurentWindow w =
                    laurent_expand(RationalFunction::from_poly(g.at(i, j)), opt.lo, opt.hi);
                row.push_back(w.coeffs);
            }
            rows.push_back(row);
        }
        out["coefficients"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "window: D^" << opt.lo << " .. D^" << opt.hi << "\n";
    for (size_t i = 0; i < g.rows(); ++i) {
        for (size_t j = 0; j < g.cols(); ++j) {
            LaurentWindow w =
                laurent_expand(RationalFunction::from_poly(g.at(i, j)), opt.lo, opt.hi);
            std::cout << "g[" << i << "][" << j << "]: [";
            for (size_t t = 0; t < w.coeffs.size(); ++t) {
                if (t) std::cout << ", ";
                std::cout << w.coeffs[t];
            }
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_random(const Options& opt) {
    Ring ring = make_ring(opt.p, opt.r);
    if (opt.n == 0 || opt.n > 1024) throw ParseError("n must be in [1, 1024]");
    if (opt.k > 1024) throw ParseError("k must be at most 1024");
    if (opt.max_deg < 0 || opt.max_deg > 64) throw ParseError("max-deg must be in [0, 64]");
    std::mt19937_64 rng(opt.seed);
    PolyMatrix g = random_poly_matrix(rng, ring, opt.k, opt.n, opt.max_deg);
    std::string text = code_file_text(g);
    if (!opt.output.empty()) {
        write_code_file(opt.output, g);
        std::cout << "written: " << opt.output << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of convolutional codes over Z_{p^r}"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* analyze = app.add_subcommand("analyze", "parameters, standard form, p-encoder");
    analyze->add_option("-i,--input", opt.input, "zprconv-1 code file")->required();
    analyze->add_flag("--machine", opt.machine, "machine-readable output");

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual code generator and layer ranks");
    dual_cmd->add_option("-i,--input", opt.input, "zprconv-1 code file")->required();
    dual_cmd->add_option("-o,--output", opt.output, "where to write the dual generator");
    dual_cmd->add_flag("--machine", opt.machine, "machine-readable output");

    CLI::App* sf = app.add_subcommand("standard-form", "block-code standard form");
    sf->add_option("-i,--input", opt.input, "zprconv-1 code file")->required();
    sf->add_option("-o,--output", opt.output, "where to write the transformed generator");
    sf->add_flag("--machine", opt.machine, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "duality identities plus exhaustive checks");
    verify->add_option("-i,--input", opt.input, "zprconv-1 code file")->required();
    verify->add_option("--trials", opt.trials, "random probes per identity");
    verify->add_option("--seed", opt.seed, "seed for the probe generator");
    verify->add_flag("--machine", opt.machine, "machine-readable output");

    CLI::App* expand = app.add_subcommand("expand", "Laurent windows of generator entries");
    expand->add_option("-i,--input", opt.input, "zprconv-1 code file")->required();
    expand->add_option("--lo", opt.lo, "lowest exponent of the window");
    expand->add_option("--hi", opt.hi, "highest exponent of the window");
    expand->add_flag("--machine", opt.machine, "machine-readable output");

    CLI::App* random_cmd = app.add_subcommand("random", "reproducible random code file");
    random_cmd->add_option("--p", opt.p, "prime base")->required();
    random_cmd->add_option("--r", opt.r, "chain length")->required();
    random_cmd->add_option("--n", opt.n, "code length")->required();
    random_cmd->add_option("--k", opt.k, "generator rows")->required();
    random_cmd->add_option("--max-deg", opt.max_deg, "maximum entry degree");
    random_cmd->add_option("--seed", opt.seed, "generator seed");
    random_cmd->add_option("-o,--output", opt.output, "where to write the code file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(dual_cmd)) return run_dual(opt);
        if (app.got_subcommand(sf)) return run_standard_form(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(expand)) return run_expand(opt);
        if (app.got_subcommand(random_cmd)) return run_random(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
