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

#include "zprconv/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zprconv/errors.hpp"

namespace zprconv {
namespace {

using nlohmann::json;

uint64_t integer_field(const json& j, const char* field, uint64_t hi) {
    if (!j.contains(field)) throw ParseError(std::string(field) + " is missing");
    const json& v = j.at(field);
    if (!v.is_number_integer() || v.get<int64_t>() < 0)
        throw ParseError(std::string(field) + " must be a nonnegative integer");
    uint64_t u = v.get<uint64_t>();
    if (u > hi)
        throw ParseError(std::string(field) + " must be at most " + std::to_string(hi));
    return u;
}

}  // namespace

PolyMatrix parse_code_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("format") || !j.at("format").is_string() ||
        j.at("format").get<std::string>() != "zprconv-1")
        throw ParseError("format must be the string \"zprconv-1\"");

    uint64_t p = integer_field(j, "p", uint64_t(1) << 20);
    uint64_t r = integer_field(j, "r", 64);
    Ring ring = make_ring(static_cast<uint32_t>(p), static_cast<uint32_t>(r));
    uint64_t n = integer_field(j, "n", 1024);
    if (n == 0) throw ParseError("n must be a positive integer");

    if (!j.contains("generator") || !j.at("generator").is_array())
        throw ParseError("generator must be an array of rows");
    const json& rows = j.at("generator");

    PolyMatrix g(ring, rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        std::string row_name = "generator[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != n)
            throw ParseError(row_name + " must be an array of " + std::to_string(n) +
                             " coefficient lists");
        for (size_t c = 0; c < n; ++c) {
            const json& cell = row[c];
            std::string cell_name = row_name + "[" + std::to_string(c) + "]";
            if (!cell.is_array())
                throw ParseError(cell_name + " must be an ascending coefficient list");
            std::vector<uint64_t> cs;
            cs.reserve(cell.size());
            for (size_t d = 0; d < cell.size(); ++d) {
                const json& e = cell[d];
                std::string entry_name = cell_name + "[" + std::to_string(d) + "]";
                if (!e.is_number_integer())
                    throw ParseError(entry_name + " must be an integer");
                int64_t v = e.get<int64_t>();
                if (v < 0 || static_cast<uint64_t>(v) >= ring->modulus())
                    throw ParseError(entry_name + " = " + std::to_string(v) +
                                     " is outside [0, p^r)");
                cs.push_back(static_cast<uint64_t>(v));
            }
            g.at(i, c) = Polynomial(ring, std::move(cs));
        }
    }
    return g;
}

PolyMatrix read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_text(buf.str());
}

std::string code_file_text(const PolyMatrix& g) {
    json j;
    j["format"] = "zprconv-1";
    j["p"] = g.ring()->p();
    j["r"] = g.ring()->r();
    j["n"] = g.cols();
    json rows = json::array();
    for (size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (size_t c = 0; c < g.cols(); ++c) {
            const Polynomial& f = g.at(i, c);
            json cell = json::array();
            for (int d = 0; d <= f.degree(); ++d) cell.push_back(f.coeff(static_cast<size_t>(d)));
            if (cell.empty()) cell.push_back(0);
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    j["generator"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_code_file(const std::string& path, const PolyMatrix& generator) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << code_file_text(generator);
    if (!out) throw Error("write to " + path + " failed");
}

std::string report_json_text(const VerificationReport& rep) {
    json j;
    j["seed"] = rep.seed;
    j["all_pass"] = rep.all_pass();
    json items = json::array();
    for (const auto& it : rep.items) {
        json e;
        e["name"] = it.name;
        e["pass"] = it.pass;
        e["applicable"] = it.applicable;
        e["expected"] = it.expected;
        e["actual"] = it.actual;
        items.push_back(std::move(e));
    }
    j["items"] = std::move(items);
    return j.dump(2) + "\n";
}

}  // namespace zprconv
