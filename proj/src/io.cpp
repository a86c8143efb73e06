/*
   Copyright 2026 the grslib authors

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

#include "grs/io.hpp"

#include <fstream>
#include <sstream>

namespace grs {

namespace {

std::vector<uint32_t> parse_list(const std::string& text, const std::string& key) {
    std::istringstream is(text);
    std::vector<uint32_t> out;
    long v;
    while (is >> v) {
        if (v < 0) throw std::invalid_argument("negative value for " + key);
        out.push_back((uint32_t)v);
    }
    if (!is.eof())
        throw std::invalid_argument("malformed value for " + key);
    return out;
}

uint32_t parse_scalar(const std::string& text, const std::string& key) {
    const std::vector<uint32_t> v = parse_list(text, key);
    if (v.size() != 1) throw std::invalid_argument("expected one value for " + key);
    return v[0];
}

}  // namespace

CodeConfig parse_config(std::istream& in) {
    CodeConfig cfg;
    bool saw_p = false, saw_n = false, saw_k = false;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + line);
        std::istringstream ks(line.substr(0, eq));
        std::string key;
        ks >> key;
        const std::string value = line.substr(eq + 1);
        if (key == "p") {
            cfg.p = parse_scalar(value, key);
            saw_p = true;
        } else if (key == "m") {
            cfg.m = parse_scalar(value, key);
        } else if (key == "modulus") {
            cfg.modulus = parse_list(value, key);
        } else if (key == "n") {
            cfg.n = parse_scalar(value, key);
            saw_n = true;
        } else if (key == "k") {
            cfg.k = parse_scalar(value, key);
            saw_k = true;
        } else if (key == "alphas") {
            cfg.alphas = parse_list(value, key);
        } else if (key == "vprimes") {
            cfg.vprimes = parse_list(value, key);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    if (!saw_p || !saw_n || !saw_k || cfg.alphas.empty())
        throw std::invalid_argument("config must set p, n, k, alphas");
    if (cfg.alphas.size() != cfg.n)
        throw std::invalid_argument("alphas length does not match n");
    if (cfg.vprimes.empty()) cfg.vprimes.assign(cfg.n, 1);
    return cfg;
}

CodeConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_config(in);
}

GrsCode make_code(const CodeConfig& cfg) {
    Field f(cfg.p, cfg.m, cfg.modulus);
    return GrsCode(f, cfg.k, cfg.alphas, cfg.vprimes);
}

WordFile parse_word(std::istream& in) {
    WordFile w;
    size_t n = 0;
    if (!(in >> w.q >> n)) throw std::invalid_argument("malformed word file header");
    w.symbols.resize(n);
    for (size_t i = 0; i < n; ++i) {
        long v;
        if (!(in >> v) || v < 0 || (uint32_t)v >= w.q)
            throw std::invalid_argument("malformed word file symbol");
        w.symbols[i] = (uint32_t)v;
    }
    return w;
}

WordFile load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open word file: " + path);
    return parse_word(in);
}

void write_word(std::ostream& out, uint32_t q, const std::vector<uint32_t>& symbols) {
    out << q << " " << symbols.size() << "\n";
    for (size_t i = 0; i < symbols.size(); ++i)
        out << (i ? " " : "") << symbols[i];
    out << "\n";
}

void save_word(const std::string& path, uint32_t q, const std::vector<uint32_t>& symbols) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_word(out, q, symbols);
}

}  // namespace grs
