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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "grs/decoder.hpp"
#include "grs/io.hpp"
#include "grs/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDecodeFailure = 4;

struct Options {
    std::string config, in, out, trace;
    size_t radius = 0, weight = 0, trials = 0;
    uint64_t seed = 0;
    bool bmd = false;
    bool has_radius = false;
};

grs::GrsCode load_code(const Options& opt) {
    return grs::make_code(grs::load_config(opt.config));
}

std::vector<uint32_t> load_symbols(const grs::GrsCode& code, const std::string& path,
                                   size_t expected) {
    grs::WordFile w = grs::load_word(path);
    if (w.q != code.field().q())
        throw std::invalid_argument("word file field does not match config");
    if (w.symbols.size() != expected)
        throw std::invalid_argument("word file has wrong symbol count");
    return w.symbols;
}

std::vector<uint32_t> corrupt_word(const grs::GrsCode& code, std::vector<uint32_t> word,
                                   size_t weight, uint64_t seed) {
    if (weight > word.size()) throw std::invalid_argument("weight exceeds length");
    std::mt19937_64 rng(seed);
    std::vector<size_t> pos(word.size());
    for (size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::uniform_int_distribution<uint32_t> offset(1, code.field().q() - 1);
    for (size_t i = 0; i < weight; ++i) {
        const size_t p = pos[i];
        word[p] = code.field().add(word[p], offset(rng));
    }
    return word;
}

void print_message(std::ostream& os, const grs::UniPoly& msg, size_t k) {
    for (size_t i = 0; i < k; ++i) os << (i ? " " : "") << msg.coeff(i);
}

int cmd_params(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    std::cout << "n=" << code.n() << " k=" << code.k() << " d=" << code.d() << "\n";
    if (opt.has_radius) {
        grs::DecodeParams p = grs::params_for(code, opt.radius);
        std::cout << "tau=" << p.tau << " s=" << p.s << " ell=" << p.ell << " N=(";
        for (size_t t = 0; t < p.N.size(); ++t) std::cout << (t ? "," : "") << p.N[t];
        std::cout << ")\n";
    }
    return kExitOk;
}

int cmd_encode(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    std::vector<uint32_t> msg = load_symbols(code, opt.in, code.k());
    grs::save_word(opt.out, code.field().q(), code.encode(msg));
    return kExitOk;
}

int cmd_corrupt(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    std::vector<uint32_t> word = load_symbols(code, opt.in, code.n());
    grs::save_word(opt.out, code.field().q(),
                   corrupt_word(code, word, opt.weight, opt.seed));
    return kExitOk;
}

int cmd_decode(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    std::vector<uint32_t> word = load_symbols(code, opt.in, code.n());

    if (opt.bmd) {
        grs::BmdResult res = grs::decode_bmd(code, word);
        if (!opt.trace.empty()) {
            std::ofstream tf(opt.trace);
            tf << grs::trace_to_csv(res.trace);
        }
        if (!res.ok) {
            std::cout << "bmd: failure\n";
            return kExitDecodeFailure;
        }
        auto [ok, msg] = code.unencode(res.codeword);
        std::cout << "bmd: corrected " << grs::hamming_distance(word, res.codeword)
                  << " errors\nmessage: ";
        print_message(std::cout, ok ? msg : grs::UniPoly(code.field()), code.k());
        std::cout << "\n";
        return kExitOk;
    }

    grs::ListDecodeResult res = grs::list_decode(code, word, opt.radius);
    std::cout << "tau=" << res.params.tau << " s=" << res.params.s
              << " ell=" << res.params.ell << " N=(";
    for (size_t t = 0; t < res.params.N.size(); ++t)
        std::cout << (t ? "," : "") << res.params.N[t];
    std::cout << ")\niterations=" << res.trace.size() << "\n";
    for (const grs::Candidate& c : res.candidates) {
        std::cout << "candidate distance=" << c.distance << " message: ";
        print_message(std::cout, c.message, code.k());
        std::cout << "\n";
    }
    if (!opt.trace.empty()) {
        std::ofstream tf(opt.trace);
        tf << grs::trace_to_csv(res.trace);
    }
    return kExitOk;
}

int cmd_bench(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    // resolve parameters once so an infeasible radius fails before the header
    grs::params_for(code, opt.radius);
    std::cout << "trial,weight,success,iterations,wall_time\n";
    for (size_t trial = 0; trial < opt.trials; ++trial) {
        std::mt19937_64 rng(opt.seed + trial);
        std::uniform_int_distribution<uint32_t> sym(0, code.field().q() - 1);
        std::vector<uint32_t> msg(code.k());
        for (auto& v : msg) v = sym(rng);
        std::vector<uint32_t> sent = code.encode(msg);
        std::vector<uint32_t> recv =
            corrupt_word(code, sent, opt.radius, opt.seed * 7919 + trial);

        const auto start = std::chrono::steady_clock::now();
        grs::ListDecodeResult res = grs::list_decode(code, recv, opt.radius);
        const std::chrono::duration<double> dt =
            std::chrono::steady_clock::now() - start;

        bool hit = false;
        for (const grs::Candidate& c : res.candidates)
            if (c.codeword == sent) hit = true;
        std::cout << trial << "," << opt.radius << "," << (hit ? 1 : 0) << ","
                  << res.trace.size() << "," << dt.count() << "\n";
    }
    return kExitOk;
}

int cmd_syndromes(const Options& opt) {
    grs::GrsCode code = load_code(opt);
    std::vector<uint32_t> word = load_symbols(code, opt.in, code.n());
    grs::DecodeParams p = grs::params_for(code, opt.radius);
    grs::SyndromeSet set = grs::gs_syndromes(code, word, p.s, p.ell, p.tau);
    std::cout << "b,t,i,value\n";
    for (size_t b = 0; b < set.s; ++b)
        for (size_t t = 0; t <= set.ell; ++t)
            for (size_t i = 0; i < set.blocks[b][t].size(); ++i)
                std::cout << b << "," << t << "," << i << "," << set.blocks[b][t][i]
                          << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Reed-Solomon encoder and list decoder"};
    app.require_subcommand(1);
    Options opt;

    auto add_config = [&](CLI::App* c) {
        c->add_option("--config", opt.config, "code description file")->required();
    };

    CLI::App* params = app.add_subcommand("params", "inspect code and radius parameters");
    add_config(params);
    params->add_option("--radius", opt.radius, "decoding radius");

    CLI::App* encode = app.add_subcommand("encode", "encode a message word file");
    add_config(encode);
    encode->add_option("--in", opt.in, "message word file (k symbols)")->required();
    encode->add_option("--out", opt.out, "codeword output")->required();

    CLI::App* corrupt = app.add_subcommand("corrupt", "add random errors to a word");
    add_config(corrupt);
    corrupt->add_option("--in", opt.in, "word file")->required();
    corrupt->add_option("--out", opt.out, "output word file")->required();
    corrupt->add_option("--weight", opt.weight, "number of positions to corrupt")
        ->required();
    corrupt->add_option("--seed", opt.seed, "RNG seed");

    CLI::App* decode = app.add_subcommand("decode", "decode a received word");
    add_config(decode);
    decode->add_option("--in", opt.in, "received word file")->required();
    CLI::Option* radius_opt =
        decode->add_option("--radius", opt.radius, "list-decoding radius");
    decode->add_flag("--bmd", opt.bmd, "bounded-minimum-distance decoding");
    decode->add_option("--trace", opt.trace, "write FIA trace CSV here");

    CLI::App* bench = app.add_subcommand("bench", "planted-error decoding benchmark");
    add_config(bench);
    bench->add_option("--radius", opt.radius, "decoding radius")->required();
    bench->add_option("--trials", opt.trials, "number of trials")->required();
    bench->add_option("--seed", opt.seed, "RNG seed");

    CLI::App* syndromes = app.add_subcommand("syndromes", "dump syndrome sequences");
    add_config(syndromes);
    syndromes->add_option("--in", opt.in, "received word file")->required();
    syndromes->add_option("--radius", opt.radius, "decoding radius")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    opt.has_radius = params->count("--radius") > 0 || radius_opt->count() > 0;
    if (decode->parsed() && !opt.bmd && radius_opt->count() == 0) {
        std::cerr << "decode needs --radius or --bmd\n";
        return kExitInput;
    }

    try {
        if (params->parsed()) return cmd_params(opt);
        if (encode->parsed()) return cmd_encode(opt);
        if (corrupt->parsed()) return cmd_corrupt(opt);
        if (decode->parsed()) return cmd_decode(opt);
        if (bench->parsed()) return cmd_bench(opt);
        if (syndromes->parsed()) return cmd_syndromes(opt);
    } catch (const grs::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
