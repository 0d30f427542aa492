#include "pnorm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnorm/estimator.hpp"
#include "pnorm/exact.hpp"
#include "pnorm/interp.hpp"
#include "pnorm/io.hpp"
#include "pnorm/structured.hpp"

namespace pnorm::cli {

namespace {

using nlohmann::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json exponent_json(Exponent p) {
    if (p.is_infinite()) return "inf";
    return p.value();
}

json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Exponent> parse_exponents(const std::string& list) {
    std::vector<Exponent> out;
    for (const auto& tok : split(list, ',')) out.push_back(Exponent::parse(tok));
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "1,3;3,1" (rows separated by ';') or a path to a matrix file.
CMatrix parse_matrix_arg(const std::string& text) {
    if (text.find(',') == std::string::npos && text.find(';') == std::string::npos) {
        if (text == "magic2") return CMatrix{{1, 3}, {3, 1}};
        if (std::filesystem::exists(text)) return io::read_matrix(text);
    }
    std::vector<complex> data;
    std::size_t rows = 0, cols = 0;
    for (const auto& row : split(text, ';')) {
        auto r = io::parse_complex_list(row);
        if (rows == 0) cols = r.size();
        else if (r.size() != cols) throw io::parse_error("ragged matrix literal");
        data.insert(data.end(), r.begin(), r.end());
        ++rows;
    }
    return CMatrix(rows, cols, std::move(data));
}

CMatrix random_matrix(std::size_t n, std::uint64_t seed, bool real) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = real ? complex{g(rng), 0.0} : complex{g(rng), g(rng)};
    return a;
}

int cmd_bounds(const std::string& file, const std::string& plist, std::uint64_t seed, std::ostream& out) {
    const CMatrix a = io::read_matrix(file);
    const auto ps = parse_exponents(plist);
    if (!a.is_square()) throw usage_error("matrix must be square");
    for (const auto& p : ps) {
        const auto b = estimator::certified_bound(a, p, seed);
        json rec{{"p", exponent_json(p)},
                 {"lower", b.lower},
                 {"upper", b.upper},
                 {"lower_provenance", interp::to_string(b.lower_provenance)},
                 {"upper_provenance", interp::to_string(b.upper_provenance)}};
        out << rec.dump() << '\n';
    }
    return kExitOk;
}

int cmd_classify(const std::string& file, std::ostream& out) {
    const CMatrix a = io::read_matrix(file);
    if (!a.is_square()) throw usage_error("matrix must be square");

    const auto db = structured::doubly_balanced_norm(a);
    json rec{{"class", "doubly-balanced"}, {"member", db.has_value()}};
    if (db) rec["alpha"] = *db;
    out << rec.dump() << '\n';

    const auto circ = structured::recognize_circulant(a);
    rec = json{{"class", "circulant"}, {"member", circ.has_value()}};
    if (circ) {
        const auto w = structured::classify_circulant_la(*circ);
        rec["la"] = w.is_la;
        rec["degenerate"] = w.degenerate;
        rec["two_norm"] = structured::circulant_two_norm(*circ);
        if (w.is_la) {
            rec["beta"] = complex_json(*w.beta);
            rec["omega"] = complex_json(*w.omega);
            rec["norm"] = *w.norm;
        }
    }
    out << rec.dump() << '\n';

    const auto hank = structured::recognize_hankel(a);
    out << json{{"class", "hankel-mod"}, {"member", hank.has_value()}}.dump() << '\n';

    const auto la = interp::is_log_affine(a);
    out << json{{"class", "log-affine"},
                {"member", la.is_la},
                {"degenerate", la.degenerate},
                {"n1", la.anchors.n1},
                {"n2", la.anchors.n2},
                {"ninf", la.anchors.ninf},
                {"ratio", la.ratio}}
               .dump()
        << '\n';

    out << json{{"class", "unitary-permutation"}, {"member", structured::recognize_unitary_permutation(a).has_value()}}
               .dump()
        << '\n';

    const auto tensors = structured::recognize_tensors(a);
    rec = json{{"class", "tensor-rank-one"}, {"member", !tensors.empty()}};
    if (!tensors.empty()) rec["core_size"] = tensors.front().core.rows();
    out << rec.dump() << '\n';
    return kExitOk;
}

int cmd_profile(const std::string& file, const std::string& grid_spec, const std::string& out_path,
                std::uint64_t seed, std::ostream& out) {
    const CMatrix a = io::read_matrix(file);
    if (!a.is_square()) throw usage_error("matrix must be square");
    const auto grid = grid_spec == "default" ? interp::default_grid() : parse_exponents(grid_spec);
    const auto prof = interp::profile(a, grid, seed);

    std::ofstream f(out_path, std::ios::trunc);
    if (!f) throw io::io_error("cannot open '" + out_path + "' for writing");
    f << "# log-convex: " << (prof.log_convex ? "pass" : "fail") << "; unimodal: " << (prof.unimodal ? "pass" : "fail")
      << "; p0: " << prof.grid[prof.p0_index].to_string() << " in [" << prof.p0_low.to_string() << ", "
      << prof.p0_high.to_string() << "]\n";
    f << "p,one_over_p,lower,upper,envelope\n";
    for (std::size_t i = 0; i < prof.grid.size(); ++i) {
        const auto& p = prof.grid[i];
        f << p.to_string() << ',' << fmt(p.reciprocal()) << ',' << fmt(prof.bounds[i].lower) << ','
          << fmt(prof.bounds[i].upper) << ',' << fmt(prof.envelope[i]) << '\n';
    }
    if (!f) throw io::io_error("write to '" + out_path + "' failed");
    out << json{{"written", out_path},
                {"points", prof.grid.size()},
                {"log_convex", prof.log_convex},
                {"unimodal", prof.unimodal},
                {"p0", exponent_json(prof.grid[prof.p0_index])}}
               .dump()
        << '\n';
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    std::string coeffs, sigma, phases, alpha, beta, core, parts, sizes;
    std::size_t n = 0;
    bool real = false;
    std::string out_path;
    std::uint64_t seed = 0;
};

CMatrix generate(const GenerateArgs& g) {
    const auto need = [](const std::string& v, const char* name) {
        if (v.empty()) throw usage_error(std::string("--") + name + " is required for this family");
        return v;
    };
    if (g.family == "magic3") return CMatrix{{8, 1, 6}, {3, 5, 7}, {4, 9, 2}};
    if (g.family == "magic4") return CMatrix{{1, 2, 15, 16}, {13, 14, 3, 4}, {12, 7, 10, 5}, {8, 11, 6, 9}};
    if (g.family == "circulant")
        return structured::densify(structured::Circulant(io::parse_complex_list(need(g.coeffs, "coeffs"))));
    if (g.family == "hankel")
        return structured::densify(structured::HankelMod(io::parse_complex_list(need(g.coeffs, "coeffs"))));
    if (g.family == "identity") {
        if (g.n == 0) throw usage_error("--n is required for identity");
        return CMatrix::identity(g.n);
    }
    if (g.family == "random") {
        if (g.n == 0) throw usage_error("--n is required for random");
        return random_matrix(g.n, g.seed, g.real);
    }
    if (g.family == "unitary-permutation") {
        std::vector<std::size_t> sigma;
        if (!g.sigma.empty()) {
            for (const auto& t : split(g.sigma, ',')) sigma.push_back(static_cast<std::size_t>(std::stoul(t)));
        } else {
            if (g.n == 0) throw usage_error("unitary-permutation needs --sigma or --n");
            sigma.resize(g.n);
            std::iota(sigma.begin(), sigma.end(), std::size_t{0});
            std::mt19937_64 rng(g.seed);
            std::shuffle(sigma.begin(), sigma.end(), rng);
        }
        std::vector<complex> phases;
        if (!g.phases.empty()) {
            phases = io::parse_complex_list(g.phases);
        } else if (!g.sigma.empty()) {
            phases.assign(sigma.size(), 1.0);
        } else {
            std::mt19937_64 rng(g.seed + 1);
            std::uniform_real_distribution<double> u(0.0, 2.0 * 3.141592653589793);
            for (std::size_t i = 0; i < sigma.size(); ++i) phases.push_back(std::polar(1.0, u(rng)));
        }
        return structured::densify(structured::UnitaryPermutation(std::move(sigma), std::move(phases)));
    }
    if (g.family == "tensor") {
        return structured::densify(structured::TensorRankOne(CVector(io::parse_complex_list(need(g.alpha, "alpha"))),
                                                             CVector(io::parse_complex_list(need(g.beta, "beta"))),
                                                             parse_matrix_arg(need(g.core, "core"))));
    }
    if (g.family == "direct-sum") {
        std::vector<CMatrix> parts;
        if (!g.parts.empty()) {
            for (const auto& path : split(g.parts, ',')) parts.push_back(io::read_matrix(path));
        } else {
            std::uint64_t s = g.seed;
            for (const auto& t : split(need(g.sizes, "sizes"), ','))
                parts.push_back(random_matrix(static_cast<std::size_t>(std::stoul(t)), s++, g.real));
        }
        return structured::direct_sum(parts);
    }
    throw usage_error("unknown family '" + g.family + "'");
}

int cmd_oracle(const std::string& file, const std::string& p_text, int resolution, std::ostream& out) {
    const CMatrix a = io::read_matrix(file);
    const Exponent p = Exponent::parse(p_text);
    const auto r = estimator::oracle_norm(a, p, resolution);
    json x = json::array();
    for (const auto& z : r.maximizer.entries()) x.push_back(z.real());
    out << json{{"p", exponent_json(p)}, {"value", r.value}, {"angles", r.angles}, {"maximizer", x}}.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Operator p-norm bounds, exact structured norms and log-affine classification", "pnorm"};
    app.require_subcommand(1);

    std::string file, plist = "1,2,inf", grid = "default", out_path, p_text = "2";
    std::uint64_t seed = 0;
    int resolution = 720;
    GenerateArgs gen;

    auto* bounds = app.add_subcommand("bounds", "Certified [lower, upper] for ||A||_{p,p}");
    bounds->add_option("file", file, "Matrix file (.json or .csv)")->required();
    bounds->add_option("--p", plist, "Comma-separated exponents, decimals >= 1 or 'inf'");
    bounds->add_option("--seed", seed, "Random seed");

    auto* classify = app.add_subcommand("classify", "Structural classes and the log-affine test");
    classify->add_option("file", file, "Matrix file")->required();

    auto* prof = app.add_subcommand("profile", "Sample the norm profile to CSV");
    prof->add_option("file", file, "Matrix file")->required();
    prof->add_option("--grid", grid, "'default' or comma-separated exponents");
    prof->add_option("--out", out_path, "Output CSV path")->required();
    prof->add_option("--seed", seed, "Random seed");

    auto* genc = app.add_subcommand("generate", "Write a structured matrix file");
    genc->add_option("family", gen.family,
                     "magic3 | magic4 | circulant | hankel | unitary-permutation | tensor | direct-sum | identity | random")
        ->required();
    genc->add_option("--coeffs", gen.coeffs, "Circulant / Hankel coefficients");
    genc->add_option("--sigma", gen.sigma, "Permutation, 0-based column of each row");
    genc->add_option("--phases", gen.phases, "Unimodular phases");
    genc->add_option("--n", gen.n, "Size for identity, random, unitary-permutation");
    genc->add_option("--alpha", gen.alpha, "Tensor alpha vector");
    genc->add_option("--beta", gen.beta, "Tensor beta vector");
    genc->add_option("--core", gen.core, "Tensor core: 'a,b;c,d', 'magic2' or a matrix file");
    genc->add_option("--parts", gen.parts, "Direct-sum part files");
    genc->add_option("--sizes", gen.sizes, "Direct-sum random part sizes");
    genc->add_flag("--real", gen.real, "Real random entries");
    genc->add_option("--out", gen.out_path, "Output path")->required();
    genc->add_option("--seed", gen.seed, "Random seed");

    auto* orc = app.add_subcommand("oracle", "Brute-force norm for real 2x2 and 3x3 matrices");
    orc->add_option("file", file, "Matrix file")->required();
    orc->add_option("--p", p_text, "Exponent");
    orc->add_option("--resolution", resolution, "Grid points per angle (>= 360)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bounds) return cmd_bounds(file, plist, seed, out);
        if (*classify) return cmd_classify(file, out);
        if (*prof) return cmd_profile(file, grid, out_path, seed, out);
        if (*genc) {
            io::write_matrix(gen.out_path, generate(gen));
            out << json{{"written", gen.out_path}, {"family", gen.family}}.dump() << '\n';
            return kExitOk;
        }
        if (*orc) return cmd_oracle(file, p_text, resolution, out);
    } catch (const io::io_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const estimator::unsupported_size& e) {
        err << "error: unsupported for oracle: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pnorm::cli
