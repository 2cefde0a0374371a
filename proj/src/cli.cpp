#include "csm/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "csm/class_number.hpp"
#include "csm/lattice.hpp"
#include "csm/splitting.hpp"
#include "csm/windows.hpp"

namespace csm {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kGuard = 1'000'000'000'000ULL;

enum class Format { plain, json, csv };

struct Globals {
    Format format = Format::plain;
    std::uint64_t seed = 1;
    bool force = false;
};

// Exact integers go out as JSON numbers when they fit, as strings otherwise.
Json exact(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
    return Json(v.get_str());
}

Json coeffs_json(const CycInt& c) {
    Json a = Json::array();
    for (const auto& v : c.coeffs()) a.push_back(exact(v));
    return a;
}

Json word_json(const RotationWord& w) {
    Json j;
    j["n"] = w.n.n;
    j["unit_exp"] = w.unit_exp;
    j["conjugated"] = w.conjugated;
    Json ex = Json::array();
    for (const auto& [label, e] : w.exponents) ex.push_back({{"p", label.p}, {"pair", label.pair}, {"e", e}});
    j["exponents"] = ex;
    return j;
}

std::string word_plain(const RotationWord& w) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [label, e] : w.exponents) {
        os << (first ? "" : ", ") << '(' << label.p << ',' << label.pair << "):" << e;
        first = false;
    }
    os << '}';
    if (w.unit_exp != 0) os << " eta^" << w.unit_exp;
    if (w.conjugated) os << " conj";
    return os.str();
}

std::string word_csv(const RotationWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, e] : w.exponents) {
        os << (first ? "" : ";") << label.p << '.' << label.pair << ':' << e;
        first = false;
    }
    return os.str();
}

std::string fixed(double v, int digits = 9) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SymmetryOrder order_with_notice(unsigned requested, std::ostream& err) {
    auto n = normalize_symmetry(requested);
    if (n.n != requested) {
        err << "note: n=" << requested << " describes the same module as n=" << n.n
            << " (N=" << n.N << "); using n=" << n.n << "\n";
    }
    return n;
}

void guard(std::uint64_t m, const Globals& g) {
    if (m > kGuard && !g.force) {
        throw Error(Errc::too_large, "m=" + std::to_string(m) + " exceeds 10^12; pass --force");
    }
}

std::uint64_t limit_for(const Globals& g) {
    return g.force ? std::numeric_limits<std::uint64_t>::max() : kDefaultFactorLimit;
}

int cmd_spectrum(unsigned requested, std::uint64_t bound, const Globals& g, std::ostream& out,
                 std::ostream& err) {
    auto n = order_with_notice(requested, err);
    auto table = residue_table(n);
    auto basics = basic_indices(n, bound);
    auto degl = [](const ResidueEntry& e) { return e.degL ? std::to_string(*e.degL) : std::string("-"); };
    switch (g.format) {
        case Format::plain:
            out << "n=" << n.n << " N=" << n.N << " degree=" << n.degree
                << " cn1=" << (n.cn1 ? "yes" : "no") << "\n";
            out << "residue degK degL splitting\n";
            for (const auto& [r, e] : table)
                out << r << ' ' << e.degK << ' ' << degl(e) << ' ' << (e.splitting ? "yes" : "no") << "\n";
            out << "basic indices <= " << bound << ":";
            for (const auto& b : basics) out << ' ' << b.get_str();
            out << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["requested"] = requested;
            j["n"] = n.n;
            j["N"] = n.N;
            j["degree"] = n.degree;
            j["cn1"] = n.cn1;
            Json rows = Json::array();
            for (const auto& [r, e] : table) {
                Json row;
                row["residue"] = r;
                row["degK"] = e.degK;
                row["degL"] = e.degL ? Json(*e.degL) : Json(nullptr);
                row["splitting"] = e.splitting;
                rows.push_back(row);
            }
            j["residues"] = rows;
            j["bound"] = bound;
            Json b = Json::array();
            for (const auto& v : basics) b.push_back(exact(v));
            j["basic_indices"] = b;
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "kind,value,degK,degL,splitting\n";
            for (const auto& [r, e] : table)
                out << "residue," << r << ',' << e.degK << ',' << (e.degL ? std::to_string(*e.degL) : "")
                    << ',' << (e.splitting ? "yes" : "no") << "\n";
            for (const auto& b : basics) out << "basic_index," << b.get_str() << ",,,\n";
            break;
    }
    return 0;
}

int cmd_series(unsigned requested, std::size_t count, const Globals& g, std::ostream& out,
               std::ostream& err) {
    auto n = order_with_notice(requested, err);
    DirichletTable t;
    if (n.cn1) {
        t = dirichlet_terms(n, count);
    } else if (n.n == 23) {
        t = series_23(count);
    } else {
        throw Error(Errc::unsupported_class_number,
                    "n=" + std::to_string(n.n) + ": unsupported class number (only class number one and n=23)");
    }
    switch (g.format) {
        case Format::plain:
            out << table_to_series(t) << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["n"] = n.n;
            j["terms"] = Json::parse(table_to_json(t));
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << table_to_csv(t);
            break;
    }
    return 0;
}

int cmd_count(unsigned requested, std::uint64_t m, const Globals& g, std::ostream& out,
              std::ostream& err) {
    auto n = order_with_notice(requested, err);
    guard(m, g);
    Integer fv;
    if (n.cn1) {
        fv = f(n, m, limit_for(g));
    } else if (n.n == 23) {
        fv = f_23(m);
    } else {
        throw Error(Errc::unsupported_class_number, "n=" + std::to_string(n.n) + ": unsupported class number");
    }
    Integer fh = n.N * fv;
    switch (g.format) {
        case Format::plain:
            out << fv.get_str() << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["n"] = n.n;
            j["m"] = m;
            j["f"] = exact(fv);
            j["fhat"] = exact(fh);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "n,m,f,fhat\n" << n.n << ',' << m << ',' << fv.get_str() << ',' << fh.get_str() << "\n";
            break;
    }
    return 0;
}

int cmd_enumerate(unsigned requested, std::uint64_t bound, bool angles, const Globals& g,
                  std::ostream& out, std::ostream& err) {
    auto n = order_with_notice(requested, err);
    guard(bound, g);
    auto words = enumerate_rotations(n, bound);
    switch (g.format) {
        case Format::plain:
            for (const auto& w : words) {
                out << "sigma=" << sigma(w).get_str() << ' ' << word_plain(w);
                if (angles) out << " angle=" << fixed(word_to_gamma(w).angle);
                out << "\n";
            }
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["n"] = n.n;
            j["bound"] = bound;
            Json arr = Json::array();
            for (const auto& w : words) {
                Json e;
                e["word"] = word_json(w);
                e["sigma"] = exact(sigma(w));
                if (angles) e["angle_radians"] = word_to_gamma(w).angle;
                arr.push_back(e);
            }
            j["words"] = arr;
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "sigma,exponents" << (angles ? ",angle_radians" : "") << "\n";
            for (const auto& w : words) {
                out << sigma(w).get_str() << ',' << word_csv(w);
                if (angles) out << ',' << fixed(word_to_gamma(w).angle);
                out << "\n";
            }
            break;
    }
    return 0;
}

int cmd_oracle(const std::string& path, const Globals& g, std::ostream& out) {
    RotationWord w = word_from_json(read_file(path));
    if (!w.n.cn1) {
        throw Error(Errc::unsupported_class_number, "oracle needs a class-number-one order");
    }
    Integer s = sigma(w);
    Gamma gm = word_to_gamma(w);
    Integer o = csm_index_oracle(w.n, gm.num, gm.den);
    const bool ok = s == o;
    switch (g.format) {
        case Format::plain:
            out << "sigma=" << s.get_str() << " oracle=" << o.get_str() << (ok ? " OK" : " MISMATCH") << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["word"] = word_json(w);
            j["sigma"] = exact(s);
            j["oracle"] = exact(o);
            j["match"] = ok;
            j["angle_radians"] = gm.angle;
            j["numerator_coeffs"] = coeffs_json(gm.num);
            j["denominator_coeffs"] = coeffs_json(gm.den);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "sigma,oracle,match\n" << s.get_str() << ',' << o.get_str() << ',' << (ok ? "yes" : "no") << "\n";
            break;
    }
    return ok ? 0 : static_cast<int>(ExitCode::internal_mismatch);
}

int cmd_accept(unsigned n_gon, std::optional<double> psi_opt, const std::string& word_file,
               std::size_t samples, const Globals& g, std::ostream& out) {
    double psi = 0.0;
    if (!word_file.empty()) {
        RotationWord w = word_from_json(read_file(word_file));
        auto [a, b] = word_tangent(w);
        psi = internal_angle(w.n.n, a, b).psi;
        if (n_gon == 0) n_gon = w.n.n;
    } else if (psi_opt) {
        psi = *psi_opt;
    } else if (samples == 0) {
        throw Error(Errc::invalid_argument, "accept needs --psi, --word-file or --samples");
    }
    if (n_gon == 0) n_gon = 8;

    if (samples > 0) {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> dist(0.0, 2 * std::numbers::pi);
        double worst = 0.0;
        double worst_psi = 0.0;
        for (std::size_t i = 0; i < samples; ++i) {
            double x = dist(rng);
            double d = std::abs(acceptance_ngon(n_gon, x) - polygon_overlap_area(n_gon, x));
            if (d > worst) {
                worst = d;
                worst_psi = x;
            }
        }
        switch (g.format) {
            case Format::plain:
                out << "n_gon=" << n_gon << " samples=" << samples << " seed=" << g.seed
                    << " max|A-clip|=" << std::scientific << std::setprecision(3) << worst
                    << " at psi=" << fixed(worst_psi) << "\n";
                break;
            case Format::json: {
                Json j;
                j["schema"] = 1;
                j["n_gon"] = n_gon;
                j["samples"] = samples;
                j["seed"] = g.seed;
                j["max_abs_difference"] = worst;
                j["worst_psi"] = worst_psi;
                out << j.dump() << "\n";
                break;
            }
            case Format::csv:
                out << "n_gon,samples,seed,max_abs_difference,worst_psi\n"
                    << n_gon << ',' << samples << ',' << g.seed << ',' << worst << ',' << worst_psi << "\n";
                break;
        }
        return 0;
    }

    auto in = reduce_angle(n_gon, psi);
    double a = acceptance_ngon(n_gon, psi);
    double c = polygon_overlap_area(n_gon, psi);
    switch (g.format) {
        case Format::plain:
            out << "n_gon=" << n_gon << " psi=" << fixed(psi) << " psi_hat=" << fixed(in.psi_hat)
                << " A=" << fixed(a) << " clip=" << fixed(c) << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["n_gon"] = n_gon;
            j["psi"] = psi;
            j["psi_hat"] = in.psi_hat;
            j["formula"] = a;
            j["clipping"] = c;
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "n_gon,psi,psi_hat,formula,clipping\n"
                << n_gon << ',' << fixed(psi) << ',' << fixed(in.psi_hat) << ',' << fixed(a) << ','
                << fixed(c) << "\n";
            break;
    }
    return 0;
}

const char* kind_name(Kind23 k) {
    switch (k) {
        case Kind23::P1: return "P1";
        case Kind23::P2: return "P2";
        case Kind23::non_splitting: return "non-splitting";
        case Kind23::ramified: return "ramified";
    }
    return "?";
}

int cmd_n23_classify(std::uint64_t p, const Globals& g, std::ostream& out) {
    auto c = classify_p23(p);
    switch (g.format) {
        case Format::plain:
            out << "p=" << p << " kind=" << kind_name(c.kind) << " d=" << c.d << " pairs=" << c.pairs << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["p"] = p;
            j["kind"] = kind_name(c.kind);
            j["d"] = c.d;
            j["pairs"] = c.pairs;
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "p,kind,d,pairs\n" << p << ',' << kind_name(c.kind) << ',' << c.d << ',' << c.pairs << "\n";
            break;
    }
    return 0;
}

int cmd_n23_index(std::uint64_t m, const Globals& g, std::ostream& out) {
    guard(m, g);
    bool idx = is_index_23(m);
    Integer fv = f_23(m);
    Integer fh = fhat_23(m);
    switch (g.format) {
        case Format::plain:
            out << "m=" << m << " index=" << (idx ? "yes" : "no") << " f=" << fv.get_str()
                << " fhat=" << fh.get_str() << "\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            j["m"] = m;
            j["is_index"] = idx;
            j["f"] = exact(fv);
            j["fhat"] = exact(fh);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "m,is_index,f,fhat\n"
                << m << ',' << (idx ? "yes" : "no") << ',' << fv.get_str() << ',' << fh.get_str() << "\n";
            break;
    }
    return 0;
}

int cmd_n23_reflections(std::size_t count, const Globals& g, std::ostream& out) {
    auto r = reflection_indices_nonprincipal(count);
    switch (g.format) {
        case Format::plain:
            for (const auto& x : r) out << x.index.get_str() << " (" << x.count.get_str() << ")\n";
            break;
        case Format::json: {
            Json j;
            j["schema"] = 1;
            Json arr = Json::array();
            for (const auto& x : r) arr.push_back({exact(x.index), exact(x.count)});
            j["reflection_indices"] = arr;
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "index,count\n";
            for (const auto& x : r) out << x.index.get_str() << ',' << x.count.get_str() << "\n";
            break;
    }
    return 0;
}

}  // namespace

ExitCode exit_code_for(Errc e) noexcept {
    switch (e) {
        case Errc::unsupported_class_number:
        case Errc::delegated_to_class_number:
        case Errc::not_tabulated:
        case Errc::unsupported_case:
        case Errc::ramified_unsupported:
        case Errc::search_exhausted:
            return ExitCode::unsupported;
        case Errc::internal_mismatch:
        case Errc::rank_mismatch:
            return ExitCode::internal_mismatch;
        default:
            return ExitCode::usage;
    }
}

std::string word_to_json(const RotationWord& w) { return word_json(w).dump(); }

RotationWord word_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
        RotationWord w = RotationWord::identity(normalize_symmetry(j.at("n").get<unsigned>()));
        long N = w.n.N;
        long u = j.value("unit_exp", 0L);
        w.unit_exp = ((u % N) + N) % N;
        w.conjugated = j.value("conjugated", false);
        if (j.contains("exponents")) {
            for (const auto& e : j.at("exponents")) {
                PairLabel l{e.at("p").get<std::uint64_t>(), e.value("pair", 0U)};
                long v = e.at("e").get<long>();
                if (v == 0) continue;
                w.exponents[l] += v;
                if (w.exponents[l] == 0) w.exponents.erase(l);
            }
        }
        for (const auto& [l, e] : w.exponents) {
            auto c = classify_prime(w.n, l.p);
            if (!c.splitting) {
                throw Error(Errc::not_splitting, std::to_string(l.p) + " is not a complex splitting prime");
            }
            if (l.pair >= c.pairs) {
                throw Error(Errc::missing_omega, "prime " + std::to_string(l.p) + " has " +
                                                     std::to_string(c.pairs) + " pair(s)");
            }
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("malformed word: ") + e.what());
    }
}

std::string table_to_csv(const DirichletTable& t) {
    std::ostringstream os;
    os << "m,f\n";
    for (const auto& [m, c] : t.entries) os << m.get_str() << ',' << c.get_str() << "\n";
    return os.str();
}

std::string table_to_json(const DirichletTable& t) {
    Json arr = Json::array();
    for (const auto& [m, c] : t.entries) arr.push_back({exact(m), exact(c)});
    return arr.dump();
}

std::string table_to_series(const DirichletTable& t) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t.entries) {
        if (!first) os << " + ";
        if (m == 1) {
            os << c.get_str();
        } else {
            os << c.get_str() << '/' << m.get_str() << "^s";
        }
        first = false;
    }
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coincidence site lattices and modules of planar N-fold symmetric patterns", "csm"};
    app.require_subcommand(1);
    Globals g;
    std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", g.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized sampling")->capture_default_str();
    app.add_flag("--force", g.force, "Allow indices above 10^12");

    unsigned n = 0;
    std::uint64_t bound = 100;
    std::size_t count = 12;
    std::uint64_t m = 0;
    std::string path;
    bool angles = false;

    auto* spectrum = app.add_subcommand("spectrum", "Residue-class table and basic indices");
    spectrum->add_option("-n,--order", n, "Symmetry order")->required();
    spectrum->add_option("--bound", bound, "Largest basic index listed")->capture_default_str();

    auto* series = app.add_subcommand("series", "First nonzero terms of the Dirichlet series");
    series->add_option("-n,--order", n, "Symmetry order")->required();
    series->add_option("-k,--count", count, "Number of nonzero terms")->capture_default_str();

    auto* cnt = app.add_subcommand("count", "Number of CSMs of a given index");
    cnt->add_option("-n,--order", n, "Symmetry order")->required();
    cnt->add_option("-m,--index", m, "Index")->required()->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "List coincidence rotations up to an index");
    enumerate->add_option("-n,--order", n, "Symmetry order")->required();
    enumerate->add_option("--bound", bound, "Largest index")->capture_default_str();
    enumerate->add_flag("--angles", angles, "Also report rotation angles");

    auto* oracle = app.add_subcommand("oracle", "Compare sigma with a brute-force lattice index");
    oracle->add_option("word", path, "Word JSON file")->required();

    unsigned n_gon = 0;
    std::optional<double> psi;
    std::size_t samples = 0;
    auto* accept = app.add_subcommand("accept", "Window acceptance factor");
    accept->add_option("--n-gon", n_gon, "Window polygon order (default 8, or the word's n)");
    auto* psi_opt = accept->add_option("--psi", psi, "Internal-space angle in radians");
    auto* wf_opt = accept->add_option("--word-file", path, "Word JSON file (n = 8 or 12)");
    psi_opt->excludes(wf_opt);
    accept->add_option("--samples", samples, "Compare formula and clipping on seeded random angles");

    auto* n23 = app.add_subcommand("n23", "The class-number-three order n = 23");
    n23->require_subcommand(1);
    std::uint64_t p = 0;
    auto* n23c = n23->add_subcommand("classify", "P1/P2 classification of a prime");
    n23c->add_option("-p,--prime", p, "Prime")->required();
    auto* n23i = n23->add_subcommand("index", "Index test and counts");
    n23i->add_option("-m,--index", m, "Index")->required()->check(CLI::PositiveNumber);
    auto* n23r = n23->add_subcommand("reflections", "Reflection indices of a non-principal module");
    n23r->add_option("-k,--count", count, "Number of indices")->capture_default_str();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("csm");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    try {
        if (*spectrum) return cmd_spectrum(n, bound, g, out, err);
        if (*series) return cmd_series(n, count, g, out, err);
        if (*cnt) return cmd_count(n, m, g, out, err);
        if (*enumerate) return cmd_enumerate(n, bound, angles, g, out, err);
        if (*oracle) return cmd_oracle(path, g, out);
        if (*accept) return cmd_accept(n_gon, psi, path, samples, g, out);
        if (*n23c) return cmd_n23_classify(p, g, out);
        if (*n23i) return cmd_n23_index(m, g, out);
        if (*n23r) return cmd_n23_reflections(count, g, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(exit_code_for(e.code()));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal_mismatch);
    }
    return static_cast<int>(ExitCode::usage);
}

}  // namespace csm
