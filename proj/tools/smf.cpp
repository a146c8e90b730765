// smf: exact decompositions of super symmetric algebras and the bounded
// super multiplicity-free check, over a representation-diagram DSL.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "supermf/cache.hpp"
#include "supermf/char_engine.hpp"
#include "supermf/diagram.hpp"
#include "supermf/dsl.hpp"
#include "supermf/json_io.hpp"
#include "supermf/universal.hpp"
#include "supermf/verify.hpp"

namespace {

using namespace supermf;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotMf = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliFactor {
    GroupType type;
    bool spin_std = false;
    Chirality chirality = Chirality::Full;
};

CliFactor parse_factor_token(const std::string& tok) {
    auto num_from = [&](std::size_t at) {
        if (at >= tok.size()) throw BadInput("missing rank in group token '" + tok + "'");
        std::size_t end = at;
        while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
        if (end == at) throw BadInput("missing rank in group token '" + tok + "'");
        return std::pair<int, std::size_t>(std::stoi(tok.substr(at, end - at)), end);
    };
    CliFactor f;
    try {
        if (tok == "G2") {
            f.type = make_group(Family::G2, 2);
        } else if (tok == "E6") {
            f.type = make_group(Family::E6, 6);
        } else if (tok == "E7") {
            f.type = make_group(Family::E7, 7);
        } else if (tok.rfind("Spin", 0) == 0) {
            auto [m, end] = num_from(4);
            bool minus = end < tok.size() && tok[end] == '-';
            if (end + (minus ? 1 : 0) != tok.size()) throw BadInput("bad group token '" + tok + "'");
            if (m % 2 == 1) {
                if (m < 3) throw BadInput("Spin(m) needs m >= 3");
                f.type = make_group(Family::B, (m - 1) / 2);
                f.chirality = Chirality::Full;
            } else {
                if (m < 6) throw BadInput("Spin(2n) needs n >= 3");
                f.type = make_group(Family::D, m / 2);
                f.chirality = minus ? Chirality::Minus : Chirality::Plus;
            }
            f.spin_std = true;
        } else if (tok.rfind("SL", 0) == 0) {
            auto [n, end] = num_from(2);
            if (end != tok.size() || n < 2) throw BadInput("bad group token '" + tok + "'");
            f.type = make_group(Family::A, n - 1);
        } else if (tok.rfind("SO", 0) == 0) {
            auto [m, end] = num_from(2);
            if (end != tok.size()) throw BadInput("bad group token '" + tok + "'");
            if (m % 2 == 1) {
                if (m < 3) throw BadInput("SO(m) needs m >= 3");
                f.type = make_group(Family::B, (m - 1) / 2);
            } else {
                if (m < 6) throw BadInput("SO(2n) needs n >= 3");
                f.type = make_group(Family::D, m / 2);
            }
        } else if (tok.rfind("Sp", 0) == 0) {
            auto [m, end] = num_from(2);
            if (end != tok.size() || m < 2 || m % 2 != 0)
                throw BadInput("bad group token '" + tok + "'");
            f.type = make_group(Family::C, m / 2);
        } else {
            throw BadInput("unknown group token '" + tok + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<CliFactor> parse_group(const std::string& text) {
    std::vector<CliFactor> out;
    for (const auto& tok : split(text, 'x')) out.push_back(parse_factor_token(tok));
    if (out.empty()) throw BadInput("empty group");
    return out;
}

LabelFlavor flavor_of(const GroupType& g) {
    switch (g.family) {
        case Family::A: return LabelFlavor::Gl;
        case Family::C: return LabelFlavor::Sp;
        case Family::B:
        case Family::D: return LabelFlavor::So;
        default: throw BadInput("partition labels apply to classical factors only");
    }
}

WeightVec parse_factor_weight(const CliFactor& f, const std::string& tok) {
    try {
        if (tok == "std") {
            if (f.spin_std) return spin_label(f.type, f.chirality);
            if (f.type.family == Family::A || f.type.family == Family::B ||
                f.type.family == Family::C || f.type.family == Family::D)
                return partition_to_weight(f.type, Partition{1}, flavor_of(f.type));
            WeightVec w(static_cast<std::size_t>(f.type.rank), 0);
            w[0] = 1;
            return w;
        }
        if (tok == "triv") return WeightVec(static_cast<std::size_t>(f.type.rank), 0);
        if (!tok.empty() && tok.front() == '[' && tok.back() == ']') {
            WeightVec w;
            for (const auto& p : split(tok.substr(1, tok.size() - 2), ','))
                w.push_back(std::stoi(p));
            if (static_cast<int>(w.size()) != f.type.rank)
                throw BadInput("weight length " + std::to_string(w.size()) + " != rank " +
                               std::to_string(f.type.rank));
            for (int v : w)
                if (v < 0) throw BadInput("dominant weights have nonnegative coordinates");
            return w;
        }
        if (tok.rfind("part(", 0) == 0 && tok.back() == ')') {
            std::vector<int> parts;
            for (const auto& p : split(tok.substr(5, tok.size() - 6), ','))
                parts.push_back(std::stoi(p));
            return partition_to_weight(f.type, Partition(std::move(parts)), flavor_of(f.type));
        }
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    throw BadInput("bad weight token '" + tok + "' (want std, triv, [..] or part(..))");
}

WeightVec parse_weight(const std::vector<CliFactor>& factors, const std::string& text) {
    auto toks = split(text, '*');
    if (toks.size() != factors.size())
        throw BadInput("weight has " + std::to_string(toks.size()) + " factors, group has " +
                       std::to_string(factors.size()));
    WeightVec w;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        WeightVec part = parse_factor_weight(factors[i], toks[i]);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

ProductGroup product_of(const std::vector<CliFactor>& factors) {
    std::vector<GroupType> types;
    for (const auto& f : factors) types.push_back(f.type);
    return ProductGroup(std::move(types));
}

void emit_char(const FormalChar& c, const std::string& format) {
    if (format == "json")
        std::cout << to_json(c).dump(2) << "\n";
    else
        std::cout << to_string(c) << "\n";
}

RepDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open diagram file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact super-symmetric-algebra decompositions and the bounded super-MF check"};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("SMF_CACHE_DIR")) cache_dir = env;
    bool no_cache = false;
    int jobs = 1;
    std::string format = "text";
    app.add_option("--cache-dir", cache_dir, "persistent decomposition cache directory");
    app.add_flag("--no-cache", no_cache, "disable the persistent cache");
    app.add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* dec = app.add_subcommand("decompose", "n-th symmetric/exterior power of an irreducible");
    std::string dec_kind, dec_group, dec_weight;
    int dec_n = 0;
    dec->add_option("kind", dec_kind)->required()->check(CLI::IsMember({"sym", "ext"}));
    dec->add_option("group", dec_group)->required();
    dec->add_option("weight", dec_weight)->required();
    dec->add_option("n", dec_n)->required()->check(CLI::NonNegativeNumber);

    auto* ten = app.add_subcommand("tensor", "tensor product of two irreducibles");
    std::string ten_group, ten_w1, ten_w2;
    ten->add_option("group", ten_group)->required();
    ten->add_option("w1", ten_w1)->required();
    ten->add_option("w2", ten_w2)->required();

    auto* bra = app.add_subcommand("branch", "restriction of an SL_m irreducible to SO_m or Sp_m");
    int bra_m = 0;
    std::string bra_target, bra_partition;
    bra->add_option("m", bra_m)->required()->check(CLI::PositiveNumber);
    bra->add_option("target", bra_target)->required()->check(CLI::IsMember({"so", "sp"}));
    bra->add_option("partition", bra_partition)->required();

    auto* lrc = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    std::string lr_l, lr_m, lr_n;
    lrc->add_option("lambda", lr_l)->required();
    lrc->add_option("mu", lr_m)->required();
    lrc->add_option("nu", lr_n)->required();

    auto* chk = app.add_subcommand("check-mf", "bounded super multiplicity-free check");
    std::string chk_file;
    int chk_degree = 0;
    bool chk_witness = false;
    chk->add_option("diagram-file", chk_file)->required();
    chk->add_option("--max-degree", chk_degree)->required()->check(CLI::PositiveNumber);
    chk->add_flag("--witness", chk_witness, "print the witness component on failure");

    auto* sub = app.add_subcommand("subdiagrams", "canonical texts of all subdiagrams");
    std::string sub_file;
    sub->add_option("diagram-file", sub_file)->required();

    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string ver_suite, ver_report;
    bool ver_all = false;
    ver->add_option("--suite", ver_suite, "suite name");
    ver->add_flag("--all", ver_all, "run every suite");
    ver->add_option("--report", ver_report, "write a JSON report to this path");

    // global flags may follow the subcommand arguments
    for (auto* s : {dec, ten, bra, lrc, chk, sub, ver}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (!no_cache && !cache_dir.empty())
            set_disk_cache(std::make_shared<DiskCache>(cache_dir));

        if (dec->parsed()) {
            auto factors = parse_group(dec_group);
            ProductGroup g = product_of(factors);
            FormalChar rep(g);
            rep.add(parse_weight(factors, dec_weight), 1);
            FormalChar out = dec_kind == "sym" ? sym_power(rep, dec_n) : ext_power(rep, dec_n);
            emit_char(out, format);
            return kExitOk;
        }
        if (ten->parsed()) {
            auto factors = parse_group(ten_group);
            ProductGroup g = product_of(factors);
            emit_char(tensor(g, parse_weight(factors, ten_w1), parse_weight(factors, ten_w2)),
                      format);
            return kExitOk;
        }
        if (bra->parsed()) {
            Partition lam;
            try {
                lam = parse_partition(bra_partition);
            } catch (const std::invalid_argument& e) {
                throw BadInput(e.what());
            }
            if (bra_target == "sp" && bra_m % 2 != 0)
                throw BadInput("symplectic restriction requires even m");
            if (lam.length() > bra_m) throw BadInput("partition too long for rank");
            emit_char(restrict_classical(bra_m,
                                         bra_target == "sp" ? ClassicalTarget::Sp
                                                            : ClassicalTarget::So,
                                         lam),
                      format);
            return kExitOk;
        }
        if (lrc->parsed()) {
            try {
                std::cout << lr_coeff(parse_partition(lr_l), parse_partition(lr_m),
                                      parse_partition(lr_n))
                          << "\n";
            } catch (const std::invalid_argument& e) {
                throw BadInput(e.what());
            }
            return kExitOk;
        }
        if (chk->parsed()) {
            RepDiagram d = load_diagram(chk_file);
            MFVerdict v = is_super_mf(d, chk_degree, jobs);
            if (format == "json") {
                std::cout << to_json(v, d.group()).dump(2) << "\n";
            } else {
                if (v.mf) {
                    std::cout << "mf_up_to_bound " << v.bound << "\n";
                } else {
                    std::cout << "not_mf bound " << v.bound << " witness idx (";
                    for (std::size_t i = 0; i < v.witness->index.size(); ++i)
                        std::cout << (i ? "," : "") << v.witness->index[i];
                    std::cout << ") label " << to_string(v.witness->label) << " multiplicity "
                              << v.witness->multiplicity << "\n";
                }
            }
            if (!v.mf && chk_witness) {
                FormalChar comp = graded_component(d, v.witness->index);
                emit_char(comp, format);
            }
            return v.mf ? kExitOk : kExitNotMf;
        }
        if (sub->parsed()) {
            RepDiagram d = load_diagram(sub_file);
            if (format == "json") {
                json out = json::array();
                for (const auto& piece : subdiagrams(d)) out.push_back(render_diagram(piece));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& piece : subdiagrams(d)) std::cout << render_diagram(piece) << "\n";
            }
            return kExitOk;
        }
        if (ver->parsed()) {
            std::vector<std::string> names;
            if (ver_all)
                names = suite_names();
            else if (!ver_suite.empty())
                names.push_back(ver_suite);
            else
                throw BadInput("verify needs --suite <name> or --all");
            bool all_pass = true;
            json reports = json::array();
            for (const auto& name : names) {
                SuiteReport rep = run_suite(name, jobs);
                all_pass &= rep.all_pass;
                reports.push_back(rep.to_json());
                if (format == "json")
                    std::cout << rep.to_json().dump(2) << "\n";
                else
                    std::cout << rep.to_text();
            }
            if (!ver_report.empty()) {
                std::ofstream out(ver_report);
                out << reports.dump(2) << "\n";
            }
            return all_pass ? kExitOk : kExitError;
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DslError& e) {
        std::cerr << "error: " << e.what() << " (bytes " << e.span().byte_start << ".."
                  << e.span().byte_end << ")\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
