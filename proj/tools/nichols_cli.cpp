// Command-line front end: graded Nichols dimensions, case-table
// verification sweeps, closed-form verdicts and rack/solution utilities.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 budget exceeded, 4 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "nichols/json_io.hpp"

namespace fs = std::filesystem;
using namespace nichols;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

// -------------------------------------------------------------------------
// family parameter flags shared by dims/classify/verify
// -------------------------------------------------------------------------

struct FamilyFlags {
    std::string family;
    std::string a, b, e;
    unsigned N = 1, n = 1, k = 0, s = 1;
    int j = 0, p = 0, q = 0, mu = 1, lambda = 2;  // sentinels resolved below

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family, "family tag: Vabe, K, N, L, I");
        cmd->add_option("--a", a, "V_abe parameter a (root literal, e.g. z3^2)");
        cmd->add_option("--b", b, "V_abe parameter b");
        cmd->add_option("--e", e, "V_abe parameter e");
        cmd->add_option("--N", N, "family parameter N");
        cmd->add_option("--n", n, "family parameter n");
        cmd->add_option("--j", j, "K-family parameter j");
        cmd->add_option("--k", k, "family parameter k");
        cmd->add_option("--p", p, "family parameter p");
        cmd->add_option("--q", q, "N-family parameter q");
        cmd->add_option("--s", s, "family parameter s");
        cmd->add_option("--mu", mu, "mu = +1 or -1");
        cmd->add_option("--lambda", lambda, "lambda = +1 or -1");
    }

    FamilyDescriptor descriptor() const {
        json params;
        if (family == "Vabe") {
            if (a.empty() || b.empty() || e.empty())
                throw ParseError("Vabe needs --a, --b and --e root literals");
            params = json{{"a", a}, {"b", b}, {"e", e}};
        } else if (family == "K") {
            int lam = (lambda == 2) ? ((j == 0 || j % 2 == 0) ? 1 : -1) : lambda;
            int jj = (j == 0) ? (lam == 1 ? 2 : 1) : j;
            params = json{{"N", N}, {"n", n}, {"j", jj}, {"k", k},
                          {"p", p}, {"s", s}, {"mu", mu}, {"lambda", lam}};
        } else if (family == "N") {
            params = json{{"N", N}, {"n", n}, {"k", k},   {"p", p},
                          {"q", q}, {"s", s}, {"mu", mu}, {"lambda", lambda == 2 ? 1 : lambda}};
        } else if (family == "L" || family == "I") {
            params = json{{"n", n}};
        } else {
            throw ParseError("unknown or missing --family (use Vabe, K, N, L or I)");
        }
        return descriptor_from_json(json{{"family", family}, {"params", params}});
    }
};

MonomialBraiding braiding_from_descriptor(const FamilyDescriptor& d) {
    if (const auto* v = std::get_if<VAbeParams>(&d.params)) return v_abe(*v);
    if (const auto* k = std::get_if<KParams>(&d.params)) return k_braiding(*k);
    if (const auto* n = std::get_if<NParams>(&d.params)) return n_braiding(*n);
    throw ParseError("family \"" + d.family +
                     "\" carries no braiding coefficients; use the rack subcommand");
}

// -------------------------------------------------------------------------
// result cache: canonical input JSON + cap, FNV-1a key, atomic writes
// -------------------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_dir_from(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("NICHOLS_CACHE")) return env;
    return {};
}

std::optional<std::string> cache_lookup(const std::string& dir, std::uint64_t key) {
    if (dir.empty()) return std::nullopt;
    char name[40];
    std::snprintf(name, sizeof name, "dims-%016llx.json", static_cast<unsigned long long>(key));
    fs::path p = fs::path(dir) / name;
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cache_store(const std::string& dir, std::uint64_t key, const std::string& payload) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    char name[40];
    std::snprintf(name, sizeof name, "dims-%016llx.json", static_cast<unsigned long long>(key));
    fs::path final_path = fs::path(dir) / name;
    fs::path tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << payload;
    }
    fs::rename(tmp, final_path, ec);  // atomic on POSIX; losers of a race agree anyway
    if (ec) fs::remove(tmp, ec);
}

// -------------------------------------------------------------------------
// dims
// -------------------------------------------------------------------------

int cmd_dims(const FamilyFlags& fam, const std::string& file, unsigned cap, double budget_secs,
             const std::string& cache_flag, bool table_mode, const std::string& out_path) {
    MonomialBraiding c = file.empty() ? braiding_from_descriptor(fam.descriptor())
                                      : braiding_from_json(load_json(file));
    json canonical = braiding_to_json(c);
    std::string dir = cache_dir_from(cache_flag);
    std::uint64_t key = fnv1a(json{{"cap", cap}, {"input", canonical}}.dump());
    if (auto hit = cache_lookup(dir, key)) {
        if (out_path.empty())
            std::cout << *hit;
        else
            std::ofstream(out_path) << *hit;
        return kExitOk;
    }

    ScanBudget budget;
    budget.seconds = budget_secs;
    ScanReport rep = finiteness_scan(c, cap, budget);
    json j = report_to_json(rep);
    std::string payload = j.dump(2) + "\n";
    if (!rep.budget_exceeded) cache_store(dir, key, payload);

    std::string text;
    if (table_mode) {
        std::ostringstream os;
        os << "degree  dim B^n\n";
        for (std::size_t n = 0; n < rep.graded.dims.size(); ++n)
            os << n << "       " << rep.graded.dims[n] << "\n";
        os << (rep.graded.finite ? "finite, total " + std::to_string(rep.graded.total)
                                 : "undetermined at cap")
           << "\n";
        text = os.str();
    } else {
        text = payload;
    }
    if (out_path.empty())
        std::cout << text;
    else
        std::ofstream(out_path) << text;
    if (rep.budget_exceeded) throw BudgetError("budget exceeded; partial report emitted");
    return kExitOk;
}

// -------------------------------------------------------------------------
// verify
// -------------------------------------------------------------------------

struct SweepStats {
    unsigned cases = 0, failed = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        ++failed;
        if (first_failure.empty()) first_failure = what;
    }
};

std::string k_tag(const KParams& p) {
    std::ostringstream os;
    os << "K(N=" << p.N << ",n=" << p.n << ",j=" << p.j << ",k=" << p.k << ",p=" << p.p
       << ",s=" << p.s << ",mu=" << p.mu << ",lambda=" << p.lambda << ")";
    return os.str();
}

std::string n_tag(const NParams& p) {
    std::ostringstream os;
    os << "N(N=" << p.N << ",n=" << p.n << ",k=" << p.k << ",p=" << p.p << ",q=" << p.q
       << ",s=" << p.s << ",mu=" << p.mu << ",lambda=" << p.lambda << ")";
    return os.str();
}

std::string triple(const std::array<unsigned, 3>& t) {
    return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
           std::to_string(t[2] + 1) + ")";
}

void verify_k_tuple(const KParams& p, SweepStats& st) {
    ++st.cases;
    auto c = k_braiding(p);
    if (auto t = braid_equation_violation(c)) {
        st.fail(k_tag(p) + ": braid equation fails at basis triple " + triple(*t));
        return;
    }
    if (auto t = cocycle_violation(c)) {
        st.fail(k_tag(p) + ": coefficient condition fails at " + triple(*t));
        return;
    }
    auto conj = twist_conjugate(c, k_twist(p));
    if (!conj.equal) {
        st.fail(k_tag(p) + ": tilde != bar under the family twist");
        return;
    }
    if (!(k_closed_form(p, TwistVariant::bar) == conj.bar)) {
        st.fail(k_tag(p) + ": closed-form bar table differs from the conjugated braiding");
        return;
    }
    if (!(k_closed_form(p, TwistVariant::tilde) == conj.tilde)) {
        st.fail(k_tag(p) + ": closed-form tilde table differs from the conjugated braiding");
        return;
    }
}

void verify_n_tuple(const NParams& p, SweepStats& st) {
    ++st.cases;
    auto c = n_braiding(p);
    if (auto t = braid_equation_violation(c)) {
        st.fail(n_tag(p) + ": braid equation fails at basis triple " + triple(*t));
        return;
    }
    if (auto t = cocycle_violation(c)) {
        st.fail(n_tag(p) + ": coefficient condition fails at " + triple(*t));
        return;
    }
    auto conj = twist_conjugate(c, n_twist(p));
    if (!conj.equal) {
        st.fail(n_tag(p) + ": tilde != bar under the family twist");
        return;
    }
    if (!(n_closed_form(p, TwistVariant::tilde) == conj.tilde)) {
        st.fail(n_tag(p) + ": closed-form tilde table differs from the conjugated braiding");
        return;
    }
    if (!(n_closed_form(p, TwistVariant::bar) == conj.bar)) {
        st.fail(n_tag(p) + ": closed-form bar table differs from the conjugated braiding");
        return;
    }
}

int finish_sweep(const SweepStats& st, const std::string& what) {
    if (st.failed == 0) {
        std::cout << "PASS " << what << ": " << st.cases << " case(s)\n";
        return kExitOk;
    }
    std::cout << "FAIL " << what << ": " << st.failed << " of " << st.cases
              << " case(s); first counterexample:\n  " << st.first_failure << "\n";
    return kExitVerifyFailed;
}

int cmd_verify(const std::string& target, const FamilyFlags& fam, const std::string& file,
               bool sweep_all, unsigned samples) {
    if (target == "k-lemmas") {
        SweepStats st;
        std::uint64_t rng = 0x9e3779b97f4a7c15ull;
        auto keep = [&rng, sweep_all]() {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            return sweep_all || (rng % 3 != 0);
        };
        for (int j : {1, 2, 3, 4})
            for (unsigned k = 0; k < fam.N; ++k)
                for (int p : {0, 1})
                    for (unsigned s = 1; s <= fam.N; ++s)
                        for (int mu : {1, -1}) {
                            if (st.cases >= samples && !sweep_all) break;
                            if (!keep()) continue;
                            verify_k_tuple(KParams{fam.N, fam.n, j, k, p, s, mu,
                                                   (j % 2 == 0) ? 1 : -1},
                                           st);
                        }
        return finish_sweep(st, "k-lemmas n=" + std::to_string(fam.n) +
                                    " N=" + std::to_string(fam.N));
    }
    if (target == "n-lemmas") {
        SweepStats st;
        for (unsigned k = 0; k < fam.N; ++k)
            for (int p : {0, 1})
                for (int q : {0, 1})
                    for (unsigned s = 1; s <= fam.N; ++s)
                        for (int mu : {1, -1})
                            for (int lam : {1, -1})
                                verify_n_tuple(NParams{fam.N, fam.n, k, p, q, s, mu, lam}, st);
        return finish_sweep(st, "n-lemmas n=" + std::to_string(fam.n) +
                                    " N=" + std::to_string(fam.N));
    }
    if (target == "l-rack" || target == "i-rack") {
        SweepStats st;
        ++st.cases;
        SetFamily f = (target == "l-rack") ? l_family(fam.n) : i_family(fam.n);
        unsigned m = f.solution.size;
        auto flags = solution_checks(f.solution);
        if (!flags.ybe) st.fail("solution fails the set-theoretic braid relation");
        if (!flags.nondegenerate) st.fail("solution is degenerate");
        if (!(conjugate_solution(f.solution, f.f) == rack_to_solution(dihedral_rack(m))))
            st.fail("conjugated solution differs from the dihedral rack solution D_" +
                    std::to_string(m));
        int rc = finish_sweep(st, target + " n=" + std::to_string(fam.n) + " (size " +
                                      std::to_string(m) + ")");
        json jf = json::array();
        for (auto v : f.f) jf.push_back(v + 1);
        std::cout << json{{"f", jf}}.dump() << "\n";
        return rc;
    }
    if (target == "braid" || target == "cocycle") {
        MonomialBraiding c = file.empty() ? braiding_from_descriptor(fam.descriptor())
                                          : braiding_from_json(load_json(file));
        auto viol = (target == "braid") ? braid_equation_violation(c) : cocycle_violation(c);
        if (!viol) {
            std::cout << "PASS " << target << "\n";
            return kExitOk;
        }
        std::cout << "FAIL " << target << " at basis triple " << triple(*viol) << "\n";
        return kExitVerifyFailed;
    }
    throw ParseError("unknown verify target: " + target);
}

// -------------------------------------------------------------------------
// classify / rack
// -------------------------------------------------------------------------

int cmd_classify(const FamilyFlags& fam, const std::string& file, const std::string& out_path) {
    FamilyDescriptor d = file.empty() ? fam.descriptor() : descriptor_from_json(load_json(file));
    FamilyVerdict v = classify(d);
    json j = verdict_to_json(v);
    j["family"] = d.family;
    emit(j, out_path);
    return kExitOk;
}

int cmd_rack(const std::string& action, const std::string& file, const std::string& file2,
             unsigned n, const std::string& family, const std::string& map_csv,
             const std::string& out_path) {
    if (action == "dihedral") {
        emit(rack_to_json(dihedral_rack(n)), out_path);
        return kExitOk;
    }
    if (action == "family") {
        SetFamily f = (family == "L")   ? l_family(n)
                      : (family == "I") ? i_family(n)
                                        : throw ParseError("rack family needs --family L or I");
        json jf = json::array();
        for (auto v : f.f) jf.push_back(v + 1);
        emit(json{{"solution", solution_to_json(f.solution)}, {"f", jf}}, out_path);
        return kExitOk;
    }
    if (action == "derive") {
        emit(rack_to_json(derived_rack(solution_from_json(load_json(file)))), out_path);
        return kExitOk;
    }
    if (action == "conjugate") {
        emit(solution_to_json(conjugate_by_T(solution_from_json(load_json(file)))), out_path);
        return kExitOk;
    }
    if (action == "solution") {
        emit(solution_to_json(rack_to_solution(rack_from_json(load_json(file)))), out_path);
        return kExitOk;
    }
    if (action == "iso") {
        Rack a = rack_from_json(load_json(file));
        Rack b = rack_from_json(load_json(file2));
        std::optional<std::vector<std::uint16_t>> f;
        if (!map_csv.empty()) {
            std::vector<std::uint16_t> m;
            std::stringstream ss(map_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                m.push_back(static_cast<std::uint16_t>(std::stoul(tok)));
            f = std::move(m);
        }
        auto found = rack_isomorphic(a, b, f);
        json j{{"isomorphic", found.has_value()}};
        if (found) j["map"] = *found;
        emit(j, out_path);
        return found ? kExitOk : kExitVerifyFailed;
    }
    throw ParseError("unknown rack action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact braided vector spaces, set-theoretic Yang-Baxter solutions and "
                 "graded Nichols-algebra dimensions"};
    app.require_subcommand(1);

    auto* dims = app.add_subcommand("dims", "graded dimensions via quantum-symmetrizer ranks");
    FamilyFlags dims_fam;
    dims_fam.add_to(dims);
    std::string dims_file, dims_cache, dims_out;
    unsigned dims_cap = 8;
    double dims_budget = 600.0;
    bool dims_table = false, dims_json_flag = false;
    dims->add_option("--file", dims_file, "braiding JSON file");
    dims->add_option("--cap", dims_cap, "maximum degree (default 8)");
    dims->add_option("--budget-secs", dims_budget, "time budget in seconds (default 600)");
    dims->add_option("--cache-dir", dims_cache, "result cache directory (env NICHOLS_CACHE)");
    dims->add_option("--out", dims_out, "write the report to this path");
    dims->add_flag("--table", dims_table, "aligned text table output");
    dims->add_flag("--json", dims_json_flag, "JSON output (default)");

    auto* verify = app.add_subcommand("verify", "re-prove case tables and conditions");
    FamilyFlags ver_fam;
    ver_fam.add_to(verify);
    std::string ver_target, ver_file, ver_sweep;
    unsigned ver_samples = 20;
    verify->add_option("target", ver_target,
                       "k-lemmas | n-lemmas | l-rack | i-rack | braid | cocycle")
        ->required();
    verify->add_option("--file", ver_file, "braiding JSON (braid/cocycle targets)");
    verify->add_option("--sweep", ver_sweep, "\"all\" sweeps every tuple in range");
    verify->add_option("--samples", ver_samples, "minimum sampled tuples (default 20)");

    auto* cls = app.add_subcommand("classify", "closed-form dimension verdict");
    FamilyFlags cls_fam;
    cls_fam.add_to(cls);
    std::string cls_file, cls_out;
    cls->add_option("--file", cls_file, "family descriptor JSON");
    cls->add_option("--out", cls_out, "write the verdict to this path");

    auto* rack = app.add_subcommand("rack", "rack and set-solution utilities");
    std::string rack_action, rack_file, rack_file2, rack_family, rack_map, rack_out;
    unsigned rack_n = 3;
    rack->add_option("action", rack_action,
                     "dihedral | family | derive | conjugate | solution | iso")
        ->required();
    rack->add_option("--file", rack_file, "input JSON (solution or rack)");
    rack->add_option("--file2", rack_file2, "second rack JSON (iso)");
    rack->add_option("--n", rack_n, "size parameter");
    rack->add_option("--family", rack_family, "L or I (family action)");
    rack->add_option("--map", rack_map, "candidate bijection, comma-separated 0-based images");
    rack->add_option("--out", rack_out, "write the result to this path");

    try {
        app.parse(argc, argv);
        if (dims->parsed())
            return cmd_dims(dims_fam, dims_file, dims_cap, dims_budget, dims_cache,
                            dims_table && !dims_json_flag, dims_out);
        if (verify->parsed())
            return cmd_verify(ver_target, ver_fam, ver_file, ver_sweep == "all", ver_samples);
        if (cls->parsed()) return cmd_classify(cls_fam, cls_file, cls_out);
        if (rack->parsed())
            return cmd_rack(rack_action, rack_file, rack_file2, rack_n, rack_family, rack_map,
                            rack_out);
        return kExitParse;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
