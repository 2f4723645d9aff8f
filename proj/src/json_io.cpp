#include "nichols/json_io.hpp"

#include <numeric>
#include <ostream>

namespace nichols {

namespace {

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

unsigned require_order(const json& j) {
    if (!j.contains("order")) throw std::invalid_argument("missing key \"order\"");
    return j.at("order").get<unsigned>();
}

}  // namespace

json cyclo_to_json(const CycloNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(json::array({integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
    return json{{"order", x.field().order()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const json& j) {
    const CycloField& f = CycloField::get(require_order(j));
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != f.degree())
        throw std::invalid_argument("\"coeffs\" must list phi(M) [num, den] pairs");
    std::vector<Rat> cs(f.degree());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& pair = arr.at(i);
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("coefficient must be a [num, den] pair");
        Rat r(integer_from_json(pair.at(0)), integer_from_json(pair.at(1)));
        r.canonicalize();
        cs[i] = std::move(r);
    }
    return CycloNum(f, std::move(cs));
}

json root_to_json(const RootExpr& r) {
    return json{{"order", r.order}, {"exp", r.exp}, {"sign", r.sign}};
}

RootExpr root_from_json(const json& j) {
    return RootExpr(require_order(j), j.at("exp").get<long>(), j.value("sign", 1));
}

json braiding_to_json(const MonomialBraiding& c) {
    json entries = json::array();
    for (unsigned i = 0; i < c.dim(); ++i)
        for (unsigned jj = 0; jj < c.dim(); ++jj) {
            json coeff;
            if (auto r = as_root_expr(c.coeff(i, jj)))
                coeff = root_to_json(*r);
            else
                coeff = cyclo_to_json(c.coeff(i, jj));
            entries.push_back(json{{"i", i + 1},
                                   {"j", jj + 1},
                                   {"si", c.sigma(i, jj) + 1},
                                   {"tj", c.tau(i, jj) + 1},
                                   {"coeff", std::move(coeff)}});
        }
    return json{{"dim", c.dim()}, {"order", c.field().order()}, {"entries", entries}};
}

MonomialBraiding braiding_from_json(const json& j) {
    const unsigned dim = j.at("dim").get<unsigned>();
    const CycloField& f = CycloField::get(require_order(j));
    MonomialBraiding c(dim, f);
    const auto& entries = j.at("entries");
    if (!entries.is_array()) throw std::invalid_argument("\"entries\" must be an array");
    std::vector<bool> seen(std::size_t(dim) * dim, false);
    for (const auto& e : entries) {
        unsigned i = e.at("i").get<unsigned>(), jj = e.at("j").get<unsigned>();
        unsigned si = e.at("si").get<unsigned>(), tj = e.at("tj").get<unsigned>();
        if (i < 1 || i > dim || jj < 1 || jj > dim || si < 1 || si > dim || tj < 1 || tj > dim)
            throw std::invalid_argument("entry index out of range (indices are 1-based)");
        const auto& cj = e.at("coeff");
        CycloNum v;
        if (cj.is_object() && cj.contains("exp")) {
            RootExpr r = root_from_json(cj);
            if (f.order() % r.order != 0)
                throw std::invalid_argument("coefficient root order must divide the braiding order");
            v = r.to_num(f);
        } else {
            v = cyclo_from_json(cj);
            if (&v.field() != &f) {
                if (f.order() % v.field().order() != 0)
                    throw std::invalid_argument(
                        "coefficient field order must divide the braiding order");
                v = v.embed_into(f);
            }
        }
        c.set(i - 1, jj - 1, si - 1, tj - 1, std::move(v));
        seen[std::size_t(i - 1) * dim + (jj - 1)] = true;
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("braiding entries must cover every (i, j) pair");
    return c;
}

json rack_to_json(const Rack& r) {
    json table = json::array();
    for (const auto& row : r.op) table.push_back(row);
    return json{{"size", r.size}, {"table", table}};
}

Rack rack_from_json(const json& j) {
    const unsigned n = j.at("size").get<unsigned>();
    std::vector<std::vector<std::uint16_t>> t;
    for (const auto& row : j.at("table")) t.push_back(row.get<std::vector<std::uint16_t>>());
    if (t.size() != n) throw std::invalid_argument("rack table must have \"size\" rows");
    return Rack(n, std::move(t));
}

json solution_to_json(const SetSolution& s) {
    json sig = json::array(), tau = json::array();
    for (unsigned i = 0; i < s.size; ++i) {
        json srow = json::array(), trow = json::array();
        for (unsigned jj = 0; jj < s.size; ++jj) {
            srow.push_back(s.sigma[i][jj] + 1);
            trow.push_back(s.tau[i][jj] + 1);
        }
        sig.push_back(std::move(srow));
        tau.push_back(std::move(trow));
    }
    return json{{"size", s.size}, {"sigma", sig}, {"tau", tau}};
}

SetSolution solution_from_json(const json& j) {
    const unsigned m = j.at("size").get<unsigned>();
    auto read = [m](const json& rows, const char* key) {
        std::vector<std::vector<std::uint16_t>> t;
        for (const auto& row : rows) {
            std::vector<std::uint16_t> r;
            for (const auto& v : row) {
                unsigned u = v.get<unsigned>();
                if (u < 1 || u > m)
                    throw std::invalid_argument(std::string(key) +
                                                " values must lie in 1..size");
                r.push_back(static_cast<std::uint16_t>(u - 1));
            }
            t.push_back(std::move(r));
        }
        return t;
    };
    return SetSolution(m, read(j.at("sigma"), "sigma"), read(j.at("tau"), "tau"));
}

json report_to_json(const ScanReport& rep) {
    const GradedDims& g = rep.graded;
    json stats = json::array();
    for (const auto& s : rep.per_degree)
        stats.push_back(json{{"degree", s.degree},
                             {"space_dim", s.space_dim},
                             {"nnz", s.nnz},
                             {"rank", s.rank},
                             {"seconds", s.seconds}});
    return json{{"dims", g.dims},
                {"total", g.finite ? json(g.total) : json(nullptr)},
                {"top_degree", g.finite ? json(g.top_degree) : json(nullptr)},
                {"verdict", g.finite ? "finite" : "undetermined"},
                {"degrees_computed", g.degrees_computed},
                {"budget_exceeded", rep.budget_exceeded},
                {"stats", stats}};
}

json verdict_to_json(const FamilyVerdict& v) {
    json j{{"rule", v.rule}};
    switch (v.kind) {
        case FamilyVerdict::Kind::finite:
            j["verdict"] = "finite";
            j["total"] = v.total;
            if (!v.type_name.empty()) j["type"] = v.type_name;
            break;
        case FamilyVerdict::Kind::infinite:
            j["verdict"] = "infinite";
            break;
        case FamilyVerdict::Kind::open:
            j["verdict"] = "open";
            break;
    }
    return j;
}

RootExpr parse_root_literal(const std::string& text) {
    std::string t = text;
    int sign = 1;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (!t.empty() && t[0] == '-') {
        sign = -1;
        t = t.substr(1);
    }
    if (t == "1") return RootExpr(1, 0, sign);
    if (t.empty() || t[0] != 'z')
        throw std::invalid_argument("bad root literal \"" + text +
                                    "\" (expected 1, -1, zM, zM^k or -zM^k)");
    std::size_t caret = t.find('^');
    std::string mpart = t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long exp = 1;
    if (caret != std::string::npos) exp = std::stol(t.substr(caret + 1));
    unsigned order = static_cast<unsigned>(std::stoul(mpart));
    return RootExpr(order, exp, sign);
}

namespace {

CycloNum coefficient_from_json(const json& j, const CycloField& f) {
    if (j.is_string()) return parse_root_literal(j.get<std::string>()).to_num(f);
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (v == 1) return CycloNum::one(f);
        if (v == -1) return -CycloNum::one(f);
        throw std::invalid_argument("numeric coefficients must be 1 or -1; use root literals");
    }
    if (j.is_object() && j.contains("exp")) {
        RootExpr r = root_from_json(j);
        if (f.order() % r.order != 0)
            throw std::invalid_argument("coefficient root order must divide the working order");
        return r.to_num(f);
    }
    return cyclo_from_json(j).embed_into(f);
}

unsigned coefficient_order(const json& j) {
    if (j.is_string()) return parse_root_literal(j.get<std::string>()).order;
    if (j.is_number_integer()) return 1;
    return j.at("order").get<unsigned>();
}

}  // namespace

json descriptor_to_json(const FamilyDescriptor& d) {
    json params;
    if (const auto* v = std::get_if<VAbeParams>(&d.params)) {
        params = json{{"a", cyclo_to_json(v->a)}, {"b", cyclo_to_json(v->b)},
                      {"e", cyclo_to_json(v->e)}};
    } else if (const auto* k = std::get_if<KParams>(&d.params)) {
        params = json{{"N", k->N}, {"n", k->n}, {"j", k->j},      {"k", k->k},
                      {"p", k->p}, {"s", k->s}, {"mu", k->mu},    {"lambda", k->lambda}};
    } else if (const auto* nn = std::get_if<NParams>(&d.params)) {
        params = json{{"N", nn->N}, {"n", nn->n}, {"k", nn->k},   {"p", nn->p},
                      {"q", nn->q}, {"s", nn->s}, {"mu", nn->mu}, {"lambda", nn->lambda}};
    } else if (const auto* n = std::get_if<unsigned>(&d.params)) {
        params = json{{"n", *n}};
    }
    return json{{"family", d.family}, {"params", params}};
}

FamilyDescriptor descriptor_from_json(const json& j) {
    FamilyDescriptor d;
    d.family = j.at("family").get<std::string>();
    const json params = j.value("params", json::object());
    if (d.family == "Vabe") {
        unsigned order = 1;
        for (const char* key : {"a", "b", "e"}) {
            if (!params.contains(key))
                throw std::invalid_argument(std::string("Vabe needs parameter \"") + key + "\"");
            order = std::lcm(order, coefficient_order(params.at(key)));
        }
        const CycloField& f = CycloField::get(order);
        d.params = VAbeParams{coefficient_from_json(params.at("a"), f),
                              coefficient_from_json(params.at("b"), f),
                              coefficient_from_json(params.at("e"), f)};
    } else if (d.family == "K") {
        KParams k;
        k.N = params.value("N", 1u);
        k.n = params.at("n").get<unsigned>();
        k.j = params.value("j", 2);
        k.k = params.value("k", 0u);
        k.p = params.value("p", 0);
        k.s = params.value("s", 1u);
        k.mu = params.value("mu", 1);
        k.lambda = params.value("lambda", (k.j % 2 == 0) ? 1 : -1);
        d.params = k;
    } else if (d.family == "N") {
        NParams n;
        n.N = params.value("N", 1u);
        n.n = params.at("n").get<unsigned>();
        n.k = params.value("k", 0u);
        n.p = params.value("p", 0);
        n.q = params.value("q", 0);
        n.s = params.value("s", 1u);
        n.mu = params.value("mu", 1);
        n.lambda = params.value("lambda", 1);
        d.params = n;
    } else if (d.family == "L" || d.family == "I") {
        d.params = params.at("n").get<unsigned>();
    } else {
        throw std::invalid_argument("unknown family tag: " + d.family);
    }
    return d;
}

void dump_matrix(std::ostream& os, const SparseMatrix& m) {
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j])
            os << json{{"r", r}, {"c", j}, {"v", cyclo_to_json(v)}}.dump() << "\n";
}

}  // namespace nichols
