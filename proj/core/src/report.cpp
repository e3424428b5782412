#include "koszul/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace koszul {

using ojson = nlohmann::ordered_json;

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

bool Report::all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.status == Status::fail; });
}

void Report::add(const std::string& id, bool pass, const std::string& payload) {
    checks.push_back({id, pass ? Status::pass : Status::fail, payload});
}

void Report::skip(const std::string& id, const std::string& reason) { checks.push_back({id, Status::skipped, reason}); }

void Report::add(const AxiomReport& r, const std::string& prefix) {
    for (const auto& c : r.checks) add(prefix + c.id, c.pass, c.detail);
}

std::string Report::text(bool timing) const {
    std::ostringstream os;
    os << "qlc " << command << " on " << document << "\n";
    if (!parameters.empty()) {
        os << "parameters:";
        for (const auto& [k, v] : parameters.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        os << "\n";
    }
    for (const auto& [k, v] : data.items()) os << "  " << k << ": " << v.dump() << "\n";
    int counts[3] = {0, 0, 0};
    for (const auto& c : checks) {
        ++counts[static_cast<int>(c.status)];
        const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
        os << "  " << tag << "  " << c.id;
        if (!c.payload.empty()) os << "  [" << c.payload << "]";
        os << "\n";
    }
    os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped";
    if (timing) os << " in " << wall_seconds << " s";
    os << "\n";
    return os.str();
}

ojson Report::to_json(bool timing) const {
    ojson j;
    j["command"] = command;
    j["document"] = document;
    j["parameters"] = parameters;
    j["data"] = data;
    j["checks"] = ojson::array();
    for (const auto& c : checks) j["checks"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"payload", c.payload}});
    j["all_pass"] = all_pass();
    if (timing) j["wall_seconds"] = wall_seconds;
    return j;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"validate", "split",  "dual", "axioms", "koszul-cert", "cobar", "resolve",
                                                   "hh",       "hc",     "ft-compare", "lie", "uc-compare"};
    return names;
}

CyclicBounds parse_bounds(const std::string& s) {
    CyclicBounds b;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> b.max_weight >> c1 >> b.n_min >> c2 >> b.n_max) || c1 != ':' || c2 != ':' || !in.eof())
        throw UsageError("--bounds expects W:nmin:nmax, got '" + s + "'");
    if (b.max_weight < 1 || b.n_min > b.n_max) throw UsageError("--bounds: need W ≥ 1 and nmin ≤ nmax");
    return b;
}

namespace {

std::function<std::string(int)> relation_space_names(const QlcPresentation& p) {
    return [&p](int i) {
        const int d = p.dim();
        if (i == 0) return std::string("1");
        if (i <= d) return p.generators[i - 1].symbol;
        int ab = i - 1 - d;
        return p.word_label({ab / d, ab % d});
    };
}

std::function<std::string(int)> word_names(const QlcSplit& s, int n) {
    return [&s, n](int w) { return s.word_label(word_at(w, n, s.d)); };
}

ojson int_map(const std::map<int, int>& m) {
    ojson o = ojson::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = v;
    return o;
}

void cmd_validate(Report& rep, const QlcPresentation& p) {
    try {
        check_normalized(p);
        rep.add("normalized", true, std::to_string(p.relations.size()) + " relations");
    } catch (const NormalizationError& e) {
        rep.add("normalized", false, e.what());
        return;
    }
    ValidationReport v = validate(p);
    rep.data["relation_rank"] = v.relation_rank;
    rep.data["overlap_dim"] = v.overlap_dim;
    auto names = relation_space_names(p);
    rep.add("minimality", v.minimality, v.minimality ? "R ∩ (k⊕V) = 0" : "witness " + render(v.minimality_witness, names));
    rep.add("weak consistency", v.weak_consistency,
            v.weak_consistency ? "overlap dim " + std::to_string(v.overlap_dim)
                               : "witness " + render(v.weak_witness, names));
}

void cmd_split(Report& rep, const QlcPresentation& p) {
    QlcSplit s = split(p);
    ojson rows = ojson::array();
    for (std::size_t k = 0; k < s.qR.basis().size(); ++k) {
        rows.push_back({{"q", render(s.qR.basis()[k], word_names(s, 2))},
                        {"phi", render(s.phi[k], [&](int a) { return s.symbols[a]; })},
                        {"theta", to_string(s.theta[k])}});
    }
    rep.data["relations"] = rows;
    std::vector<SparseVec> given;
    for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) given.push_back(p.relation_vector(i));
    Subspace a = Subspace::span(p.ambient_dim(), given), b = Subspace::span(p.ambient_dim(), reconstruct(s));
    rep.add("graph reconstructs R", a == b, "dim " + std::to_string(a.dim()));
}

void cmd_dual(Report& rep, const QlcSplit& s, int W) {
    CurvedCoalgebra c(s, W, false);
    ojson dims = ojson::array(), basis = ojson::object();
    for (int n = 0; n <= W; ++n) {
        dims.push_back(c.dim(n));
        ojson labels = ojson::array();
        for (int k = 0; k < c.dim(n); ++k) labels.push_back(c.label(n, k));
        basis[std::to_string(n)] = labels;
    }
    rep.data["dims"] = dims;
    rep.data["basis"] = basis;
    const int w = c.stability_failure();
    rep.add("stability", w < 0,
            w < 0 ? "d(C⁽ⁿ⁾) ⊆ C⁽ⁿ⁻¹⁾ for n ≤ " + std::to_string(W)
                  : "weight " + std::to_string(w) + " escapes: " + render(c.stability_witness(), word_names(s, w - 1)));
}

void cmd_axioms(Report& rep, const QlcSplit& s, int W) {
    CurvedCoalgebra c(s, W, false);
    rep.add(verify_axioms(c), "coalgebra: ");
    rep.add(verify_curved_algebra(dual_curved_algebra(c)), "dual algebra: ");
    CoalgebraData cd = CoalgebraData::from(c);
    FilteredAlgebra fa(s, std::max(W, 2));
    rep.add(verify_mc(cd, fa).checks, "twisting morphism: ");
    rep.add(convolution_check(cd, fa, 5), "convolution: ");
}

void cmd_cert(Report& rep, const QlcSplit& s, int W) {
    KoszulCertificate cert = koszulness_certificate(s, W);
    ojson rows = ojson::array();
    for (const auto& e : cert.entries) {
        rows.push_back({{"weight", e.weight}, {"homology", e.homology}, {"qa_dim", e.qa_dim}});
        std::ostringstream h;
        for (std::size_t i = 0; i < e.homology.size(); ++i) h << (i ? " " : "") << e.homology[i];
        rep.add("weight " + std::to_string(e.weight), e.pass,
                "homology by position [" + h.str() + "], dim qA = " + std::to_string(e.qa_dim));
    }
    rep.data["weights"] = rows;
    rep.add("PBW", cert.pbw, cert.pbw ? "dim F≤n A = Σ dim qA⁽ᵐ⁾" : "dimension mismatch");
}

void cmd_cobar(Report& rep, const QlcSplit& s, int N) {
    CurvedCoalgebra c(s, N);
    CoalgebraData cd = CoalgebraData::from(c);
    CobarComplex cb = cobar(cd, N, -1, false);
    rep.data["cobar_dim"] = cb.words.size();
    rep.add(cb.checks, "cobar: ");
    BarComplex bb = bar(dual_curved_algebra(c), N, -1, false);
    rep.data["bar_dim"] = bb.words.size();
    rep.add(bb.checks, "bar: ");
    if (N >= 2) {
        QuasiIsoReport q = gkappa_quasi_iso(s, N);
        rep.data["cobar_homology"] = int_map(q.cobar_homology);
        rep.data["algebra_dim"] = q.algebra_dim;
        rep.add(q.checks, "g_κ: ");
    } else {
        rep.skip("g_κ", "needs N ≥ 2");
    }
}

void cmd_resolve(Report& rep, const QlcSplit& s, int N) {
    ResolutionReport r = resolution_check(s, N);
    rep.data["homology"] = r.homology;
    rep.data["algebra_dim"] = r.algebra_dim;
    rep.add(r.checks);
}

void cmd_hh(Report& rep, const QlcSplit& s, const RunOptions& opt) {
    HochschildResult h = hochschild(s, opt.truncate, opt.method, opt.max_degree);
    ojson rows = ojson::array();
    for (const auto& d : h.degrees)
        rows.push_back({{"degree", d.degree}, {"stable", d.stable_dim}, {"raw", d.raw_dim}, {"raw_lower", d.raw_dim_lower}});
    rep.data["degrees"] = rows;
}

void cmd_hc(Report& rep, const QlcSplit& s, const RunOptions& opt) {
    const int W = opt.bounds.max_weight;
    CurvedAlgebra a;
    if (opt.algebra == "dual") a = dual_curved_algebra(CurvedCoalgebra(s, W));
    else if (opt.algebra == "quadratic") a = CurvedAlgebra::from_graded(FilteredAlgebra(s.quadratic_part(), W));
    else throw UsageError("--algebra must be dual or quadratic");
    rep.data["algebra_dim"] = a.dim();
    HcResult r = hc(opt.kind, a, opt.bounds);
    ojson dims = ojson::object();
    for (const auto& [n, d] : r.dims) dims[std::to_string(n)] = d;
    rep.data["dims"] = dims;
    rep.add(r.checks);
    rep.add(chain_map_checks(a, std::min(5, W)), "chain maps: ");
}

void cmd_ft(Report& rep, const QlcSplit& s, const RunOptions& opt) {
    FtReport f = ft_compare(s, opt.truncate, opt.n_max);
    ojson rows = ojson::array();
    for (const auto& r : f.rows)
        rows.push_back({{"n", r.n},
                        {"R_natural", r.hc_r_natural},
                        {"X_plus", r.hc_x_plus},
                        {"dual_minus", r.hc_dual_minus},
                        {"dual_plus", r.hc_dual_plus},
                        {"dual_per", r.hc_dual_per}});
    rep.data["rows"] = rows;
    rep.data["per_vanishes"] = f.per_vanishes;
    rep.add(f.checks);
}

void cmd_lie(Report& rep, const CommutativePresentation& cp, int W) {
    QlcSplit s = split(associative_presentation(cp));
    LieDual ld = lie_dual(s, W);
    rep.data["dims"] = std::vector<int>(ld.dims.begin() + 1, ld.dims.end());
    rep.data["basis"] = ld.coalgebra.labels;
    if (W < 2) {
        rep.add(ld.checks);
        rep.skip("resolution", "needs W ≥ 2");
        return;
    }
    CResolutionReport cr = c_resolution_check(cp, W);
    rep.data["cobar_homology"] = int_map(cr.homology);
    rep.data["algebra_dim"] = cr.algebra_dim;
    rep.data["h1_stable"] = cr.h1_stable;
    rep.add(cr.checks);
}

void cmd_uc(Report& rep, const CommutativePresentation& cp, int n_max) {
    UcReport u = uc_comparison(cp, n_max);
    rep.data["assoc_dims"] = u.assoc_dims;
    rep.data["lie_dims"] = std::vector<int>(u.lie_dims.begin() + 1, u.lie_dims.end());
    rep.data["co_pbw_dims"] = u.pbw_dims;
    rep.add(u.checks);
}

}  // namespace

Report run(const std::string& command, const PresentationDocument& doc, const RunOptions& opt) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) throw UsageError("unknown command '" + command + "'");
    const bool lie_side = command == "lie" || command == "uc-compare";
    if (lie_side && doc.mode != Mode::commutative)
        throw UsageError(command + " needs a commutative document; " + doc.name + " is associative");

    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.command = command;
    rep.document = doc.name;
    auto& P = rep.parameters;
    P["mode"] = doc.mode == Mode::associative ? "associative" : "commutative";
    if (command == "dual" || command == "axioms" || command == "koszul-cert" || command == "cobar" || command == "lie")
        P["max_weight"] = opt.max_weight;
    if (command == "resolve" || command == "hh" || command == "ft-compare") P["truncate"] = opt.truncate;
    if (command == "hh") {
        P["method"] = opt.method == HochschildMethod::koszul ? "koszul" : "bar";
        P["max_degree"] = opt.max_degree;
    }
    if (command == "hc") {
        P["kind"] = to_string(opt.kind);
        P["bounds"] = std::to_string(opt.bounds.max_weight) + ":" + std::to_string(opt.bounds.n_min) + ":" +
                      std::to_string(opt.bounds.n_max);
        P["algebra"] = opt.algebra;
    }
    if (command == "ft-compare" || command == "uc-compare") P["n_max"] = opt.n_max;

    try {
        if (command == "lie") {
            cmd_lie(rep, commutative_form(doc), opt.max_weight);
        } else if (command == "uc-compare") {
            cmd_uc(rep, commutative_form(doc), opt.n_max);
        } else {
            QlcPresentation p = associative_form(doc);
            if (command == "validate") {
                cmd_validate(rep, p);
            } else if (command == "split") {
                cmd_split(rep, p);
            } else {
                QlcSplit s = split(p);
                if (command == "dual") cmd_dual(rep, s, opt.max_weight);
                else if (command == "axioms") cmd_axioms(rep, s, opt.max_weight);
                else if (command == "koszul-cert") cmd_cert(rep, s, opt.max_weight);
                else if (command == "cobar") cmd_cobar(rep, s, opt.max_weight);
                else if (command == "resolve") cmd_resolve(rep, s, opt.truncate);
                else if (command == "hh") cmd_hh(rep, s, opt);
                else if (command == "hc") cmd_hc(rep, s, opt);
                else if (command == "ft-compare") cmd_ft(rep, s, opt);
            }
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const Error& e) {
        rep.add(command + " completed", false, e.what());
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace koszul
