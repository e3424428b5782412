// One line per acceptance criterion; exit status is nonzero if any line fails.

#include "support.hpp"

#include "koszul/cyclic.hpp"
#include "koszul/lie.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace koszul;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << (note.tellp() > 0 ? "; " : "") << "failed: " << what;
        pass = pass && ok;
    }
    void require(const AxiomReport& r, const std::string& where) {
        for (const auto& c : r.checks)
            if (!c.pass) {
                require(false, where + " " + c.id + " (" + c.detail + ")");
                return;
            }
    }
};

std::vector<QlcSplit> all_fixture_splits() {
    std::vector<QlcSplit> out;
    for (const auto& n : support::all_fixtures()) out.push_back(support::fixture_split(n));
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Outcome coalgebra_axioms() {
    Outcome o;
    std::vector<QlcPresentation> ps;
    for (const char* n : {"weyl", "ug-nonabelian", "heisenberg-unital"}) ps.push_back(support::fixture_presentation(n));
    for (auto& p : support::random_valid_qlc(2024, 10)) ps.push_back(p);
    for (const auto& p : ps) {
        CurvedCoalgebra c(split(p), 4);
        o.require(verify_axioms(c), p.name);
    }
    o.note << ps.size() << " presentations at W = 4";
    return o;
}

Outcome cobar_and_bar() {
    Outcome o;
    int words = 0;
    for (const auto& s : all_fixture_splits()) {
        CurvedCoalgebra cc(s, 5);
        CobarComplex om = cobar(CoalgebraData::from(cc), 5, -1, false);
        o.require(om.checks, "cobar");
        BarComplex b = bar(dual_curved_algebra(cc), 5, -1, false);
        o.require(b.checks, "bar");
        words += om.words.size();
    }
    o.note << "9 fixtures at weight ≤ 5, " << words << " cobar words";
    return o;
}

Outcome maurer_cartan() {
    Outcome o;
    for (const auto& s : all_fixture_splits()) {
        McReport mc = verify_mc(CoalgebraData::from(CurvedCoalgebra(s, 4)), FilteredAlgebra(s, 4));
        o.require(mc.checks, "MC");
    }
    o.note << "9 fixtures through weight 4";
    return o;
}

Outcome resolutions() {
    Outcome o;
    struct Case {
        const char* name;
        int N, dim;
    };
    for (const Case& k : {Case{"weyl", 6, 28}, Case{"sym2", 5, 21}, Case{"ug-nonabelian", 4, 15}}) {
        ResolutionReport r = resolution_check(support::fixture_split(k.name), k.N);
        bool higher_zero = true;
        for (std::size_t i = 1; i < r.homology.size(); ++i) higher_zero = higher_zero && r.homology[i] == 0;
        o.require(!r.homology.empty() && r.homology[0] == k.dim && higher_zero,
                  std::string(k.name) + " homology " + join(r.homology));
        o.require(r.checks, k.name);
        o.note << k.name << " N=" << k.N << " H=(" << join(r.homology) << ") ";
    }
    return o;
}

Outcome pbw() {
    Outcome o;
    int certified = 0;
    for (const auto& name : support::all_fixtures()) {
        KoszulCertificate cert = koszulness_certificate(support::fixture_split(name), 6);
        if (!cert.pass()) continue;
        ++certified;
        o.require(cert.pbw, name + " PBW");
    }
    o.require(certified == 9, "certified " + std::to_string(certified) + " of 9");
    o.note << certified << " certified fixtures, N ≤ 6";
    return o;
}

std::vector<int> stable_dims(const HochschildResult& r) {
    std::vector<int> v;
    for (const auto& d : r.degrees) v.push_back(d.stable_dim);
    return v;
}

Outcome weyl_hh() {
    Outcome o;
    HochschildResult r = hochschild(support::fixture_split("weyl"), 8, HochschildMethod::koszul, 2);
    support::HomologyDims oracle = support::weyl_hh_oracle(8);
    o.require(stable_dims(r) == std::vector<int>{0, 0, 1}, "engine stable " + join(stable_dims(r)));
    o.require(oracle.stable == std::vector<int>{0, 0, 1}, "oracle stable " + join(oracle.stable));
    o.note << "engine (" << join(stable_dims(r)) << "), oracle (" << join(oracle.stable) << ")";
    return o;
}

Outcome ug_ce() {
    Outcome o;
    HochschildResult r = hochschild(support::fixture_split("ug-nonabelian"), 5, HochschildMethod::koszul, 2);
    support::HomologyDims ce = support::ce_ug_oracle(5);
    std::vector<int> raw;
    for (const auto& d : r.degrees) raw.push_back(d.raw_dim);
    o.require(raw == ce.raw, "raw " + join(raw) + " vs CE " + join(ce.raw));
    o.require(stable_dims(r) == ce.stable, "stable " + join(stable_dims(r)) + " vs CE " + join(ce.stable));
    o.note << "HH (" << join(stable_dims(r)) << ") = CE (" << join(ce.stable) << ") at N = 5";
    return o;
}

Outcome chain_maps() {
    Outcome o;
    std::vector<std::pair<std::string, CurvedAlgebra>> algebras{
        {"weyl dual", dual_curved_algebra(CurvedCoalgebra(support::fixture_split("weyl"), 3))},
        {"ug dual", dual_curved_algebra(CurvedCoalgebra(support::fixture_split("ug-nonabelian"), 3))},
        {"heisenberg dual", dual_curved_algebra(CurvedCoalgebra(support::fixture_split("heisenberg-unital"), 3))},
        {"dual numbers dual", dual_curved_algebra(CurvedCoalgebra(support::fixture_split("dualnumbers"), 4))},
        {"sym2 quadratic", CurvedAlgebra::from_graded(FilteredAlgebra(support::fixture_split("sym2"), 3))},
        {"k[x]/x³", CurvedAlgebra::truncated_polynomial(2)}};
    for (const auto& [name, a] : algebras) o.require(chain_map_checks(a, 5), name);
    for (int n = 1; n <= 5; ++n) o.require(operators(n, {0, 1}).checks, "operators");
    o.note << algebras.size() << " algebras (3 curved), arity ≤ 5";
    return o;
}

Outcome feigin_tsygan() {
    Outcome o;
    FtReport r = ft_compare(support::fixture_split("poly1"), 6, 5);
    std::vector<int> rn, dm;
    for (const auto& row : r.rows) {
        rn.push_back(row.hc_r_natural);
        dm.push_back(row.hc_dual_minus);
    }
    o.require(rn == std::vector<int>{6, 0, 0, 0, 0, 0}, "R♮ " + join(rn));
    o.require(rn == dm, "dual-minus " + join(dm));
    o.require(r.checks, "ft");
    o.note << "R♮ (" << join(rn) << ") = dual-minus (" << join(dm) << "), X⁺ iso and LES checked";
    return o;
}

Outcome x_plus_axioms() {
    Outcome o;
    for (const auto& name : support::all_fixtures()) {
        XPlusComplex x = x_plus(support::fixture_split(name), 4);
        for (const auto& c : x.checks.checks)
            if (c.id == "β∂̄ = 0" || c.id == "∂̄β = 0") o.require(c.pass, name + " " + c.id);
        o.require(x.checks, name);
    }
    o.note << "9 fixtures at (L, N) = (4, 4)";
    return o;
}

Outcome commutative_lie() {
    Outcome o;
    for (const char* name : {"laurent", "sym2-commutative"}) {
        UcReport r = uc_comparison(commutative_form(support::fixture(name)), 4);
        o.require(r.checks, name);
        o.note << name << " co-PBW (" << join(r.pbw_dims) << ") ";
    }
    CResolutionReport c = c_resolution_check(commutative_form(support::fixture("laurent")), 4);
    o.require(c.checks, "laurent resolution");
    o.note << "laurent H₀ = " << c.homology[0];
    return o;
}

Outcome negative_controls() {
    Outcome o;
    QlcPresentation p = support::find_non_koszul(1);
    KoszulCertificate cert = koszulness_certificate(split(p), 4);
    const int w = cert.failing_weight();
    o.require(!cert.pass() && w > 0, "non-Koszul presentation passed the certificate");
    if (w > 0) o.note << p.name << " fails at weight " << w << " with homology (" << join(cert.entries[w].homology) << "); ";

    CurvedCoalgebra c(split(support::jacobi_violating()), 4, false);
    AxiomReport ax = verify_axioms(c);
    bool caught = false;
    for (const auto& chk : ax.checks)
        if (chk.id == "lemma-cc2" && !chk.pass && chk.detail.rfind("witness", 0) == 0) {
            caught = true;
            o.note << "Jacobi violation: " << chk.detail;
        }
    o.require(caught, "Jacobi violation not caught");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"curved coalgebra axioms", coalgebra_axioms},
        {"cobar and bar identities", cobar_and_bar},
        {"Maurer–Cartan equation", maurer_cartan},
        {"Koszul resolution dimensions", resolutions},
        {"PBW cross-check", pbw},
        {"Hochschild homology of the Weyl algebra", weyl_hh},
        {"HH(U g) = CE homology", ug_ce},
        {"cyclic chain-map identities", chain_maps},
        {"Feigin–Tsygan comparison", feigin_tsygan},
        {"X⁺ identities", x_plus_axioms},
        {"commutative and Lie", commutative_lie},
        {"negative controls", negative_controls}};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << criteria[i].first << ": " << o.note.str() << " [" << std::fixed << std::setprecision(1) << secs
                  << " s]" << std::endl;
    }
    return all ? 0 : 1;
}
