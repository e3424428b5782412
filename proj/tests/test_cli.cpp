#include "doctest.h"
#include "support.hpp"

#include "koszul/report.hpp"

using namespace koszul;

namespace {

DocumentError parse_error(const std::string& text) {
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e;
    }
    FAIL("document was accepted");
    throw std::logic_error("unreachable");
}

const char* kGood = R"({
  "name": "t",
  "generators": [
    {"symbol": "x", "degree": 0},
    {"symbol": "y"}
  ],
  "relations": [
    {"constant": "1/2", "linear": {"x": -3}, "quadratic": [["x", "y", "1"], ["y", "x", -1]]}
  ]
})";

}  // namespace

TEST_CASE("documents parse into presentations") {
    PresentationDocument doc = parse_document(kGood);
    CHECK(doc.name == "t");
    CHECK(doc.mode == Mode::associative);
    REQUIRE(doc.relations.size() == 1);
    CHECK(doc.relations[0].constant == Rational(1, 2));
    CHECK(doc.relations[0].linear == SparseVec{{0, -3}});
    CHECK(doc.relations[0].quadratic == SparseVec{{1, 1}, {2, -1}});
}

TEST_CASE("round trip through JSON text") {
    for (const auto& name : support::all_fixtures()) {
        PresentationDocument a = support::fixture(name);
        PresentationDocument b = parse_document(to_json_text(a));
        CHECK(to_json_text(a) == to_json_text(b));
        CHECK(b.mode == a.mode);
    }
}

TEST_CASE("errors name the line and the field") {
    DocumentError e = parse_error(R"({
  "name": "t",
  "generators": [{"symbol": "x"}],
  "relations": [
    {"quadratic": [["x", "x", 0.5]]}
  ]
})");
    CHECK(e.line() == 5);
    CHECK(e.field() == "relations[0].quadratic[0][2]");
    CHECK(std::string(e.what()).find("floating-point") != std::string::npos);

    DocumentError u = parse_error(R"({"name": "t", "generators": [{"symbol": "x"}],
 "relations": [{"linear": {"q": 1}}]})");
    CHECK(u.line() == 2);
    CHECK(std::string(u.what()).find("undeclared symbol 'q'") != std::string::npos);

    DocumentError syntax = parse_error("{\n \"name\": \"t\",\n \"generators\": [\n}");
    CHECK(syntax.line() == 4);

    CHECK(parse_error(R"({"name": "t", "generators": [{"symbol": "x"}], "extra": 1})").field() == "extra");
    CHECK(parse_error(R"({"name": "t", "generators": [{"symbol": "x", "degree": -1}]})").field() ==
          "generators[0].degree");
    CHECK(parse_error(R"({"name": "t", "mode": "commutative", "generators": [{"symbol": "x", "degree": 1}]})")
              .field() == "generators[0].degree");
    CHECK(parse_error(R"({"name": "t", "generators": [{"symbol": "x"}, {"symbol": "x"}]})").field() ==
          "generators[1].symbol");
    CHECK(parse_error(R"({"name": "t", "generators": [{"symbol": "x"}], "relations": [{"constant": "1/0"}]})")
              .field() == "relations[0].constant");
}

TEST_CASE("commutative documents fold xy and yx together") {
    PresentationDocument d = parse_document(R"({"name": "c", "mode": "commutative",
      "generators": [{"symbol": "x"}, {"symbol": "y"}],
      "relations": [{"quadratic": [["y", "x", 1], ["x", "y", 1]]}]})");
    CHECK(d.relations[0].quadratic == SparseVec{{1, 2}});
    CHECK_THROWS_AS(commutative_form(support::fixture("weyl")), UsageError);
}

TEST_CASE("run: every command passes on a representative fixture") {
    RunOptions opt;
    opt.max_weight = 3;
    opt.truncate = 4;
    opt.n_max = 2;
    opt.bounds = {3, 0, 2};
    for (const auto& cmd : command_names()) {
        CAPTURE(cmd);
        const std::string doc = (cmd == "lie" || cmd == "uc-compare") ? "laurent" : "ug-nonabelian";
        RunOptions o = opt;
        if (cmd == "uc-compare") o.n_max = 3;
        Report r = run(cmd, support::fixture(doc), o);
        CHECK(r.all_pass());
        CHECK(r.command == cmd);
    }
}

TEST_CASE("run is deterministic and leaves out wall time by default") {
    RunOptions opt;
    opt.truncate = 4;
    Report a = run("resolve", support::fixture("weyl"), opt);
    Report b = run("resolve", support::fixture("weyl"), opt);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.text() == b.text());
    CHECK(a.to_json().dump().find("wall") == std::string::npos);
    CHECK(a.to_json(true).dump().find("wall") != std::string::npos);
}

TEST_CASE("usage errors") {
    RunOptions opt;
    CHECK_THROWS_AS(run("no-such-command", support::fixture("weyl"), opt), UsageError);
    CHECK_THROWS_AS(run("lie", support::fixture("weyl"), opt), UsageError);
    CHECK_THROWS_AS(parse_bounds("4:0"), UsageError);
    CyclicBounds b = parse_bounds("5:1:3");
    CHECK(b.max_weight == 5);
    CHECK(b.n_min == 1);
    CHECK(b.n_max == 3);
}

TEST_CASE("a failed mathematical check is a failed report, not an exception") {
    PresentationDocument doc;
    doc.name = "jacobi";
    QlcPresentation p = support::jacobi_violating();
    doc.generators = p.generators;
    doc.relations = p.relations;
    Report r = run("validate", doc, RunOptions{});
    CHECK_FALSE(r.all_pass());
    Report ax = run("axioms", doc, RunOptions{});
    CHECK_FALSE(ax.all_pass());
}
