#include "koszul/document.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace koszul {

using nlohmann::json;

DocumentError::DocumentError(int line, std::string field, const std::string& what)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
            (field.empty() ? std::string() : field + ": ") + what),
      line_(line),
      field_(std::move(field)) {}

namespace {

// Walks text already accepted by the JSON parser, so no error handling is needed here.
class LineIndex {
public:
    explicit LineIndex(const std::string& t) : t_(t) { value(""); }
    std::map<std::string, int> take() { return std::move(out_); }

private:
    void ws() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) {
            if (t_[i_] == '\n') ++line_;
            ++i_;
        }
    }
    std::string str() {
        ++i_;
        std::string s;
        while (t_[i_] != '"') {
            if (t_[i_] == '\\') s += t_[i_++];
            s += t_[i_++];
        }
        ++i_;
        return s;
    }
    void value(const std::string& path) {
        ws();
        out_[path] = line_;
        char c = t_[i_];
        if (c == '{' || c == '[') {
            const bool obj = c == '{';
            ++i_;
            ws();
            if (t_[i_] == (obj ? '}' : ']')) {
                ++i_;
                return;
            }
            for (int k = 0;; ++k) {
                ws();
                std::string child;
                if (obj) {
                    std::string key = str();
                    ws();
                    ++i_;  // ':'
                    child = path.empty() ? key : path + "." + key;
                } else {
                    child = path + "[" + std::to_string(k) + "]";
                }
                value(child);
                ws();
                if (t_[i_++] != ',') return;
            }
        }
        if (c == '"') {
            str();
            return;
        }
        while (i_ < t_.size() && std::string(",]} \t\r\n").find(t_[i_]) == std::string::npos) ++i_;
    }

    const std::string& t_;
    std::size_t i_ = 0;
    int line_ = 1;
    std::map<std::string, int> out_;
};

class Reader {
public:
    explicit Reader(const std::string& text) : lines_(field_lines(text)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        auto it = lines_.find(field);
        throw DocumentError(it == lines_.end() ? 0 : it->second, field, what);
    }

    Rational rational(const json& v, const std::string& field) const {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_number()) fail(field, "floating-point value; write rationals as \"p/q\"");
        if (!v.is_string()) fail(field, "expected a rational such as \"3/4\"");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    }

    const json& member(const json& obj, const std::string& key, const std::string& path) const {
        auto it = obj.find(key);
        if (it == obj.end()) fail(path, "missing field '" + key + "'");
        return *it;
    }

private:
    std::map<std::string, int> lines_;
};

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string item(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

}  // namespace

std::map<std::string, int> field_lines(const std::string& json_text) { return LineIndex(json_text).take(); }

PresentationDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
        throw DocumentError(line, "", std::string("syntax error: ") + e.what());
    }
    Reader rd(text);
    if (!root.is_object()) rd.fail("", "document must be a JSON object");
    for (const auto& [key, _] : root.items())
        if (key != "name" && key != "mode" && key != "generators" && key != "relations")
            rd.fail(key, "unknown field");

    PresentationDocument doc;
    const json& name = rd.member(root, "name", "");
    if (!name.is_string()) rd.fail("name", "expected a string");
    doc.name = name.get<std::string>();

    if (root.contains("mode")) {
        const json& m = root["mode"];
        if (m == "associative") doc.mode = Mode::associative;
        else if (m == "commutative") doc.mode = Mode::commutative;
        else rd.fail("mode", "expected \"associative\" or \"commutative\"");
    }

    const json& gens = rd.member(root, "generators", "");
    if (!gens.is_array() || gens.empty()) rd.fail("generators", "expected a non-empty array");
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string path = item("generators", k);
        const json& g = gens[k];
        if (!g.is_object()) rd.fail(path, "expected {\"symbol\": …, \"degree\": …}");
        const json& sym = rd.member(g, "symbol", path);
        if (!sym.is_string() || sym.get<std::string>().empty()) rd.fail(child(path, "symbol"), "expected a non-empty string");
        Generator gen{sym.get<std::string>(), 0};
        if (g.contains("degree")) {
            const json& dg = g["degree"];
            if (!dg.is_number_integer()) rd.fail(child(path, "degree"), "expected an integer");
            gen.degree = dg.get<int>();
            if (gen.degree < 0) rd.fail(child(path, "degree"), "degrees must be non-negative");
        }
        if (doc.mode == Mode::commutative && gen.degree != 0)
            rd.fail(child(path, "degree"), "commutative documents need degree 0 generators");
        if (!index.emplace(gen.symbol, static_cast<int>(k)).second) rd.fail(child(path, "symbol"), "duplicate symbol");
        doc.generators.push_back(std::move(gen));
    }
    const int d = static_cast<int>(doc.generators.size());
    auto symbol = [&](const json& v, const std::string& path) {
        if (!v.is_string()) rd.fail(path, "expected a generator symbol");
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) rd.fail(path, "undeclared symbol '" + v.get<std::string>() + "'");
        return it->second;
    };

    const json rels = root.contains("relations") ? root["relations"] : json::array();
    if (!rels.is_array()) rd.fail("relations", "expected an array");
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const std::string path = item("relations", k);
        const json& r = rels[k];
        if (!r.is_object()) rd.fail(path, "expected an object");
        Relation rel;
        for (const auto& [key, v] : r.items()) {
            const std::string f = child(path, key);
            if (key == "constant") {
                rel.constant = rd.rational(v, f);
            } else if (key == "linear") {
                if (!v.is_object()) rd.fail(f, "expected {symbol: rational}");
                SparseAccumulator acc;
                for (const auto& [s, c] : v.items()) acc.add(symbol(json(s), f), rd.rational(c, child(f, s)));
                rel.linear = acc.take();
            } else if (key == "quadratic") {
                if (!v.is_array()) rd.fail(f, "expected [[a, b, rational], …]");
                SparseAccumulator acc;
                for (std::size_t t = 0; t < v.size(); ++t) {
                    const std::string ft = item(f, t);
                    const json& term = v[t];
                    if (!term.is_array() || term.size() != 3) rd.fail(ft, "expected [a, b, rational]");
                    int a = symbol(term[0], item(ft, 0)), b = symbol(term[1], item(ft, 1));
                    Rational c = rd.rational(term[2], item(ft, 2));
                    if (doc.mode == Mode::commutative) acc.add(std::min(a, b) * d + std::max(a, b), c);
                    else acc.add(a * d + b, c);
                }
                rel.quadratic = acc.take();
            } else {
                rd.fail(f, "unknown field");
            }
        }
        doc.relations.push_back(std::move(rel));
    }
    return doc;
}

PresentationDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError(0, "", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_document(os.str());
}

std::string to_json_text(const PresentationDocument& doc) {
    nlohmann::ordered_json root;
    root["name"] = doc.name;
    root["mode"] = doc.mode == Mode::associative ? "associative" : "commutative";
    root["generators"] = nlohmann::ordered_json::array();
    for (const auto& g : doc.generators) root["generators"].push_back({{"symbol", g.symbol}, {"degree", g.degree}});
    root["relations"] = nlohmann::ordered_json::array();
    const int d = static_cast<int>(doc.generators.size());
    for (const auto& r : doc.relations) {
        nlohmann::ordered_json o;
        o["constant"] = to_string(r.constant);
        o["linear"] = nlohmann::ordered_json::object();
        for (const auto& [a, c] : r.linear) o["linear"][doc.generators[a].symbol] = to_string(c);
        o["quadratic"] = nlohmann::ordered_json::array();
        for (const auto& [ab, c] : r.quadratic)
            o["quadratic"].push_back({doc.generators[ab / d].symbol, doc.generators[ab % d].symbol, to_string(c)});
        root["relations"].push_back(std::move(o));
    }
    return root.dump(2) + "\n";
}

QlcPresentation associative_form(const PresentationDocument& doc) {
    if (doc.mode == Mode::commutative) return associative_presentation(commutative_form(doc));
    return {doc.name, doc.generators, doc.relations};
}

CommutativePresentation commutative_form(const PresentationDocument& doc) {
    if (doc.mode != Mode::commutative) throw UsageError(doc.name + " is an associative presentation");
    return {doc.name, doc.generators, doc.relations};
}

}  // namespace koszul
