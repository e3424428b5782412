#pragma once

#include "koszul/lie.hpp"
#include "koszul/presentation.hpp"

#include <map>
#include <string>

namespace koszul {

enum class Mode { associative, commutative };

/// Parsed presentation document. For commutative documents a quadratic entry x_a x_b is stored
/// at min(a,b)*d + max(a,b).
struct PresentationDocument {
    std::string name;
    Mode mode = Mode::associative;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
};

/// Carries the 1-based line of the offending value (0 if unknown) and a field path such as
/// relations[1].quadratic[0].
class DocumentError : public Error {
public:
    DocumentError(int line, std::string field, const std::string& what);
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

/// Incompatible command and document, e.g. a Lie computation on an associative presentation.
class UsageError : public Error {
public:
    using Error::Error;
};

/// JSON object with name, mode (associative | commutative, default associative), generators
/// [{symbol, degree}] and relations [{constant, linear: {symbol: r}, quadratic: [[a, b, r], …]}].
/// Rationals are "p/q" strings or integers.
PresentationDocument parse_document(const std::string& text);
PresentationDocument load_document(const std::string& path);
std::string to_json_text(const PresentationDocument& doc);

/// The associative presentation; commutative documents go through associative_presentation.
QlcPresentation associative_form(const PresentationDocument& doc);
/// Throws UsageError for associative documents.
CommutativePresentation commutative_form(const PresentationDocument& doc);

/// 1-based line of each value, keyed by field path; "" is the root.
std::map<std::string, int> field_lines(const std::string& json_text);

}  // namespace koszul
