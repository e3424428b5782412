#pragma once

#include "koszul/cyclic.hpp"
#include "koszul/document.hpp"
#include "koszul/koszul_complex.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace koszul {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct ReportCheck {
    std::string id;
    Status status = Status::pass;
    std::string payload;  // dims on pass, witness on failure
};

struct Report {
    std::string command;
    std::string document;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    std::vector<ReportCheck> checks;
    double wall_seconds = 0;

    bool all_pass() const;
    void add(const std::string& id, bool pass, const std::string& payload);
    void skip(const std::string& id, const std::string& reason);
    void add(const AxiomReport& r, const std::string& prefix = "");

    /// Wall time is left out unless asked for, so equal inputs give byte-identical output.
    std::string text(bool timing = false) const;
    nlohmann::ordered_json to_json(bool timing = false) const;
};

struct RunOptions {
    int max_weight = 4;
    int truncate = 6;
    HochschildMethod method = HochschildMethod::koszul;
    int max_degree = 2;
    CyclicKind kind = CyclicKind::plus;
    CyclicBounds bounds;
    int n_max = 5;
    /// For hc: "dual" uses (qA)! truncated at bounds.max_weight, "quadratic" uses qA.
    std::string algebra = "dual";
};

/// Command names accepted by run, in help order.
const std::vector<std::string>& command_names();

/// Mathematical failures (not-a-complex, stability, minimality) become failed checks; a bad
/// command or an incompatible document throws UsageError.
Report run(const std::string& command, const PresentationDocument& doc, const RunOptions& opt);

/// "W:nmin:nmax"
CyclicBounds parse_bounds(const std::string& s);

}  // namespace koszul
