#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lipcoh/group.hpp"

namespace lipcoh {

/**
 * Scenario description: a named recipe plus parameters, radii and a seed.
 * Parsed from the flat key-value config format (see README) or instantiated
 * from the builtin registry.
 */
struct Scenario {
    std::string name;
    std::string recipe;
    std::map<std::string, std::string> params;
    int radius = 3;
    int res_radius = 3;
    std::uint64_t seed = 1;
    std::uint64_t ball_cap = kDefaultBallCap;
    std::map<std::string, std::string> expected;

    static Scenario from_config(std::istream& in);
    static Scenario from_config_file(const std::string& path);

    std::string param(const std::string& key, const std::string& fallback) const;
    long long param_int(const std::string& key, long long fallback) const;
};

struct CheckRecord {
    std::string id;
    bool pass = false;
    std::string value;
    std::string expected;
};

struct Report {
    std::string scenario;
    std::string recipe;
    std::uint64_t seed = 0;
    int radius = 0;
    int res_radius = 0;
    std::string generic_point; // environment fingerprint
    std::vector<CheckRecord> checks;

    bool ok() const;
    void add(std::string id, bool pass, std::string value, std::string expected = "");
    std::string to_jsonl() const; // one record per check, fixed key order
    std::string to_csv(bool header) const;
};

struct BuiltinInfo {
    std::string name;
    std::string description;
    std::string anchor; // the identity or computation the scenario certifies
};

/// static registry of builtin scenarios
const std::vector<BuiltinInfo>& list_scenarios();
Scenario builtin_scenario(const std::string& name);
bool is_builtin(const std::string& name);

/// run one scenario; deterministic given (seed, radii).  Genericity
/// violations trigger a seeded re-pick of the support point, at most 16
/// times, after which GenericityExhausted escapes.
Report run_scenario(const Scenario& s);

/// rerun the scenario's truncated-module computations at radius and
/// radius + 1; passes iff they agree (both values are always recorded)
Report stability_check(const Scenario& s);

/// run many scenarios on a worker pool; reports come back sorted by name
std::vector<Report> run_scenarios(const std::vector<Scenario>& list, int workers);

std::string render_jsonl(const std::vector<Report>& reports);
std::string render_csv(const std::vector<Report>& reports);

} // namespace lipcoh
