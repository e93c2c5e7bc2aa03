#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace fragqsp {

// Flat key=value configuration. Values stay strings until a runner asks
// for them; unknown keys and malformed values raise ConfigError.
class ExperimentConfig {
public:
    static ExperimentConfig from_file(const std::string& path);
    // "key=value" lines; '#' starts a comment.
    static ExperimentConfig from_text(const std::string& text);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // phi_0,phi_1,... in radians, or a named sequence: "trivial" | "bb1".
    std::vector<double> phase_sequence(const std::string& spec) const;

    // FNV-1a over the sorted canonical "key=value\n" serialization.
    std::uint64_t hash() const;
    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

// Runners behind the CLI subcommands. Each writes CSV (JSON for compare)
// to `out` and throws ConfigError / CapacityError / VerificationError on
// the corresponding failure.
void run_fragment(const ExperimentConfig& cfg, std::ostream& out);
void run_response(const ExperimentConfig& cfg, std::ostream& out);
void run_transition(const ExperimentConfig& cfg, std::ostream& out);
void run_compare(const ExperimentConfig& cfg, std::ostream& out);
void run_stroboscopic(const ExperimentConfig& cfg, std::ostream& out);
void run_ensemble(const ExperimentConfig& cfg, std::ostream& out);

// Fixed %.15g rendering so identical runs emit identical bytes.
std::string format_double(double x);

} // namespace fragqsp
