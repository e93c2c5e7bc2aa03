#include "fragqsp/experiment.hpp"

#include "fragqsp/bdg.hpp"
#include "fragqsp/errors.hpp"
#include "fragqsp/observables.hpp"
#include "fragqsp/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace fragqsp {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "seed",     "n",        "J",        "h",        "tprime",
        "sequence", "cycles",   "burn_in",  "grid",     "capacity",
        "dense_max", "cheb_tol", "diag_ensemble",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as an integer");
    }
}

void check_keys(const ExperimentConfig& cfg) {
    for (const auto& [key, value] : cfg.entries())
        if (!known_keys().count(key))
            throw ConfigError("unknown config key '" + key + "'");
}

EvolveOptions evolve_options(const ExperimentConfig& cfg) {
    EvolveOptions o;
    o.dense_max = cfg.get_int("dense_max", o.dense_max);
    o.cheb_tol = cfg.get_double("cheb_tol", o.cheb_tol);
    if (o.dense_max < 1 || o.cheb_tol <= 0)
        throw ConfigError("dense_max must be >= 1 and cheb_tol > 0");
    return o;
}

std::size_t capacity_of(const ExperimentConfig& cfg) {
    const long long cap = cfg.get_int("capacity", static_cast<long long>(kDefaultCapacity));
    if (cap < 1) throw ConfigError("capacity must be positive");
    return static_cast<std::size_t>(cap);
}

struct CommonParams {
    double coupling_j;
    double field_h;
    double t_prime;
};

CommonParams common_params(const ExperimentConfig& cfg) {
    return {cfg.get_double("J", 1.0), cfg.get_double("h", 1.0),
            cfg.get_double("tprime", -std::numbers::pi / 2)};
}

void write_header(std::ostream& out, const ExperimentConfig& cfg, const char* subcommand) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(cfg.hash()));
    out << "# fragqsp " << kVersion << ' ' << subcommand << '\n';
    out << "# config " << hash << '\n';
}

const char* kind_name(RegionKind k) {
    switch (k) {
        case RegionKind::FrozenWall: return "frozen_wall";
        case RegionKind::Integrable: return "integrable";
        default: return "nonintegrable";
    }
}

// Named column for a sequence spec; numeric lists get positional names.
std::string column_name(const std::string& spec, std::size_t pos) {
    if (spec == "trivial" || spec == "bb1") return spec;
    return "custom" + std::to_string(pos + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string w;
    while (in >> w) parts.push_back(w);
    return parts;
}

int cell_count_of(const ExperimentConfig& cfg) {
    long long n = cfg.get_int("n", 0);
    if (n == 0 && cfg.has("seed"))
        n = static_cast<long long>(cfg.require_string("seed").size());
    if (n < 2 || n > 31 || n % 2 != 0)
        throw ConfigError("n (pseudospin cells) must be even and within [2, 31]");
    return static_cast<int>(n);
}

} // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        cfg.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw ConfigError("empty config key");
    kv_[key] = value;
}

bool ExperimentConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::string ExperimentConfig::require_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required config key '" + key + "'");
    return it->second;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : parse_double(key, it->second);
}

long long ExperimentConfig::get_int(const std::string& key, long long fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : parse_int(key, it->second);
}

bool ExperimentConfig::get_bool(const std::string& key, bool fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ConfigError("key '" + key + "': expected true/false");
}

std::vector<double> ExperimentConfig::phase_sequence(const std::string& spec) const {
    if (spec == "trivial") return {0.0, 0.0};
    if (spec == "bb1") return bb1_phases();
    std::vector<double> phases;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("sequence '" + spec + "': empty phase entry");
        phases.push_back(parse_double("sequence", item));
    }
    if (phases.empty())
        throw ConfigError("sequence '" + spec + "' is empty");
    return phases;
}

std::uint64_t ExperimentConfig::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    const auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [key, value] : kv_) {
        feed(key);
        feed("=");
        feed(value);
        feed("\n");
    }
    return h;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void run_fragment(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const PseudospinString seed = cfg.require_string("seed");
    const std::size_t capacity = capacity_of(cfg);

    const FragmentBasis basis = build_fragment(seed, capacity);
    const auto regions = partition_regions(seed);

    write_header(out, cfg, "fragment");
    out << "scope,cells,content,dim,n_total,dipole,n_even,n_odd,kind\n";
    const ConservedCharges c = basis.seed_charges;
    out << "full,1-" << seed.size() << ',' << seed << ',' << basis.dim() << ','
        << c.n_total << ',' << c.dipole << ',' << c.n_even << ',' << c.n_odd
        << ",fragment\n";
    for (const Region& r : regions) {
        const PseudospinString part = seed.substr(r.first - 1, r.size());
        const std::size_t dim =
            r.kind == RegionKind::FrozenWall ? 1 : build_fragment(part, capacity).dim();
        const ConservedCharges rc = charges(encode(part));
        out << "region," << r.first << '-' << r.last << ',' << part << ',' << dim << ','
            << rc.n_total << ',' << rc.dipole << ',' << rc.n_even << ',' << rc.n_odd
            << ',' << kind_name(r.kind) << '\n';
    }
}

void run_response(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const CommonParams p = common_params(cfg);
    const auto specs = split_ws(cfg.get_string("sequence", "trivial bb1"));
    if (specs.empty()) throw ConfigError("sequence list is empty");
    std::vector<std::vector<double>> sequences;
    for (const auto& s : specs) sequences.push_back(cfg.phase_sequence(s));

    const long long grid = cfg.get_int("grid", 601);
    if (grid < 0 || grid == 1)
        throw ConfigError("grid must be 0 (sector mode) or >= 2");

    write_header(out, cfg, "response");
    if (grid == 0) {
        const int n = cell_count_of(cfg);
        out << "lambda,x,a";
        for (std::size_t s = 0; s < specs.size(); ++s)
            out << ',' << column_name(specs[s], s);
        out << '\n';
        for (const BdgSector& sec : bdg_sectors(n, p.coupling_j, p.t_prime)) {
            out << sec.lambda << ',' << format_double(sec.lambda * std::numbers::pi / (n + 1))
                << ',' << format_double(sec.signal);
            for (const auto& seq : sequences)
                out << ',' << format_double(response(seq, sec.signal));
            out << '\n';
        }
    } else {
        out << "x,a";
        for (std::size_t s = 0; s < specs.size(); ++s)
            out << ',' << column_name(specs[s], s);
        out << '\n';
        for (long long g = 0; g < grid; ++g) {
            const double x = std::numbers::pi * static_cast<double>(g) /
                             static_cast<double>(grid - 1);
            const double a = std::cos(2.0 * p.coupling_j * std::cos(x) * p.t_prime);
            out << format_double(x) << ',' << format_double(a);
            for (const auto& seq : sequences)
                out << ',' << format_double(response(seq, a));
            out << '\n';
        }
    }
}

void run_transition(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const CommonParams p = common_params(cfg);
    const int n = cell_count_of(cfg);
    const auto phases = cfg.phase_sequence(cfg.get_string("sequence", "bb1"));

    write_header(out, cfg, "transition");
    out << "lambda,x,a,response,cumulative\n";
    double cumulative = 1.0;
    for (const BdgSector& sec : bdg_sectors(n, p.coupling_j, p.t_prime)) {
        const double r = response(phases, sec.signal);
        cumulative *= r;
        out << sec.lambda << ',' << format_double(sec.lambda * std::numbers::pi / (n + 1))
            << ',' << format_double(sec.signal) << ',' << format_double(r) << ','
            << format_double(cumulative) << '\n';
    }
}

void run_compare(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const CommonParams p = common_params(cfg);
    const PseudospinString seed = cfg.require_string("seed");
    for (char c : seed)
        if (c == '+' || c == '-')
            throw ConfigError("compare needs a pure spin seed: fracton seeds have no "
                              "free-fermion reference");
    const bool neel = [&] {
        if (seed.size() < 2 || seed.size() % 2 != 0) return false;
        for (std::size_t m = 0; m < seed.size(); ++m)
            if (seed[m] != (m % 2 == 0 ? 'u' : 'd')) return false;
        return true;
    }();
    if (!neel)
        throw ConfigError("compare needs the alternating seed ud...ud: the product "
                          "formula holds for that state only");

    const int n = static_cast<int>(seed.size());
    const auto phases = cfg.phase_sequence(cfg.get_string("sequence", "bb1"));
    const long long cycles = cfg.get_int("cycles", 5);
    if (cycles < 1) throw ConfigError("cycles must be >= 1");

    const FragmentBasis basis = build_fragment(seed, capacity_of(cfg));
    const DriveSchedule schedule =
        schedule_from_phases(phases, p.coupling_j, p.field_h, p.t_prime);
    const DriveOperators ops =
        make_drive_operators(basis, p.coupling_j, p.field_h, evolve_options(cfg));

    const std::int64_t seed_index = basis.index_of(encode(seed));
    StateVector v = basis_state(basis, seed_index);
    apply_drive(schedule, ops, v);
    const double ed_transition = std::norm(v[seed_index]);
    const double analytic =
        neel_transition_probability(n, phases, p.coupling_j, p.t_prime);

    const Eigen::MatrixXcd u_single = single_particle_unitary(schedule, n);
    CorrelationMatrix corr = neel_correlation(n);
    v = basis_state(basis, seed_index);
    std::vector<double> per_cycle;
    double sigma_max = 0.0;
    for (long long l = 1; l <= cycles; ++l) {
        apply_drive(schedule, ops, v);
        corr = evolve_correlation(corr, u_single);
        const Eigen::VectorXd ed_z = sigma_z_profile(v, basis);
        const Eigen::VectorXd ff_z = sigma_z_from_correlation(corr);
        const double diff = (ed_z - ff_z).cwiseAbs().maxCoeff();
        per_cycle.push_back(diff);
        sigma_max = std::max(sigma_max, diff);
    }

    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(cfg.hash()));
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config"] = hash;
    j["n_cells"] = n;
    j["phases"] = phases;
    j["analytic_transition"] = analytic;
    j["ed_transition"] = ed_transition;
    j["transition_abs_diff"] = std::abs(analytic - ed_transition);
    j["cycles"] = cycles;
    j["sigma_z_max_abs_diff"] = sigma_max;
    j["sigma_z_per_cycle_max_abs_diff"] = per_cycle;
    out << j.dump(2) << '\n';
}

void run_stroboscopic(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const CommonParams p = common_params(cfg);
    const PseudospinString seed = cfg.require_string("seed");
    const auto phases = cfg.phase_sequence(cfg.get_string("sequence", "bb1"));
    const long long cycles = cfg.get_int("cycles", 30);
    if (cycles < 0) throw ConfigError("cycles must be >= 0");

    const FragmentBasis basis = build_fragment(seed, capacity_of(cfg));
    const DriveSchedule schedule =
        schedule_from_phases(phases, p.coupling_j, p.field_h, p.t_prime);
    const DriveOperators ops =
        make_drive_operators(basis, p.coupling_j, p.field_h, evolve_options(cfg));
    const StroboscopicRecord rec =
        stroboscopic_run(basis, ops, schedule, static_cast<int>(cycles),
                         basis_state(basis, encode(seed)));

    write_header(out, cfg, "stroboscopic");
    out << "cycle,cell,sigma_z\n";
    for (int l = 0; l <= rec.cycles; ++l)
        for (int m = 1; m <= rec.n_cells; ++m)
            out << l << ',' << m << ',' << format_double(rec.values(l, m - 1)) << '\n';
}

void run_ensemble(const ExperimentConfig& cfg, std::ostream& out) {
    check_keys(cfg);
    const CommonParams p = common_params(cfg);
    const PseudospinString seed = cfg.require_string("seed");
    const auto phases = cfg.phase_sequence(cfg.get_string("sequence", "bb1"));
    const long long cycles = cfg.get_int("cycles", 30);
    const long long burn_in = cfg.get_int("burn_in", 0);
    if (cycles < 1 || burn_in < 0 || burn_in >= cycles)
        throw ConfigError("need cycles >= 1 and 0 <= burn_in < cycles");

    const FragmentBasis basis = build_fragment(seed, capacity_of(cfg));
    const EvolveOptions opts = evolve_options(cfg);
    const DriveSchedule schedule =
        schedule_from_phases(phases, p.coupling_j, p.field_h, p.t_prime);
    const DriveOperators ops = make_drive_operators(basis, p.coupling_j, p.field_h, opts);
    const StateVector initial = basis_state(basis, encode(seed));
    const StroboscopicRecord rec =
        stroboscopic_run(basis, ops, schedule, static_cast<int>(cycles), initial);

    const Eigen::VectorXd averaged = time_average_profile(rec, static_cast<int>(burn_in));
    const Eigen::VectorXd krylov = krylov_infinite_temperature_profile(basis);

    bool with_diag = cfg.get_bool("diag_ensemble", true);
    if (static_cast<std::int64_t>(basis.dim()) > opts.dense_max) with_diag = false;
    Eigen::VectorXd diag_ens;
    if (with_diag)
        diag_ens = diagonal_ensemble_profile(floquet_unitary(schedule, ops), initial, basis);

    write_header(out, cfg, "ensemble");
    out << "cell,initial,final,time_avg,diag_ensemble,krylov_avg\n";
    for (int m = 1; m <= rec.n_cells; ++m) {
        out << m << ',' << format_double(rec.values(0, m - 1)) << ','
            << format_double(rec.values(rec.cycles, m - 1)) << ','
            << format_double(averaged[m - 1]) << ','
            << (with_diag ? format_double(diag_ens[m - 1]) : "nan") << ','
            << format_double(krylov[m - 1]) << '\n';
    }
}

} // namespace fragqsp
