// fibcycle — generalized Fibonacci cycles modulo m: generation, Pisano
// periods, residue-completeness classification, system enumeration, and
// empirical verification suites for the underlying lemmas.
//
// Exit codes: 0 success / property holds; 1 property violated (or an
// asserted verdict failed); 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibcycle/classification.hpp"
#include "fibcycle/core.hpp"
#include "fibcycle/json_io.hpp"
#include "fibcycle/periods.hpp"
#include "fibcycle/systems.hpp"

namespace {

using nlohmann::json;
using namespace fibcycle;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

// Hard safety ceilings for the overridable caps; exceeding one is a usage
// error, not a bigger computation.
constexpr std::uint64_t enum_cap_ceiling = 4096;      // m^2 visited markers
constexpr std::uint64_t sweep_cap_ceiling = 5000;     // m^2 states per modulus
constexpr std::uint64_t lucas_cap_ceiling = 100000;   // one cycle per modulus
constexpr std::uint64_t verify_max_ceiling = 200;     // seed sweeps are O(m^4)
constexpr std::uint64_t prime_limit_ceiling = 100000;

struct Options {
    std::string format = "json";
    std::vector<std::int64_t> seed;
    std::uint64_t mod = 0;
    bool canonical = false;
    bool oracle = false;
    bool assert_complete = false;
    bool composed = false;
    bool count_only = false;
    std::uint64_t max = 0;
    std::int64_t ternary_j = -1;
    std::string lemma;
    std::uint64_t prime_limit = 1000;
    // Overridable caps (0 = per-command default).
    std::uint64_t cap_mod = modulus_cap;
    std::uint64_t cap_enum = 0;
    std::uint64_t cap_sweep = 1000;
    std::uint64_t cap_lucas = 10000;
};

std::string join_residues(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

// RFC-4180-style: quote a field iff it contains a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_json(const json& payload) { std::cout << payload.dump(2) << "\n"; }

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cells[i]);
        }
        return out;
    };
    std::cout << line(header) << "\n";
    for (const auto& row : rows) std::cout << line(row) << "\n";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

SeedPair parse_seed(const Options& opt) {
    if (opt.seed.size() != 2)
        throw CLI::ValidationError("--seed", "expected exactly two integers a,b");
    if (opt.mod > opt.cap_mod)
        throw std::invalid_argument("modulus exceeds --cap-mod (" +
                                    std::to_string(opt.cap_mod) + ")");
    return reduce_seed(opt.seed[0], opt.seed[1], Modulus(opt.mod));
}

int run_cycle(const Options& opt) {
    const SeedPair seed = parse_seed(opt);
    const Cycle cycle = generate_cycle(seed);
    const InvariantValue inv = characteristic_invariant(seed);
    const bool inv_ok = invariant_check(cycle, seed);
    const std::vector<std::uint64_t>& shown =
        opt.canonical ? cycle.canonical() : cycle.residues();

    if (opt.format == "json") {
        json j{{"seed", seed},
               {"m", seed.m.value()},
               {"length", cycle.length()},
               {"residues", cycle.residues()},
               {"canonical", cycle.canonical()},
               {"invariant", inv},
               {"invariant_ok", inv_ok}};
        emit_json(j);
    } else if (opt.format == "csv") {
        emit_csv({"m", "a", "b", "length", "d", "d_mod_m", "invariant_ok", "residues"},
                 {{std::to_string(seed.m.value()), std::to_string(seed.a),
                   std::to_string(seed.b), std::to_string(cycle.length()),
                   std::to_string(inv.d), std::to_string(inv.d_mod_m), bool_str(inv_ok),
                   join_residues(shown)}});
    } else {
        std::cout << join_residues(shown) << "\n";
    }
    return exit_ok;
}

int run_period(const Options& opt) {
    if (opt.mod > opt.cap_mod)
        throw std::invalid_argument("modulus exceeds --cap-mod");
    const Modulus m(opt.mod);
    if (!opt.seed.empty()) {
        if (opt.composed)
            throw CLI::ValidationError("--composed", "applies to the Pisano period only");
        const SeedPair seed = parse_seed(opt);
        const std::uint64_t k = cycle_length(seed);
        if (opt.format == "json") {
            emit_json(json{{"seed", seed}, {"m", m.value()}, {"k", k}});
        } else if (opt.format == "csv") {
            emit_csv({"m", "a", "b", "k"},
                     {{std::to_string(m.value()), std::to_string(seed.a),
                       std::to_string(seed.b), std::to_string(k)}});
        } else {
            std::cout << k << "\n";
        }
        return exit_ok;
    }
    const PeriodRecord rec =
        pisano_period(m, opt.composed ? PeriodSource::composed : PeriodSource::iterated);
    if (opt.format == "json") {
        emit_json(json(rec));
    } else if (opt.format == "csv") {
        emit_csv({"m", "k_m", "source"},
                 {{std::to_string(rec.m), std::to_string(rec.k_m),
                   rec.source == PeriodSource::iterated ? "iterated" : "composed"}});
    } else {
        std::cout << rec.k_m << "\n";
    }
    return exit_ok;
}

int run_classify(const Options& opt) {
    const SeedPair seed = parse_seed(opt);
    const Classification cls = classify(seed);
    bool oracle_complete = false;
    bool agreement = true;
    if (opt.oracle) {
        oracle_complete = is_residue_complete_oracle(seed);
        agreement = oracle_complete == cls.complete;
    }

    if (opt.format == "json") {
        json j(cls);
        if (opt.oracle) {
            j["oracle_complete"] = oracle_complete;
            j["agreement"] = agreement;
        }
        emit_json(j);
    } else if (opt.format == "csv") {
        std::vector<std::string> header{"m",        "a",          "b",
                                        "d",        "d_mod_m",    "member",
                                        "five_exponent", "residual", "residual_class",
                                        "gcd_value", "complete"};
        std::vector<std::string> row{
            std::to_string(seed.m.value()),        std::to_string(seed.a),
            std::to_string(seed.b),                std::to_string(cls.invariant.d),
            std::to_string(cls.invariant.d_mod_m), bool_str(cls.membership.member),
            std::to_string(cls.membership.five_exponent),
            std::to_string(cls.membership.residual),
            to_string(cls.membership.residual_class),
            std::to_string(cls.gcd_value),         bool_str(cls.complete)};
        if (opt.oracle) {
            header.insert(header.end(), {"oracle_complete", "agreement"});
            row.insert(row.end(), {bool_str(oracle_complete), bool_str(agreement)});
        }
        emit_csv(header, {row});
    } else {
        std::cout << (cls.complete ? "complete" : "incomplete");
        if (opt.oracle) std::cout << (agreement ? " agree" : " disagree");
        std::cout << "\n";
    }
    if (opt.oracle && !agreement) return exit_violation;
    if (opt.assert_complete && !cls.complete) return exit_violation;
    return exit_ok;
}

int run_sweep(const Options& opt) {
    if (opt.cap_sweep > sweep_cap_ceiling)
        throw std::invalid_argument("--cap-sweep exceeds hard ceiling " +
                                    std::to_string(sweep_cap_ceiling));
    if (opt.max > opt.cap_sweep)
        throw std::invalid_argument("--max exceeds sweep cap " +
                                    std::to_string(opt.cap_sweep));
    const SweepReport report = sweep_agreement(opt.max);
    if (opt.format == "json") {
        emit_json(json(report));
    } else if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const Disagreement& d : report.disagreements) {
            rows.push_back({std::to_string(d.a), std::to_string(d.b), std::to_string(d.m),
                            bool_str(d.theorem_verdict), bool_str(d.oracle_verdict)});
        }
        emit_csv({"a", "b", "m", "theorem_verdict", "oracle_verdict"}, rows);
    } else {
        if (report.agree())
            std::cout << "agree " << report.seeds_checked << "\n";
        else
            std::cout << "disagree " << report.disagreements.size() << "\n";
    }
    return report.agree() ? exit_ok : exit_violation;
}

int run_system(const Options& opt) {
    const std::uint64_t cap =
        opt.cap_enum != 0 ? opt.cap_enum
                          : (opt.ternary_j >= 0 ? std::uint64_t{81} : default_enumeration_cap);
    if (cap > enum_cap_ceiling)
        throw std::invalid_argument("--cap-enum exceeds hard ceiling " +
                                    std::to_string(enum_cap_ceiling));

    if (opt.ternary_j >= 0) {
        const TernaryDecompositionReport rep =
            ternary_decomposition_report(static_cast<unsigned>(opt.ternary_j), cap);
        if (opt.format == "json") {
            emit_json(json(rep));
        } else if (opt.format == "csv") {
            emit_csv({"j", "modulus", "system_size", "scaled_count", "embedded_count",
                      "overlap_found", "equal", "holds"},
                     {{std::to_string(rep.j), std::to_string(rep.modulus),
                       std::to_string(rep.system_size), std::to_string(rep.scaled_count),
                       std::to_string(rep.embedded_count), bool_str(rep.overlap_found),
                       bool_str(rep.equal), bool_str(rep.holds())}});
        } else {
            std::cout << (rep.holds() ? "holds" : "fails") << "\n";
        }
        return rep.holds() ? exit_ok : exit_violation;
    }

    if (opt.mod > opt.cap_mod) throw std::invalid_argument("modulus exceeds --cap-mod");
    const Modulus m(opt.mod);
    if (opt.count_only) {
        const std::size_t n = count_cycles(m, cap);
        if (opt.format == "json") {
            emit_json(json{{"m", m.value()}, {"cycle_count", n}});
        } else if (opt.format == "csv") {
            emit_csv({"m", "cycle_count"}, {{std::to_string(m.value()), std::to_string(n)}});
        } else {
            std::cout << n << "\n";
        }
        return exit_ok;
    }
    const SystemCatalog cat = enumerate_system(m, cap);
    if (opt.format == "json") {
        emit_json(json(cat));
    } else if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const Cycle& c : cat.cycles)
            rows.push_back({std::to_string(c.length()), join_residues(c.residues())});
        emit_csv({"length", "residues"}, rows);
    } else {
        for (const Cycle& c : cat.cycles) std::cout << join_residues(c.residues()) << "\n";
    }
    return exit_ok;
}

int run_lucas(const Options& opt) {
    if (opt.cap_lucas > lucas_cap_ceiling)
        throw std::invalid_argument("--cap-lucas exceeds hard ceiling " +
                                    std::to_string(lucas_cap_ceiling));
    if (opt.max > opt.cap_lucas)
        throw std::invalid_argument("--max exceeds lucas cap " +
                                    std::to_string(opt.cap_lucas));
    const std::vector<std::uint64_t> members = lucas_complete_set(opt.max);

    // The classical corollary set: {2, 4, 6, 7, 14} plus the powers of 3.
    std::set<std::uint64_t> reference;
    for (std::uint64_t v : {2ull, 4ull, 6ull, 7ull, 14ull}) {
        if (v <= opt.max) reference.insert(v);
    }
    for (std::uint64_t t = 3; t <= opt.max; t *= 3) {
        reference.insert(t);
        if (t > opt.max / 3) break;
    }
    std::set<std::uint64_t> nontrivial(members.begin(), members.end());
    nontrivial.erase(1);
    const bool matches = nontrivial == reference;
    const bool includes_one = !members.empty() && members.front() == 1;

    if (opt.format == "json") {
        emit_json(json{{"max_m", opt.max},
                       {"members", members},
                       {"reference", std::vector<std::uint64_t>(reference.begin(), reference.end())},
                       {"matches_reference", matches},
                       {"includes_trivial_one", includes_one}});
    } else if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (std::uint64_t v : members)
            rows.push_back({std::to_string(v), bool_str(reference.contains(v) || v == 1)});
        emit_csv({"m", "in_reference"}, rows);
    } else {
        std::cout << join_residues(members) << "\n";
    }
    return matches ? exit_ok : exit_violation;
}

// ---- verification suites -------------------------------------------------

struct SuiteResult {
    std::uint64_t checked = 0;
    json failures = json::array();

    bool pass() const { return failures.empty(); }
};

SuiteResult verify_a1(std::uint64_t max, std::uint64_t prime_limit) {
    SuiteResult res;
    for (std::uint64_t m = 1; m <= max; ++m) {
        for (std::uint64_t n = m + 1; n <= max; ++n) {
            if (gcd_u64(m, n) != 1) continue;
            ++res.checked;
            if (!check_lcm_composition(Modulus(m), Modulus(n)))
                res.failures.push_back(json{{"kind", "lcm"}, {"m", m}, {"n", n}});
        }
    }
    for (std::uint64_t p = 7; p < prime_limit; ++p) {
        if (!is_prime(p)) continue;
        ++res.checked;
        const PrimeDivisibilityReport rep = check_prime_divisibility(p);
        if (!rep.divides)
            res.failures.push_back(json{{"kind", "prime_divisibility"}, {"p", p}});
    }
    const std::vector<std::pair<std::uint64_t, unsigned>> ranges = {{2, 10}, {3, 7}, {5, 5}};
    for (const auto& [base, e_max] : ranges) {
        for (unsigned e = 1; e <= e_max; ++e) {
            ++res.checked;
            if (!check_prime_power_formula(base, e))
                res.failures.push_back(
                    json{{"kind", "prime_power"}, {"base", base}, {"e", e}});
        }
    }
    return res;
}

SuiteResult verify_a2(std::uint64_t max) {
    SuiteResult res;
    for (std::uint64_t m = 1; m <= max; ++m) {
        const Modulus mod(m);
        const std::uint64_t k_m = pisano_period(mod).k_m;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const SeedPair seed(a, b, mod);
                if (gcd_u64(m, unsigned_abs(characteristic_invariant(seed).d)) != 1)
                    continue;
                ++res.checked;
                if (cycle_length(seed) != k_m)
                    res.failures.push_back(json{{"a", a}, {"b", b}, {"m", m}});
            }
        }
    }
    return res;
}

// Checks what the lifting lemmas promise: all_five for every applicable
// seed, and the exact 1:5 length ratio when 5 divides the base modulus.
SuiteResult verify_lift_suite(std::uint64_t max) {
    SuiteResult res;
    for (std::uint64_t m = 1; m <= max; ++m) {
        const Modulus mod(m);
        if (!in_F(mod).member) continue;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const LiftReport rep = verify_lift(SeedPair(a, b, mod));
                if (!rep.applicable) continue;
                ++res.checked;
                if (!rep.all_five)
                    res.failures.push_back(
                        json{{"kind", "preimages"}, {"a", a}, {"b", b}, {"m", m}});
                if (m % 5 == 0 && !rep.ratio_ok)
                    res.failures.push_back(
                        json{{"kind", "ratio"}, {"a", a}, {"b", b}, {"m", m}});
            }
        }
    }
    return res;
}

SuiteResult verify_invariant(std::uint64_t max) {
    SuiteResult res;
    for (std::uint64_t m = 1; m <= max; ++m) {
        const Modulus mod(m);
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const SeedPair seed(a, b, mod);
                ++res.checked;
                if (!invariant_check(generate_cycle(seed), seed))
                    res.failures.push_back(json{{"a", a}, {"b", b}, {"m", m}});
            }
        }
    }
    return res;
}

SuiteResult verify_scaling(std::uint64_t max) {
    SuiteResult res;
    for (std::uint64_t m = 1; m <= max; ++m) {
        const Modulus mod(m);
        const Cycle base = generate_cycle(reduce_seed(0, 1, mod));
        for (std::uint64_t u = 1; u < m || (m == 1 && u == 1); ++u) {
            if (gcd_u64(u, m) != 1) continue;
            ++res.checked;
            const Cycle scaled = scale_cycle(u, base);
            const Cycle direct = generate_cycle(reduce_seed(0, static_cast<std::int64_t>(u), mod));
            if (!cycles_equivalent(scaled, direct))
                res.failures.push_back(json{{"u", u}, {"m", m}});
            if (m == 1) break;
        }
    }
    return res;
}

int run_verify(const Options& opt) {
    if (opt.prime_limit > prime_limit_ceiling)
        throw std::invalid_argument("--prime-limit exceeds hard ceiling " +
                                    std::to_string(prime_limit_ceiling));
    std::uint64_t max = opt.max;
    SuiteResult res;
    if (opt.lemma == "A1") {
        if (max == 0) max = 100;
        if (max > 300) throw std::invalid_argument("--max for A1 exceeds hard ceiling 300");
        res = verify_a1(max, opt.prime_limit);
    } else if (opt.lemma == "A2") {
        if (max == 0) max = 100;
        if (max > verify_max_ceiling)
            throw std::invalid_argument("--max exceeds hard ceiling " +
                                        std::to_string(verify_max_ceiling));
        res = verify_a2(max);
    } else if (opt.lemma == "lift") {
        if (max == 0) max = 100;
        if (max > verify_max_ceiling)
            throw std::invalid_argument("--max exceeds hard ceiling " +
                                        std::to_string(verify_max_ceiling));
        res = verify_lift_suite(max);
    } else if (opt.lemma == "invariant") {
        if (max == 0) max = 50;
        if (max > 150) throw std::invalid_argument("--max for invariant exceeds hard ceiling 150");
        res = verify_invariant(max);
    } else {
        if (max == 0) max = 30;
        if (max > 150) throw std::invalid_argument("--max for scaling exceeds hard ceiling 150");
        res = verify_scaling(max);
    }

    if (opt.format == "json") {
        emit_json(json{{"lemma", opt.lemma},
                       {"max", max},
                       {"checked", res.checked},
                       {"failures", res.failures},
                       {"pass", res.pass()}});
    } else if (opt.format == "csv") {
        emit_csv({"lemma", "max", "checked", "failure_count", "pass"},
                 {{opt.lemma, std::to_string(max), std::to_string(res.checked),
                   std::to_string(res.failures.size()), bool_str(res.pass())}});
    } else {
        std::cout << (res.pass() ? "pass" : "fail") << " " << res.checked << "\n";
    }
    return res.pass() ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Generalized Fibonacci cycles modulo m"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--cap-mod", opt.cap_mod,
                   "Largest accepted modulus (hard ceiling 2^31)")
        ->capture_default_str();
    app.add_option("--cap-enum", opt.cap_enum,
                   "Enumeration cap for system catalogs (default 300, or 81 for --ternary)");
    app.add_option("--cap-sweep", opt.cap_sweep, "Largest accepted sweep --max")
        ->capture_default_str();
    app.add_option("--cap-lucas", opt.cap_lucas, "Largest accepted lucas --max")
        ->capture_default_str();

    CLI::App* cycle = app.add_subcommand("cycle", "Generate the cycle of a seed");
    cycle->add_option("--seed", opt.seed, "Seed a,b (use --seed=-3,7 for negatives)")
        ->delimiter(',')
        ->required();
    cycle->add_option("--mod", opt.mod, "Modulus m")->required();
    cycle->add_flag("--canonical", opt.canonical, "Print the canonical rotation");

    CLI::App* period = app.add_subcommand("period", "Pisano period or seed cycle length");
    period->add_option("--mod", opt.mod, "Modulus m")->required();
    period->add_option("--seed", opt.seed, "Optional seed a,b for k(a,b,m)")->delimiter(',');
    period->add_flag("--composed", opt.composed,
                     "Assemble k(m) from prime-power factors instead of direct iteration");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Residue completeness verdict");
    classify_cmd->add_option("--seed", opt.seed, "Seed a,b")->delimiter(',')->required();
    classify_cmd->add_option("--mod", opt.mod, "Modulus m")->required();
    classify_cmd->add_flag("--oracle", opt.oracle,
                           "Also run the brute-force oracle and report agreement");
    classify_cmd->add_flag("--assert-complete", opt.assert_complete,
                           "Exit 1 unless the verdict is complete");

    CLI::App* sweep = app.add_subcommand("sweep", "Predicate vs oracle over all m <= max");
    sweep->add_option("--max", opt.max, "Largest modulus to sweep")
        ->check(CLI::PositiveNumber)
        ->required();

    CLI::App* system = app.add_subcommand("system", "Enumerate the full cycle system");
    auto* mod_opt = system->add_option("--mod", opt.mod, "Modulus m");
    auto* ternary_opt = system->add_option("--ternary", opt.ternary_j,
                                           "Verify the power-of-3 decomposition for exponent j");
    system->add_flag("--count-only", opt.count_only, "Report only the number of cycles");
    mod_opt->excludes(ternary_opt);
    ternary_opt->check(CLI::PositiveNumber);

    CLI::App* lucas = app.add_subcommand("lucas", "Moduli with a residue-complete Lucas cycle");
    lucas->add_option("--max", opt.max, "Largest modulus to test")
        ->check(CLI::PositiveNumber)
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "Run a lemma verification suite");
    verify->add_option("--lemma", opt.lemma, "One of A1, A2, lift, invariant, scaling")
        ->check(CLI::IsMember({"A1", "A2", "lift", "invariant", "scaling"}))
        ->required();
    verify->add_option("--max", opt.max, "Range limit (per-lemma default if omitted)");
    verify->add_option("--prime-limit", opt.prime_limit, "Prime bound for the A1 suite")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (opt.cap_mod > modulus_cap)
            throw std::invalid_argument("--cap-mod exceeds hard ceiling " +
                                        std::to_string(modulus_cap));
        if (app.got_subcommand(cycle)) return run_cycle(opt);
        if (app.got_subcommand(period)) return run_period(opt);
        if (app.got_subcommand(classify_cmd)) return run_classify(opt);
        if (app.got_subcommand(sweep)) return run_sweep(opt);
        if (app.got_subcommand(system)) {
            if (mod_opt->count() == 0 && ternary_opt->count() == 0)
                throw std::invalid_argument("system: provide --mod or --ternary");
            return run_system(opt);
        }
        if (app.got_subcommand(lucas)) return run_lucas(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
