#include "fibcycle/json_io.hpp"

namespace fibcycle {

using nlohmann::json;

void to_json(json& j, const SeedPair& s) {
    j = json{{"a", s.a}, {"b", s.b}, {"m", s.m.value()}};
}

void to_json(json& j, const InvariantValue& v) {
    j = json{{"d", v.d}, {"d_mod_m", v.d_mod_m}};
}

void to_json(json& j, const Cycle& c) {
    j = json{{"m", c.modulus().value()},
             {"length", c.length()},
             {"residues", c.residues()}};
}

void to_json(json& j, const PeriodRecord& r) {
    j = json{{"m", r.m},
             {"k_m", r.k_m},
             {"source", r.source == PeriodSource::iterated ? "iterated" : "composed"}};
}

void to_json(json& j, const PrimeDivisibilityReport& r) {
    j = json{{"p", r.p},
             {"p_mod_5", r.p_mod_5},
             {"k_p", r.k_p},
             {"divisor_bound", r.divisor_bound},
             {"divides", r.divides}};
}

void to_json(json& j, const FMembership& f) {
    j = json{{"member", f.member},
             {"five_exponent", f.five_exponent},
             {"residual", f.residual},
             {"residual_class", to_string(f.residual_class)},
             {"ternary_exponent", f.ternary_exponent}};
}

void to_json(json& j, const Classification& c) {
    j = json{{"seed", c.seed},
             {"invariant", c.invariant},
             {"membership", c.membership},
             {"gcd_value", c.gcd_value},
             {"complete", c.complete}};
}

void to_json(json& j, const Disagreement& d) {
    j = json{{"a", d.a},
             {"b", d.b},
             {"m", d.m},
             {"theorem_verdict", d.theorem_verdict},
             {"oracle_verdict", d.oracle_verdict}};
}

void to_json(json& j, const SweepReport& r) {
    j = json{{"max_m", r.max_m},
             {"seeds_checked", r.seeds_checked},
             {"agree", r.agree()},
             {"disagreements", r.disagreements}};
}

void to_json(json& j, const LiftReport& r) {
    j = json{{"seed", r.seed},
             {"applicable", r.applicable},
             {"base_m", r.base_m},
             {"lifted_m", r.lifted_m},
             {"k_base", r.k_base},
             {"k_lifted", r.k_lifted},
             {"ratio_ok", r.ratio_ok},
             {"preimage_counts", r.preimage_counts},
             {"all_five", r.all_five}};
}

void to_json(json& j, const SystemCatalog& cat) {
    j = json{{"m", cat.m.value()},
             {"cycle_count", cat.size()},
             {"total_states", cat.total_states},
             {"cycles", cat.cycles}};
}

void to_json(json& j, const TernaryDecompositionReport& r) {
    j = json{{"j", r.j},
             {"modulus", r.modulus},
             {"system_size", r.system_size},
             {"scaled_count", r.scaled_count},
             {"embedded_count", r.embedded_count},
             {"overlap_found", r.overlap_found},
             {"equal", r.equal},
             {"holds", r.holds()}};
}

SeedPair seed_from_json(const json& j) {
    return SeedPair(j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>(),
                    Modulus(j.at("m").get<std::uint64_t>()));
}

Cycle cycle_from_json(const json& j) {
    return Cycle(j.at("residues").get<std::vector<std::uint64_t>>(),
                 Modulus(j.at("m").get<std::uint64_t>()));
}

}  // namespace fibcycle
