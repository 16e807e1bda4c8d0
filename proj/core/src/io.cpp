#include "padicq/io.hpp"

#include <fstream>
#include <sstream>

#include "padicq/errors.hpp"

namespace padicq {

namespace {

nlohmann::json valuation_json(long v) {
  if (v == kInfiniteValuation) return "inf";
  return v;
}

long valuation_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw DomainError("valuation must be an integer or \"inf\"");
    return kInfiniteValuation;
  }
  return j.get<long>();
}

std::string valuation_text(long v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

}  // namespace

nlohmann::json to_json(const PAdicNumber& x) {
  return {{"p", x.prime()},
          {"valuation", valuation_json(x.valuation())},
          {"unit", x.unit().get_str()},
          {"rel_precision", x.relative_precision()}};
}

PAdicNumber padic_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<unsigned long>();
    const long v = valuation_from_json(j.at("valuation"));
    if (v == kInfiniteValuation) return PAdicNumber::exact_zero(p);
    const mpz_class unit(j.at("unit").get<std::string>());
    const long r = j.at("rel_precision").get<long>();
    if (r < 0) throw DomainError("rel_precision must be non-negative");
    const mpz_class pv = prime_power(p, v >= 0 ? v : -v);
    if (v >= 0) return PAdicNumber::from_residue(unit * pv, p, v + r);
    return PAdicNumber::from_residue(unit, p, r) / PAdicNumber::from_rational(mpq_class(pv), p, r - v + 1);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed p-adic number: ") + e.what());
  }
}

nlohmann::json to_json(const HurwitzSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_json(c));
  return {{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const NumberTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries) entries.push_back(to_json(e));
  nlohmann::json precisions = nlohmann::json::array();
  for (long k : t.precisions()) precisions.push_back(valuation_json(k));
  nlohmann::json out = {{"kind", to_string(t.kind)},
                        {"params", t.params},
                        {"entries", std::move(entries)},
                        {"precisions", std::move(precisions)}};
  if (!t.exact.empty()) {
    nlohmann::json exact = nlohmann::json::array();
    for (const auto& e : t.exact) exact.push_back(e.get_str());
    out["exact"] = std::move(exact);
  }
  return out;
}

nlohmann::json to_json(const DirichletCharacter& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& spec : chi.specs()) {
    if (const auto* i = std::get_if<IntValue>(&spec)) {
      values.push_back({{"int", i->value}});
    } else {
      const auto& t = std::get<TeichPower>(spec);
      values.push_back({{"teich", t.base}, {"pow", t.exponent}});
    }
  }
  return {{"modulus", chi.modulus()}, {"values", std::move(values)}};
}

DirichletCharacter character_from_json(const nlohmann::json& j, const PrimeContext& ctx) {
  try {
    const auto d = j.at("modulus").get<unsigned long>();
    std::vector<CharacterValue> specs;
    for (const auto& v : j.at("values")) {
      if (v.contains("int")) {
        specs.emplace_back(IntValue{v.at("int").get<long>()});
      } else if (v.contains("teich")) {
        specs.emplace_back(TeichPower{v.at("teich").get<long>(), v.value("pow", 1UL)});
      } else {
        throw DomainError("character value must be {\"int\": i} or {\"teich\": a, \"pow\": k}");
      }
    }
    return from_table(d, std::move(specs), ctx);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed character: ") + e.what());
  }
}

DirichletCharacter load_character_file(const std::string& path, const PrimeContext& ctx) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open character file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("character file " + path + " is not valid JSON: " + e.what());
  }
  return character_from_json(j, ctx);
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& inst : report.instances) {
    instances.push_back({{"label", inst.label},
                         {"lhs", to_json(inst.lhs)},
                         {"rhs", to_json(inst.rhs)},
                         {"diff_valuation", valuation_json(inst.diff_valuation)},
                         {"threshold", inst.threshold},
                         {"pass", inst.pass},
                         {"expected_pass", inst.expected_pass},
                         {"details", inst.details}});
  }
  return {{"check", report.check},
          {"params", report.params},
          {"instances", std::move(instances)},
          {"verdict", report.passed() ? "pass" : "fail"},
          {"timing", {{"wall_seconds", report.wall_seconds}}}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "check " << report.check << ' ' << report.params.dump() << '\n';
  for (const auto& inst : report.instances) {
    os << "  " << inst.label << ": v(lhs - rhs) = " << valuation_text(inst.diff_valuation) << " (threshold "
       << inst.threshold << ") " << (inst.pass ? "meets" : "misses");
    if (!inst.expected_pass) os << ", expected to miss";
    os << '\n';
    os << "    lhs = " << inst.lhs << "\n    rhs = " << inst.rhs << '\n';
  }
  os << "verdict " << (report.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

std::string to_text(const NumberTable& t) {
  std::ostringstream os;
  os << to_string(t.kind);
  for (const auto& [k, v] : t.params) os << ' ' << k << '=' << v;
  os << '\n';
  for (std::size_t n = 0; n < t.entries.size(); ++n) {
    os << "  [" << n << "] " << t.entries[n];
    if (n < t.exact.size()) os << "  = " << t.exact[n].get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace padicq
