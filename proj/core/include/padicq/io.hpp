#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "padicq/characters.hpp"
#include "padicq/hurwitz_series.hpp"
#include "padicq/padic.hpp"
#include "padicq/qnumbers.hpp"
#include "padicq/verify.hpp"

namespace padicq {

/// {"p", "valuation": int|"inf", "unit": decimal string, "rel_precision"}.
nlohmann::json to_json(const PAdicNumber& x);
PAdicNumber padic_from_json(const nlohmann::json& j);

/// {"degree": D, "coeffs": [...]}, c_0 first.
nlohmann::json to_json(const HurwitzSeries& f);

/// {"kind", "params", "entries", "precisions"}.
nlohmann::json to_json(const NumberTable& t);

/// {"modulus": d, "values": [{"int": i} | {"teich": a, "pow": k}, ...]}.
nlohmann::json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const nlohmann::json& j, const PrimeContext& ctx);
DirichletCharacter load_character_file(const std::string& path, const PrimeContext& ctx);

/// {"check", "params", "instances": [...], "verdict", "timing"}. Everything but
/// "timing" is a deterministic function of the inputs.
nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);
std::string to_text(const NumberTable& t);

}  // namespace padicq
