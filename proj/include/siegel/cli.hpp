#ifndef SIEGEL_CLI_HPP
#define SIEGEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "siegel/dirichlet.hpp"
#include "siegel/euler.hpp"
#include "siegel/padic.hpp"
#include "siegel/qexp.hpp"
#include "siegel/symmat.hpp"

#include <json.hpp>

namespace siegel {

// JSON encodings used by the CLI and the file formats.  All numbers are
// serialized as decimal strings; rationals as "a/b".
nlohmann::json to_json(const HalfIntMatrix& beta);
HalfIntMatrix halfint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionParabolic& P);
PartitionParabolic parabolic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QExpansion& f);
QExpansion qexp_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Cyc& v);
Cyc cyc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SatakeData& d, const TameCharacter& phi);
std::pair<SatakeData, TameCharacter> satake_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PadicNumber& x);
PadicNumber padic_from_json(long p, long prec, const nlohmann::json& j);

nlohmann::json to_json(const PadicSeries& f);
PadicSeries series_from_json(const nlohmann::json& j);

// Runs one CLI invocation; writes the RunReport JSON to `out`.
// Returns 0 (success, checks pass), 1 (check failure), 2 (usage error).
int dispatch(const std::vector<std::string>& argv, std::ostream& out);

}  // namespace siegel

#endif
