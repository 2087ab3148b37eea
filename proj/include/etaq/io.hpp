#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/express.hpp"
#include "etaq/heckeops.hpp"
#include "etaq/search.hpp"
#include "json.hpp"

namespace etaq {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "n:r,n:r"; every n must divide N
EtaExponents parse_exponents(long long N, const std::string& s);
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);
// "a,b,c,d" row-major
MatZ parse_matrix(const std::string& s);

std::string rat_str(const Rat& q);
// -2^2*3*67, or the LaTeX form -2^{2} \cdot 3 \cdot 67
std::string factored(const Int& n, bool latex);
std::string factored(const Rat& q, bool latex);

std::string eta_product_text(const EtaExponents& e);
std::string eta_product_latex(const EtaExponents& e);
std::string identity_text(const Identity& id);
std::string identity_latex(const Identity& id);

std::string exps_tuple(const EtaExponents& e);  // (r_1, ..., r_N) over the divisors

void to_json(nlohmann::json& j, const EtaExponents& e);
void from_json(const nlohmann::json& j, EtaExponents& e);
void to_json(nlohmann::json& j, const QExp24& f);
void from_json(const nlohmann::json& j, QExp24& f);
void to_json(nlohmann::json& j, const AdmissibleL& a);
void from_json(const nlohmann::json& j, AdmissibleL& a);
void to_json(nlohmann::json& j, const PairEntry& p);
void from_json(const nlohmann::json& j, PairEntry& p);
void to_json(nlohmann::json& j, const NewmanReport& r);
void from_json(const nlohmann::json& j, NewmanReport& r);
void to_json(nlohmann::json& j, const ConstantResult& c);
void from_json(const nlohmann::json& j, ConstantResult& c);
void to_json(nlohmann::json& j, const Identity& id);
void from_json(const nlohmann::json& j, Identity& id);

}  // namespace etaq
