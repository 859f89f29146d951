#ifndef PFAFF_SERIALIZE_HPP
#define PFAFF_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "pfaff/characters.hpp"
#include "pfaff/kgroup.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/weights.hpp"

namespace pfaff {

using Json = nlohmann::ordered_json;

/// [{"eq":..,"ew":..,"c":..}, ...] sorted by (eq, ew).
Json to_json(const BiLaurentPoly& p);
/// Inverse of to_json. Throws std::invalid_argument on malformed input or a
/// repeated exponent pair.
BiLaurentPoly poly_from_json(const Json& j);

/// {"basis":"Q"|"D","n":..,"coeffs":[poly, ...]}
Json to_json(const KClass& c);
KClass kclass_from_json(const Json& j);

/// {"m","p","bound","checked","zero","nonzero","pass"}, plus "failure" when
/// the check did not pass.
Json to_json(const PushforwardReport& r);
/// {"m","k","bound","e_max","checked","members","pass"}, plus "failure".
Json to_json(const LimitReport& r);

}  // namespace pfaff

#endif  // PFAFF_SERIALIZE_HPP
