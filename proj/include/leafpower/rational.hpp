#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <stdexcept>
#include <string>

namespace leafpower {

// Exact rational arithmetic. Every certificate-bearing quantity in this
// library is a Rat; floating point never enters model construction or
// verification.
using Rat = mpq_class;

// Builds num/den in canonical form. Throws on den == 0.
Rat rat(long num, long den = 1);

// Parses "n", "n/d", or a decimal numeral like "-3.25" into an exact value.
Rat rat_from_string(const std::string& s);

// "n" or "n/d", canonical form.
std::string rat_to_string(const Rat& q);

// JSON form: the integer n for whole values that fit in int64, otherwise
// [num, den] with int64 components when representable and decimal strings
// when not. rat_from_json accepts all three shapes.
nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

}  // namespace leafpower
