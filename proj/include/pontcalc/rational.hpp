#ifndef PONTCALC_RATIONAL_HPP
#define PONTCALC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <stdexcept>

namespace pontcalc {

// All arithmetic in this project is exact. Sign determinations feed
// combinatorial structures, so no floating point appears anywhere below io.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline int sgn(const Rat& x) { return x.sign(); }

// Parses "p", "-p", "p/q".  Used by the JSON input schema.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& x);

struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
struct rank_error : std::runtime_error {
  explicit rank_error(const std::string& m) : std::runtime_error(m) {}
};
struct structure_error : std::runtime_error {
  explicit structure_error(const std::string& m) : std::runtime_error(m) {}
};
// Local-constancy violation in the Chern presheaf assembly.
struct presheaf_error : std::runtime_error {
  explicit presheaf_error(const std::string& m) : std::runtime_error(m) {}
};
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace pontcalc

#endif
