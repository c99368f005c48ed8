#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uncomp/bits.hpp"

namespace uncomp {

// Polynomial-with-exponentiation term over naturals.  Variables index the
// family's params followed by its unknowns.
class Poly {
 public:
  enum class Kind { Num, Var, Add, Mul, Pow };

  Poly() = default;  // placeholder; only factory results may be used

  static Poly num(BigNat v);
  static Poly var(std::size_t index);
  static Poly add(Poly a, Poly b);
  static Poly mul(Poly a, Poly b);
  static Poly pow(Poly base, Poly exponent);

  Kind kind() const;
  const BigNat& value() const;  // Num
  std::size_t index() const;    // Var
  const Poly& lhs() const;      // Add, Mul, Pow (base)
  const Poly& rhs() const;      // Add, Mul, Pow (exponent)

 private:
  struct Node;
  explicit Poly(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct DiophantineFamily {
  Poly lhs;
  Poly rhs;
  std::vector<std::string> params;
  std::vector<std::string> unknowns;
  bool exponential = false;
};

// Format (lines separated by newlines or ';', '#' starts a comment):
//   params: a, b          (optional)
//   unknowns: x, y, z
//   exponential: true     (optional, default false)
//   <expr> = <expr>
// expr uses naturals, declared names, +, *, ^ (right associative) and
// parentheses.  Variable exponents need exponential: true.
// Throws ParseError with the 1-based line number.
DiophantineFamily parse_diophantine(std::string_view text);

// Family text with names and flags; parses back to an equal family.
std::string to_string(const DiophantineFamily& f);
std::string to_string(const Poly& p, const std::vector<std::string>& names);

// values: params then unknowns.  Throws DomainError if an exponent exceeds
// the evaluation guard.
BigNat evaluate(const Poly& p, const std::vector<BigNat>& values);

using Assignment = std::vector<std::uint64_t>;

struct SearchOutcome {
  std::uint64_t bound = 0;
  std::vector<Assignment> solutions;  // unknown values, lexicographic order
  std::uint64_t count = 0;
  bool exhausted = false;  // the whole box [0, bound]^m was scanned
};

inline constexpr std::uint64_t kDefaultMaxPoints = 100'000'000;

// Exhaustive scan of [0, bound]^m with exact arithmetic, split by the
// value of the first unknown across `jobs` threads.  Throws DomainError if
// params has the wrong arity.  If the box exceeds max_points nothing is
// scanned and exhausted is false.
SearchOutcome search_solutions(const DiophantineFamily& f, const Assignment& params,
                               std::uint64_t bound, unsigned jobs = 1,
                               std::uint64_t max_points = kDefaultMaxPoints);

// Substitutes the values into the text of the equation, re-parses the
// resulting closed equation and evaluates both sides.
bool verify_witness(const DiophantineFamily& f, const Assignment& params, const Assignment& unknowns);

enum class ProfileClass { ZeroSoFar, Growing, Undetermined };

struct ProfileRow {
  Assignment params;
  std::uint64_t bound = 0;
  std::uint64_t count = 0;
};

struct CountProfile {
  std::vector<ProfileRow> rows;            // params-major, bounds in given order
  std::vector<Assignment> param_values;
  std::vector<ProfileClass> classes;       // one per entry of param_values
};

// Counts for every params value and bound.  A params value is ZeroSoFar if
// all its counts are 0, Growing if they strictly increase along the bounds
// (sorted ascending), else Undetermined.
CountProfile count_profile(const DiophantineFamily& f, const std::vector<Assignment>& param_values,
                           const std::vector<std::uint64_t>& bounds, unsigned jobs = 1);

const char* profile_class_name(ProfileClass c);
std::string count_profile_csv(const DiophantineFamily& f, const CountProfile& p);

}  // namespace uncomp
