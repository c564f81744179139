#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apexis/spatial/laurent.hpp"

namespace apexis {

struct GaussEntry {
  int crossing = 0;
  bool over = false;
  int sign = 1;  // +1 right-handed, -1 left-handed
  bool operator==(const GaussEntry&) const = default;
};

/// Cyclic sequence of crossing passages along one closed curve.
struct SignedGaussCode {
  std::vector<GaussEntry> entries;

  std::size_t crossing_count() const { return entries.size() / 2; }
  int writhe() const;
  /// Each id exactly once over and once under, matching signs. Returns an
  /// empty string when valid, otherwise what is wrong.
  std::string validation_error() const;
  /// e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
  std::string to_string() const;
  bool operator==(const SignedGaussCode&) const = default;
};

/// Parses the to_string() format. Throws ParseError.
SignedGaussCode parse_gauss_code(const std::string& text);

inline constexpr std::size_t kMaxBracketCrossings = 16;

/// Kauffman bracket in A by the full state sum, loops counted on the code's
/// half-edge structure. Throws CapacityError above kMaxBracketCrossings and
/// PreconditionError on an invalid code.
LaurentPolynomial kauffman_bracket(const SignedGaussCode& code);
/// Jones polynomial in t, normalised by the writhe.
LaurentPolynomial jones(const SignedGaussCode& code);

struct ReidemeisterMove {
  enum class Kind { kR1, kR2 };
  Kind kind = Kind::kR1;
  std::vector<int> crossings;  // one id for R1, two for R2
};

/// All R1 / R2 removals available in code, by first position.
std::vector<ReidemeisterMove> available_removals(const SignedGaussCode& code);
/// Applies a removal; throws PreconditionError when the move does not apply.
SignedGaussCode apply_removal(const SignedGaussCode& code, const ReidemeisterMove& move);
/// Replays moves from code and returns the result.
SignedGaussCode replay_moves(const SignedGaussCode& code, const std::vector<ReidemeisterMove>& moves);

/// Inserts a kink with a fresh id before position pos.
SignedGaussCode insert_r1(const SignedGaussCode& code, std::size_t pos, bool over_first, int sign);
/// Inserts two fresh crossings: a pair passing over before position i and
/// the same pair passing under before position j (indices into the
/// original code, i <= j), with opposite signs.
SignedGaussCode insert_r2(const SignedGaussCode& code, std::size_t i, std::size_t j, bool reversed_under);

struct Simplification {
  bool reached_unknot = false;
  std::vector<ReidemeisterMove> moves;
  SignedGaussCode result;  // smallest code reached
  std::size_t explored = 0;
};

/// Greedy removals first; if that stalls, a memoised search over removal
/// orders, bounded by node_budget codes.
Simplification simplify(const SignedGaussCode& code, std::size_t node_budget = 200000);

}  // namespace apexis
