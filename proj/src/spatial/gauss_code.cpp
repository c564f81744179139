#include "apexis/spatial/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "apexis/error.hpp"

namespace apexis {

int SignedGaussCode::writhe() const {
  int w = 0;
  for (const GaussEntry& e : entries) {
    if (e.over) w += e.sign;
  }
  return w;
}

std::string SignedGaussCode::validation_error() const {
  struct Seen {
    int over = 0;
    int under = 0;
    int sign = 0;
  };
  std::map<int, Seen> seen;
  for (const GaussEntry& e : entries) {
    if (e.sign != 1 && e.sign != -1) return "crossing " + std::to_string(e.crossing) + " has sign other than +1/-1";
    Seen& s = seen[e.crossing];
    (e.over ? s.over : s.under)++;
    if (s.sign != 0 && s.sign != e.sign) return "crossing " + std::to_string(e.crossing) + " has inconsistent signs";
    s.sign = e.sign;
  }
  for (const auto& [id, s] : seen) {
    if (s.over != 1 || s.under != 1) {
      return "crossing " + std::to_string(id) + " appears " + std::to_string(s.over) + " time(s) over and " +
             std::to_string(s.under) + " time(s) under";
    }
  }
  return {};
}

std::string SignedGaussCode::to_string() const {
  std::string out;
  for (const GaussEntry& e : entries) {
    if (!out.empty()) out += ' ';
    out += e.over ? 'O' : 'U';
    out += std::to_string(e.crossing);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

SignedGaussCode parse_gauss_code(const std::string& text) {
  SignedGaussCode code;
  std::size_t i = 0;
  const auto fail = [&](const std::string& msg) { throw ParseError(1, static_cast<int>(i) + 1, msg); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    GaussEntry e;
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (kind != 'O' && kind != 'U') fail("expected O or U");
    e.over = kind == 'O';
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected crossing number");
    e.crossing = std::stoi(text.substr(start, i - start));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected sign + or -");
    e.sign = text[i] == '+' ? 1 : -1;
    ++i;
    code.entries.push_back(e);
  }
  if (const std::string err = code.validation_error(); !err.empty()) throw ParseError(1, 1, err);
  return code;
}

LaurentPolynomial kauffman_bracket(const SignedGaussCode& code) {
  if (const std::string err = code.validation_error(); !err.empty()) throw PreconditionError(err);
  const std::size_t n = code.crossing_count();
  if (n > kMaxBracketCrossings) {
    throw CapacityError("bracket state sum limited to " + std::to_string(kMaxBracketCrossings) + " crossings, got " +
                        std::to_string(n));
  }
  if (n == 0) return LaurentPolynomial::constant(1);

  // Half-edges of crossing k: 4k over-in, 4k+1 over-out, 4k+2 under-in, 4k+3 under-out.
  std::map<int, int> index;
  std::vector<int> sign(n);
  for (const GaussEntry& e : code.entries) {
    auto [it, fresh] = index.emplace(e.crossing, static_cast<int>(index.size()));
    sign[it->second] = e.sign;
  }
  const std::size_t len = code.entries.size();
  const std::size_t h = 4 * n;
  std::vector<int> along(h);
  const auto in_end = [&](std::size_t p) { return 4 * index[code.entries[p].crossing] + (code.entries[p].over ? 0 : 2); };
  for (std::size_t p = 0; p < len; ++p) {
    const int out = in_end(p) + 1;
    const int in = in_end((p + 1) % len);
    along[out] = in;
    along[in] = out;
  }

  // counts[a - b + n][loops]
  std::vector<std::vector<std::int64_t>> counts(2 * n + 1, std::vector<std::int64_t>(h + 1, 0));
  std::vector<int> across(h);
  std::vector<char> seen(h);
  for (std::uint32_t state = 0; state < (std::uint32_t{1} << n); ++state) {
    int a_minus_b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool b_smoothing = (state >> k) & 1u;
      a_minus_b += b_smoothing ? -1 : 1;
      // Positive crossing: A joins over-in/under-out and over-out/under-in.
      const bool pairs_in_out = (sign[k] > 0) != b_smoothing;
      const int base = static_cast<int>(4 * k);
      if (pairs_in_out) {
        across[base] = base + 3;
        across[base + 3] = base;
        across[base + 1] = base + 2;
        across[base + 2] = base + 1;
      } else {
        across[base] = base + 2;
        across[base + 2] = base;
        across[base + 1] = base + 3;
        across[base + 3] = base + 1;
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = 0;
    for (std::size_t start = 0; start < h; ++start) {
      if (seen[start]) continue;
      ++loops;
      std::size_t x = start;
      do {
        seen[x] = 1;
        const std::size_t y = along[x];
        seen[y] = 1;
        x = across[y];
      } while (x != start);
    }
    counts[a_minus_b + n][loops]++;
  }

  const LaurentPolynomial d = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> d_pow{LaurentPolynomial::constant(1)};
  for (std::size_t i = 1; i <= h; ++i) d_pow.push_back(d_pow.back() * d);
  LaurentPolynomial out;
  for (std::size_t s = 0; s <= 2 * n; ++s) {
    for (std::size_t loops = 1; loops <= h; ++loops) {
      if (counts[s][loops] == 0) continue;
      out += LaurentPolynomial::monomial(counts[s][loops], static_cast<int>(s) - static_cast<int>(n)) * d_pow[loops - 1];
    }
  }
  return out;
}

LaurentPolynomial jones(const SignedGaussCode& code) {
  const int w = code.writhe();
  const LaurentPolynomial normalised = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(code);
  // A = t^(-1/4)
  return normalised.negate_exponents().divide_exponents(4);
}

namespace {

std::vector<std::size_t> positions_of(const SignedGaussCode& code, int id) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < code.entries.size(); ++p) {
    if (code.entries[p].crossing == id) out.push_back(p);
  }
  return out;
}

bool cyclically_adjacent(std::size_t p, std::size_t q, std::size_t len) {
  return (p + 1) % len == q || (q + 1) % len == p;
}

int next_id(const SignedGaussCode& code) {
  int id = 0;
  for (const GaussEntry& e : code.entries) id = std::max(id, e.crossing);
  return id + 1;
}

bool same_move(const ReidemeisterMove& a, const ReidemeisterMove& b) {
  if (a.kind != b.kind) return false;
  std::vector<int> x = a.crossings;
  std::vector<int> y = b.crossings;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace

std::vector<ReidemeisterMove> available_removals(const SignedGaussCode& code) {
  std::vector<ReidemeisterMove> r1;
  std::vector<ReidemeisterMove> r2;
  const std::size_t len = code.entries.size();
  std::set<int> r1_seen;
  std::set<std::pair<int, int>> r2_seen;
  for (std::size_t p = 0; p < len && len >= 2; ++p) {
    const GaussEntry& a = code.entries[p];
    const GaussEntry& b = code.entries[(p + 1) % len];
    if (a.crossing == b.crossing) {
      if (r1_seen.insert(a.crossing).second) r1.push_back({ReidemeisterMove::Kind::kR1, {a.crossing}});
      continue;
    }
    if (a.over != b.over || a.sign != -b.sign) continue;
    const auto pa = positions_of(code, a.crossing);
    const auto pb = positions_of(code, b.crossing);
    const std::size_t qa = pa[0] == p ? pa[1] : pa[0];
    const std::size_t qb = pb[0] == (p + 1) % len ? pb[1] : pb[0];
    if (!cyclically_adjacent(qa, qb, len)) continue;
    const auto key = std::minmax(a.crossing, b.crossing);
    if (r2_seen.insert(key).second) r2.push_back({ReidemeisterMove::Kind::kR2, {key.first, key.second}});
  }
  r1.insert(r1.end(), r2.begin(), r2.end());
  return r1;
}

SignedGaussCode apply_removal(const SignedGaussCode& code, const ReidemeisterMove& move) {
  const auto options = available_removals(code);
  if (std::none_of(options.begin(), options.end(), [&](const ReidemeisterMove& m) { return same_move(m, move); })) {
    throw PreconditionError("Reidemeister removal does not apply to " + code.to_string());
  }
  SignedGaussCode out;
  for (const GaussEntry& e : code.entries) {
    if (std::find(move.crossings.begin(), move.crossings.end(), e.crossing) == move.crossings.end()) {
      out.entries.push_back(e);
    }
  }
  return out;
}

SignedGaussCode replay_moves(const SignedGaussCode& code, const std::vector<ReidemeisterMove>& moves) {
  SignedGaussCode current = code;
  for (const ReidemeisterMove& m : moves) current = apply_removal(current, m);
  return current;
}

SignedGaussCode insert_r1(const SignedGaussCode& code, std::size_t pos, bool over_first, int sign) {
  if (pos > code.entries.size()) throw DomainError("insertion position out of range");
  const int id = next_id(code);
  SignedGaussCode out = code;
  const GaussEntry first{id, over_first, sign};
  const GaussEntry second{id, !over_first, sign};
  out.entries.insert(out.entries.begin() + static_cast<std::ptrdiff_t>(pos), {first, second});
  return out;
}

SignedGaussCode insert_r2(const SignedGaussCode& code, std::size_t i, std::size_t j, bool reversed_under) {
  if (i > j || j > code.entries.size()) throw DomainError("insertion positions out of range");
  const int a = next_id(code);
  const int b = a + 1;
  SignedGaussCode out = code;
  const GaussEntry au{a, false, 1};
  const GaussEntry bu{b, false, -1};
  const auto under = reversed_under ? std::vector<GaussEntry>{bu, au} : std::vector<GaussEntry>{au, bu};
  out.entries.insert(out.entries.begin() + static_cast<std::ptrdiff_t>(j), under.begin(), under.end());
  out.entries.insert(out.entries.begin() + static_cast<std::ptrdiff_t>(i), {GaussEntry{a, true, 1}, GaussEntry{b, true, -1}});
  return out;
}

Simplification simplify(const SignedGaussCode& code, std::size_t node_budget) {
  Simplification result;
  result.result = code;

  SignedGaussCode current = code;
  std::vector<ReidemeisterMove> greedy;
  for (;;) {
    const auto options = available_removals(current);
    if (options.empty()) break;
    current = apply_removal(current, options.front());
    greedy.push_back(options.front());
  }
  result.explored = greedy.size() + 1;
  if (current.entries.empty()) {
    result.reached_unknot = true;
    result.moves = std::move(greedy);
    result.result = current;
    return result;
  }
  if (current.entries.size() < result.result.entries.size()) {
    result.result = current;
    result.moves = greedy;
  }

  std::set<std::vector<int>> visited;
  std::vector<ReidemeisterMove> path;
  std::function<bool(const SignedGaussCode&)> search = [&](const SignedGaussCode& c) {
    if (c.entries.empty()) return true;
    std::vector<int> key;
    for (const GaussEntry& e : c.entries) {
      if (e.over) key.push_back(e.crossing);
    }
    std::sort(key.begin(), key.end());
    if (!visited.insert(std::move(key)).second) return false;
    if (++result.explored > node_budget) return false;
    if (c.entries.size() < result.result.entries.size()) {
      result.result = c;
      result.moves = path;
    }
    for (const ReidemeisterMove& m : available_removals(c)) {
      path.push_back(m);
      if (search(apply_removal(c, m))) return true;
      path.pop_back();
    }
    return false;
  };
  if (search(code)) {
    result.reached_unknot = true;
    result.moves = path;
    result.result = SignedGaussCode{};
  }
  return result;
}

}  // namespace apexis
