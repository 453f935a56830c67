#include "sylsync/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sylsync/error.hpp"

namespace sylsync {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::order_exceeds_cap: return "OrderExceedsCap";
    case Errc::not_normal: return "NotNormal";
    case Errc::tuple_space_too_large: return "TupleSpaceTooLarge";
    case Errc::wrong_hypothesis: return "WrongHypothesis";
    case Errc::hypothesis_fails: return "HypothesisFails";
    case Errc::not_a_cover: return "NotACover";
    case Errc::redundant: return "Redundant";
    case Errc::prime_too_small: return "PrimeTooSmall";
    case Errc::not_semidirect: return "NotSemidirect";
    case Errc::sylow_too_large: return "SylowTooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(Errc::invalid_permutation, "image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 0xFFFF) throw Error(Errc::invalid_permutation, "degree too large");
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycle_list(std::size_t degree,
                                         const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t x = cycle[i];
      if (x >= degree || used[x])
        throw Error(Errc::invalid_permutation, "cycle point out of range or repeated");
      used[x] = true;
      p.images_[x] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error(Errc::parse_error, "expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw Error(Errc::parse_error, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(Errc::parse_error, "unexpected character at offset " + std::to_string(i));
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycle_list(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return images_.size();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(Errc::degree_mismatch,
                std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = q[p[x]];
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw Error(Errc::degree_mismatch,
                std::to_string(p.degree()) + " vs " + std::to_string(g.degree()));
  // g^-1 p g sends g(x) to g(p(x)).
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[g[x]] = g[p[x]];
  return Permutation::unchecked(std::move(images));
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? p.inverse() : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

void GenSet::validate() const {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(Errc::degree_mismatch, "generator degree " + std::to_string(g.degree()) +
                                             " in a set of degree " + std::to_string(degree));
}

}  // namespace sylsync
