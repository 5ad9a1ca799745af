#pragma once

// Dimension bookkeeping for first-quadrant-style spectral sequences given by
// ranks of differentials. Page r has d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}.
//
// Entries the source leaves undetermined are symbolic unknowns. A dimension
// is an integer plus an integer combination of unknowns; any sum in which the
// unknowns cancel is a plain integer again.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanowalls/errors.hpp"

namespace fanowalls::specseq {

class Dim {
 public:
  Dim() = default;
  Dim(long value) : known_(value) {}  // NOLINT(google-explicit-constructor)
  static Dim unknown(int id);

  bool is_known() const noexcept { return unknowns_.empty(); }
  /// Throws DomainError("unknown-dimension") if the value is symbolic.
  long value() const;
  long constant() const noexcept { return known_; }
  const std::map<int, long>& unknowns() const noexcept { return unknowns_; }

  Dim& operator+=(const Dim& o);
  Dim& operator-=(const Dim& o);
  friend Dim operator+(Dim a, const Dim& b) { return a += b; }
  friend Dim operator-(Dim a, const Dim& b) { return a -= b; }
  friend Dim operator-(const Dim& a) { return Dim(0) - a; }
  friend bool operator==(const Dim&, const Dim&) = default;

  /// "5", "*0", "2-*0", "1+3*2" (coefficient 3 on unknown 2).
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static Dim parse(const std::string& text);

 private:
  long known_ = 0;
  std::map<int, long> unknowns_;
};

using Position = std::pair<int, int>;  // (p, q)

struct PageTable {
  int page = 1;
  std::map<Position, Dim> entries;
  /// Free-form provenance per entry, e.g. how a printed sum decomposes.
  std::map<Position, std::string> notes;

  /// Zero outside the support.
  Dim at(int p, int q) const;
  /// Drops zero entries; throws DomainError("negative-dimension") for a known
  /// negative entry.
  void set(int p, int q, Dim dim);

  friend bool operator==(const PageTable& x, const PageTable& y) {
    return x.page == y.page && x.entries == y.entries;
  }
};

/// Rank of the page differential leaving each listed position.
struct DifferentialSpec {
  std::map<Position, Dim> ranks;
};

Position target(const PageTable& t, const Position& source);

/// Throws DomainError("infeasible-rank") when a known rank exceeds a known
/// source or target dimension or a resulting dimension would be negative.
PageTable next_page(const PageTable& t, const DifferentialSpec& d);

/// n -> sum over p+q = n, assuming the sequence has degenerated.
std::map<int, Dim> abutment_dims(const PageTable& t);

/// Sum of (-1)^(p+q) dim.
Dim euler_check(const PageTable& t);

/// Renders the table with the highest q row first, columns ascending in p.
std::string render(const PageTable& t);

}  // namespace fanowalls::specseq
