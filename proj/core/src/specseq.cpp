#include "fanowalls/specseq.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fanowalls::specseq {

Dim Dim::unknown(int id) {
  Dim d;
  d.unknowns_[id] = 1;
  return d;
}

long Dim::value() const {
  if (!is_known()) throw DomainError("unknown-dimension", "dimension " + to_string() + " is not determined");
  return known_;
}

Dim& Dim::operator+=(const Dim& o) {
  known_ += o.known_;
  for (const auto& [id, c] : o.unknowns_) {
    if ((unknowns_[id] += c) == 0) unknowns_.erase(id);
  }
  return *this;
}

Dim& Dim::operator-=(const Dim& o) {
  known_ -= o.known_;
  for (const auto& [id, c] : o.unknowns_) {
    if ((unknowns_[id] -= c) == 0) unknowns_.erase(id);
  }
  return *this;
}

std::string Dim::to_string() const {
  std::ostringstream os;
  const bool show_constant = known_ != 0 || unknowns_.empty();
  if (show_constant) os << known_;
  bool first = !show_constant;
  for (const auto& [id, c] : unknowns_) {
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << '*' << id;
    first = false;
  }
  return os.str();
}

Dim Dim::parse(const std::string& text) {
  Dim out;
  std::size_t i = 0;
  const auto digits = [&](long& v) {
    const std::size_t start = i;
    v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return i > start;
  };
  if (text.empty()) throw ParseError("empty dimension", 0);
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    long coef = 1;
    const bool has_coef = digits(coef);
    if (!has_coef) coef = 1;
    if (i < text.size() && text[i] == '*') {
      ++i;
      long id;
      if (!digits(id)) throw ParseError("expected unknown index", i);
      Dim u;
      if (coef != 0) u.unknowns_[static_cast<int>(id)] = sign * coef;
      out += u;
    } else if (has_coef) {
      out += Dim(sign * coef);
    } else {
      throw ParseError("expected a term", i);
    }
    first = false;
  }
  return out;
}

Dim PageTable::at(int p, int q) const {
  const auto it = entries.find({p, q});
  return it == entries.end() ? Dim(0) : it->second;
}

void PageTable::set(int p, int q, Dim dim) {
  if (dim.is_known() && dim.value() < 0) {
    throw DomainError("negative-dimension", "entry (" + std::to_string(p) + "," + std::to_string(q) +
                                                ") would be " + dim.to_string());
  }
  if (dim == Dim(0)) {
    entries.erase({p, q});
  } else {
    entries[{p, q}] = std::move(dim);
  }
}

Position target(const PageTable& t, const Position& source) {
  return {source.first + t.page, source.second - t.page + 1};
}

namespace {

std::string pos(const Position& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void check_bound(const Dim& rank, const Dim& dim, const Position& where, const char* role) {
  if (rank.is_known() && dim.is_known() && rank.value() > dim.value()) {
    throw DomainError("infeasible-rank", "rank " + rank.to_string() + " exceeds " + role +
                                             " dimension " + dim.to_string() + " at " + pos(where));
  }
}

}  // namespace

PageTable next_page(const PageTable& t, const DifferentialSpec& d) {
  std::map<Position, Dim> loss;
  for (const auto& [src, rank] : d.ranks) {
    if (rank.is_known() && rank.value() < 0) {
      throw DomainError("infeasible-rank", "negative rank at " + pos(src));
    }
    const Position tgt = target(t, src);
    check_bound(rank, t.at(src.first, src.second), src, "source");
    check_bound(rank, t.at(tgt.first, tgt.second), tgt, "target");
    loss[src] += rank;
    loss[tgt] += rank;
  }
  PageTable out;
  out.page = t.page + 1;
  out.entries = t.entries;
  out.notes = t.notes;
  for (const auto& [where, lost] : loss) {
    const Dim next = t.at(where.first, where.second) - lost;
    if (next.is_known() && next.value() < 0) {
      throw DomainError("infeasible-rank", "entry " + pos(where) + " would become " + next.to_string());
    }
    out.set(where.first, where.second, next);
  }
  return out;
}

std::map<int, Dim> abutment_dims(const PageTable& t) {
  std::map<int, Dim> out;
  for (const auto& [where, dim] : t.entries) out[where.first + where.second] += dim;
  return out;
}

Dim euler_check(const PageTable& t) {
  Dim sum;
  for (const auto& [where, dim] : t.entries) {
    if ((where.first + where.second) % 2 == 0) {
      sum += dim;
    } else {
      sum -= dim;
    }
  }
  return sum;
}

std::string render(const PageTable& t) {
  if (t.entries.empty()) return "(empty page " + std::to_string(t.page) + ")\n";
  std::set<int> ps, qs;
  for (const auto& [where, dim] : t.entries) {
    ps.insert(where.first);
    qs.insert(where.second);
  }
  std::size_t width = 1;
  for (const auto& [where, dim] : t.entries) width = std::max(width, dim.to_string().size());
  std::ostringstream os;
  os << "E_" << t.page << '\n';
  for (auto q = qs.rbegin(); q != qs.rend(); ++q) {
    os << "q=" << *q << " |";
    for (int p = *ps.begin(); p <= *ps.rbegin(); ++p) {
      const std::string cell = t.at(p, *q).to_string();
      os << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  os << "p from " << *ps.begin() << " to " << *ps.rbegin() << '\n';
  return os.str();
}

}  // namespace fanowalls::specseq
