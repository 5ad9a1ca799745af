#include "fanowalls/cli/json_io.hpp"

namespace fanowalls::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("json-error", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json encode(const Rational& q) { return fanowalls::to_string(q); }

Json encode(const numclass::ChernCharacter& e) {
  return Json{{"a0", encode(e[0])}, {"a1", encode(e[1])}, {"a2", encode(e[2])}, {"a3", encode(e[3])}};
}

Json encode(const numclass::FanoContext& ctx) { return Json{{"degree", ctx.degree()}}; }

Json encode(const numclass::HilbertPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.p) coeffs.push_back(encode(c));
  return Json{{"coefficients", coeffs}, {"text", numclass::to_string(p)}};
}

Json encode(const weakstab::TiltPoint& p) { return Json{{"s", encode(p.s())}, {"beta", encode(p.beta())}}; }

Json encode(const weakstab::ChargeValue& z) { return Json{{"re", encode(z.re)}, {"im", encode(z.im)}}; }

Json encode(const walls::Wall& w) {
  if (w.is_vertical()) return Json{{"type", "vertical"}, {"beta0", encode(w.beta0())}};
  return Json{{"type", "semicircle"}, {"center", encode(w.center())}, {"radius_sq", encode(w.radius_sq())}};
}

Json encode(const walls::WallLocus& locus) {
  if (const auto* w = std::get_if<walls::Wall>(&locus)) return encode(*w);
  if (std::holds_alternative<walls::Everywhere>(locus)) return Json{{"type", "everywhere"}};
  return Json{{"type", "nowhere"}};
}

Json encode(const walls::CandidateWall& c) {
  Json j = encode(c.wall);
  j["destabilizer"] = encode(c.destabilizer);
  j["cowall_class"] = encode(c.cowall_class);
  j["q_sub"] = encode(c.q_sub);
  j["q_quot"] = encode(c.q_quot);
  j["sample"] = Json{{"beta", encode(c.sample_beta)}, {"s", encode(c.sample_s)}};
  return j;
}

Json encode(const walls::ScanResult& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(encode(c));
  Json j{{"candidates", cands}, {"complete", r.complete}};
  j["min_radius_sq"] = r.min_radius_sq ? encode(*r.min_radius_sq) : Json(nullptr);
  j["certified_max_rank"] = r.certified_max_rank ? Json(*r.certified_max_rank) : Json(nullptr);
  j["certified_max_c1"] = r.certified_max_c1 ? Json(*r.certified_max_c1) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

Json encode(const kulattice::KuClass& k) { return Json{{"x", k.x}, {"y", k.y}}; }

Json encode(const kulattice::Matrix2& m) {
  return Json::array({Json::array({encode(m.m[0][0]), encode(m.m[0][1])}),
                      Json::array({encode(m.m[1][0]), encode(m.m[1][1])})});
}

Json encode(const specseq::Dim& d) {
  if (d.is_known()) return d.value();
  return d.to_string();
}

Json encode(const specseq::PageTable& t) {
  Json entries = Json::array();
  for (const auto& [where, dim] : t.entries) entries.push_back(Json::array({where.first, where.second, encode(dim)}));
  Json j{{"page", t.page}, {"entries", entries}};
  if (!t.notes.empty()) {
    Json notes = Json::array();
    for (const auto& [where, note] : t.notes) notes.push_back(Json::array({where.first, where.second, note}));
    j["notes"] = notes;
  }
  return j;
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("rational must be a string \"p/q\" or an integer");
}

numclass::ChernCharacter decode_chern(const Json& j) {
  return {decode_rational(field(j, "a0")), decode_rational(field(j, "a1")), decode_rational(field(j, "a2")),
          decode_rational(field(j, "a3"))};
}

numclass::FanoContext decode_context(const Json& j) {
  return numclass::FanoContext(static_cast<int>(as_long(field(j, "degree"), "degree")));
}

weakstab::TiltPoint decode_tilt_point(const Json& j) {
  return weakstab::TiltPoint(decode_rational(field(j, "s")), decode_rational(field(j, "beta")));
}

walls::Wall decode_wall(const Json& j) {
  const Json& type = field(j, "type");
  if (type == "vertical") return walls::Wall::vertical(decode_rational(field(j, "beta0")));
  if (type == "semicircle") {
    return walls::Wall::semicircle(decode_rational(field(j, "center")), decode_rational(field(j, "radius_sq")));
  }
  fail("wall type must be \"vertical\" or \"semicircle\"");
}

walls::CandidateWall decode_candidate(const Json& j) {
  const Json& sample = field(j, "sample");
  return {decode_wall(j),
          decode_chern(field(j, "destabilizer")),
          decode_chern(field(j, "cowall_class")),
          decode_rational(field(j, "q_sub")),
          decode_rational(field(j, "q_quot")),
          decode_rational(field(sample, "beta")),
          decode_rational(field(sample, "s"))};
}

kulattice::KuClass decode_ku_class(const Json& j) {
  return {as_long(field(j, "x"), "x"), as_long(field(j, "y"), "y")};
}

specseq::Dim decode_dim(const Json& j) {
  if (j.is_number_integer()) return specseq::Dim(j.get<long>());
  if (j.is_string()) return specseq::Dim::parse(j.get<std::string>());
  fail("dimension must be an integer or a symbolic string");
}

specseq::PageTable decode_page(const Json& j) {
  specseq::PageTable t;
  t.page = static_cast<int>(as_long(field(j, "page"), "page"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) fail("entry must be [p, q, dim]");
    t.set(static_cast<int>(as_long(e[0], "p")), static_cast<int>(as_long(e[1], "q")), decode_dim(e[2]));
  }
  if (const auto it = j.find("notes"); it != j.end()) {
    for (const auto& n : *it) {
      if (!n.is_array() || n.size() != 3 || !n[2].is_string()) fail("note must be [p, q, text]");
      t.notes[{static_cast<int>(as_long(n[0], "p")), static_cast<int>(as_long(n[1], "q"))}] = n[2].get<std::string>();
    }
  }
  return t;
}

}  // namespace fanowalls::io
