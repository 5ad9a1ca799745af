#pragma once

// JSON encodings. Rationals are written as decimal-free strings ("-3/2") so
// every value survives a round trip exactly; decoders also accept integers.

#include <json.hpp>

#include "fanowalls/kulattice.hpp"
#include "fanowalls/numclass.hpp"
#include "fanowalls/specseq.hpp"
#include "fanowalls/walls.hpp"
#include "fanowalls/weakstab.hpp"

namespace fanowalls::io {

using Json = nlohmann::ordered_json;

Json encode(const Rational& q);
Json encode(const numclass::ChernCharacter& e);
Json encode(const numclass::FanoContext& ctx);
Json encode(const numclass::HilbertPolynomial& p);
Json encode(const weakstab::TiltPoint& p);
Json encode(const weakstab::ChargeValue& z);
Json encode(const walls::Wall& w);
Json encode(const walls::WallLocus& locus);
Json encode(const walls::CandidateWall& c);
Json encode(const walls::ScanResult& r);
Json encode(const kulattice::KuClass& k);
Json encode(const kulattice::Matrix2& m);
Json encode(const specseq::Dim& d);
Json encode(const specseq::PageTable& t);

// Decoders throw Error("json-error") on malformed input.
Rational decode_rational(const Json& j);
numclass::ChernCharacter decode_chern(const Json& j);
numclass::FanoContext decode_context(const Json& j);
weakstab::TiltPoint decode_tilt_point(const Json& j);
walls::Wall decode_wall(const Json& j);
walls::CandidateWall decode_candidate(const Json& j);
kulattice::KuClass decode_ku_class(const Json& j);
specseq::Dim decode_dim(const Json& j);
specseq::PageTable decode_page(const Json& j);

}  // namespace fanowalls::io
