// JSON views of the toolkit's values. Scalars serialize as exact strings,
// never decimals, so every payload round-trips bit-identically.
#ifndef SUPERBC_JSON_IO_HPP
#define SUPERBC_JSON_IO_HPP

#include <json.hpp>

#include "superbc/borel.hpp"
#include "superbc/interp.hpp"
#include "superbc/kacrep.hpp"
#include "superbc/partition.hpp"
#include "superbc/poly.hpp"
#include "superbc/shimura.hpp"

namespace superbc {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const NaturalCoords& nc);
json to_json(const ExactPoly& f);
json to_json(const InterpResult& r);
json to_json(const VanishingReport& r, const SusyProfile& prof);
json to_json(const MarkedWeight& w);
json to_json(const FdReport& r);
json to_json(const ShimuraVerification& v);
json to_json(const QuasiSphericalReport& r);

}  // namespace superbc

#endif
