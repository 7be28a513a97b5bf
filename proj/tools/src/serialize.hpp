#pragma once

#include <json.hpp>

#include <qcarlitz/identities.hpp>
#include <qcarlitz/padic.hpp>
#include <qcarlitz/ratfunc.hpp>

namespace qcarlitz::cli {

using Json = nlohmann::ordered_json;

/// {"num": ["p/q", ...], "den": [...]}, ascending powers of q.
Json to_json(const RatFunc& value);
/// Inverse of to_json; the result is renormalized.
RatFunc ratfunc_from_json(const Json& value);

Json to_json(const IdentityParams& params);
Json to_json(const Padic& value);

}  // namespace qcarlitz::cli
