#pragma once

#include <string>

#include "nullcert/encoders.hpp"
#include "nullcert/nulla.hpp"

namespace nullcert {

// System files: {"variables": [{"name","role"}...], "polys": [[{"coeff",
// "mono"}...]...], "cardinality_index", "m", "kind", "params"}. Stable:
// identical systems serialize byte-identically.
std::string system_to_json(const PolySystem& s);
PolySystem system_from_json(const std::string& text);

// Certificate files: {"degree", "system_hash", "betas", "report"}. The
// report subsection carries wall times and is the only non-reproducible
// part.
std::string certificate_to_json(const Certificate& c, const PolySystem& s,
                                const SolveReport* report = nullptr);

struct LoadedCertificate {
    Certificate cert;
    std::string system_hash;
};

LoadedCertificate certificate_from_json(const std::string& text, const PolySystem& s);

// FNV-1a over the semantic core (variables, polynomials, cardinality).
std::string system_hash(const PolySystem& s);

} // namespace nullcert
