#pragma once

#include <string>
#include <string_view>

#include "scottmax/diagonal.hpp"
#include "scottmax/opens.hpp"
#include "scottmax/poset.hpp"

namespace scottmax {

// File formats. All readers throw InputError (or ParseError for malformed
// element text) on schema violations; unknown keys are rejected.

/// `{"elements": [...], "leq": [[a,b], ...]}` taken literally (no closure).
Relation relation_from_json(std::string_view text);

/// Same format with reflexive pairs implied and the transitive closure applied.
FinitePoset poset_from_json(std::string_view text);

/// `{"kind":"canonical"}` or `{"name":..., "opens":[{"families":[...]}, ...]}`.
/// `fallback_name` is used when the document carries no name.
IndexedFamily family_from_json(std::string_view text, const std::string& fallback_name);

GenFamily gen_family_from_json(std::string_view text);

/// `{"family":...,"depth":K,"levels":[{"k":1,"n":1,"gen":"x(1,1)"},...],"prefix":[...]}`.
/// Key order is fixed so equal certificates serialize to identical bytes.
std::string certificate_to_json(const DiagCertificate& cert);
DiagCertificate certificate_from_json(std::string_view text);

}  // namespace scottmax
