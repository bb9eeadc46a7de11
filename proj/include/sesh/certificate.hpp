#pragma once

#include "sesh/cxc.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sesh {

// Versioned JSON wrapper around a nefness certificate: every number is
// string-encoded in the exact coefficient grammar, so a third party can
// re-check the arithmetic without trusting this library's verdict.
nlohmann::json certificate_document(const Genus& g, const CxCClass& cls,
                                    const NefCertificate& cert,
                                    const std::vector<std::string>& command_echo);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// Re-parses a document and re-evaluates its witness arithmetic: the exact
// combination identity, weight signs, per-generator family membership, and
// violation pairings. Never throws on malformed input; problems are
// reported in the result.
CertificateCheck verify_certificate(const nlohmann::json& doc);

// One-line description of a generator family tag.
std::string family_description(const std::string& family);

} // namespace sesh
