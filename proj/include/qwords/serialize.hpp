#ifndef QWORDS_SERIALIZE_HPP_
#define QWORDS_SERIALIZE_HPP_

#include <string>

#include "qwords/certificate.hpp"
#include "qwords/extension.hpp"

namespace qwords {

/// Extension document: {base_word, cycles: {vertex: [symbols]},
/// labelling: {symbol: word}, partition: [{vertices, genus, orientable}]}.
std::string extension_to_json(const Extension& ext);
Extension extension_from_json(const std::string& text,
                              const AlphabetRef& generators);

std::string certificate_to_json(const GenusCertificate& cert);
GenusCertificate certificate_from_json(const std::string& text,
                                       const AlphabetRef& generators);

Extension load_extension(const std::string& path,
                         const AlphabetRef& generators);
GenusCertificate load_certificate(const std::string& path,
                                  const AlphabetRef& generators);

}  // namespace qwords

#endif  // QWORDS_SERIALIZE_HPP_
