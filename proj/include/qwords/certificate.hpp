#ifndef QWORDS_CERTIFICATE_HPP_
#define QWORDS_CERTIFICATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qwords/detect.hpp"
#include "qwords/extension.hpp"

namespace qwords {

/// Witness data for the genus characterisation. Variant 1: a Wicks form
/// with a bounded cancellation-free labelling and a bounded conjugator.
/// Variant 2: a specialisation of a genus-n form together with a valid
/// extension whose Hamiltonian label is conjugate to the element.
struct CertificateV1 {
  Word form;                               // over a variable alphabet
  std::map<std::string, Word> labelling;   // form symbol name -> word over X
  Word conjugator;
};

struct CertificateV2 {
  Word specialisation;
  /// The genus-n Wicks form the specialisation came from. Carried in the
  /// certificate because recovering it by enumeration is infeasible past
  /// genus 1; when absent the checker falls back to enumeration at small
  /// genus and reports indeterminate otherwise.
  std::optional<Word> ancestor_form;
  Extension extension;
  Word conjugator;
};

struct GenusCertificate {
  int variant = 1;
  HalfInt genus;
  bool orientable = true;
  std::optional<CertificateV1> v1;
  std::optional<CertificateV2> v2;
};

/// One line per checked condition, for reporting.
struct CertificateReport {
  struct Item {
    std::string name;
    Ternary result;
  };
  std::vector<Item> items;
  Ternary verdict = Ternary::kTrue;

  void add(const std::string& name, Ternary result);
  void add(const std::string& name, bool ok) { add(name, ternary_of(ok)); }
};

/// Checks every condition of the claimed variant at the claimed genus;
/// kUnknown only when a bounded sub-search was inconclusive. Throws on
/// structurally malformed certificates.
Ternary verify_certificate(const Word& h, const GenusCertificate& cert,
                           const GroupOracle& oracle,
                           const SearchBudget& budget = {},
                           CertificateReport* report = nullptr);

struct SearchResult {
  Ternary status = Ternary::kFalse;
  std::optional<GenusCertificate> certificate;
};

/// Bounded search for a certificate at genus exactly n: variant-1
/// labellings over every genus-n form (exact over the free backend at
/// desk lengths), small variant-1 enumerations over finite backends.
/// Absent is definite only under an obstruction or a complete search.
SearchResult search_genus(const Word& h, HalfInt n, bool orientable,
                          const GroupOracle& oracle,
                          const SearchBudget& budget = {});

}  // namespace qwords

#endif  // QWORDS_CERTIFICATE_HPP_
